"""Decorated alphabet model - letters carrying (s_V, s_H) history decorations"""
from dataclasses import dataclass
from itertools import product
from typing import Sequence, Tuple

from sadic.errors import InvalidArgumentError, UnknownSubstitutionError
from sadic.models.alphabet import Alphabet

LIFT_MARKER = '~'
DECORATION_SEPARATOR = ':'


@dataclass(frozen=True)
class DecoratedLetter:
    """(a, s_V, s_H): a base letter index with two substitution names"""
    base: int
    v_dec: str
    h_dec: str


class DecoratedAlphabet(Alphabet):
    """A x S x S, ordered by base letter, then V name, then H name

    Glyphs are labels ``a:sV:sH`` built from the base glyph and the names.
    """

    __slots__ = ('base', 'names', '_triples')

    def __init__(self, base: Alphabet, names: Sequence[str]):
        if isinstance(base, DecoratedAlphabet):
            raise InvalidArgumentError("cannot decorate an already decorated alphabet")
        names = tuple(names)
        for name in names:
            if DECORATION_SEPARATOR in name:
                raise InvalidArgumentError(f"substitution name {name!r} contains {DECORATION_SEPARATOR!r}")
        triples = tuple(product(range(len(base)), names, names))
        super().__init__(
            DECORATION_SEPARATOR.join((base.glyph(a), v, h)) for a, v, h in triples)
        self.base = base
        self.names = names
        self._triples = triples

    def decode(self, letter: int) -> DecoratedLetter:
        a, v, h = self._triples[letter]
        return DecoratedLetter(a, v, h)

    def encode(self, decorated: DecoratedLetter) -> int:
        for name in (decorated.v_dec, decorated.h_dec):
            if name not in self.names:
                raise UnknownSubstitutionError(name)
        if not 0 <= decorated.base < len(self.base):
            raise InvalidArgumentError(f"base letter {decorated.base} out of range")
        count = len(self.names)
        return (decorated.base * count + self.names.index(decorated.v_dec)) * count \
            + self.names.index(decorated.h_dec)

    def components(self) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
        """Per-letter base index, V-name index, H-name index"""
        bases, vs, hs = [], [], []
        for a, v, h in self._triples:
            bases.append(a)
            vs.append(self.names.index(v))
            hs.append(self.names.index(h))
        return tuple(bases), tuple(vs), tuple(hs)

    def __eq__(self, other) -> bool:
        return isinstance(other, DecoratedAlphabet) and self.base == other.base and self.names == other.names

    def __hash__(self) -> int:
        return hash((self.base, self.names))

    def __reduce__(self):
        return (self.__class__, (self.base, self.names))

    def __repr__(self) -> str:
        return f"DecoratedAlphabet({list(self.base.glyphs)!r}, {list(self.names)!r})"


@dataclass(frozen=True)
class DecoratedSystem:
    """A base substitution set and its lift to the decorated alphabet

    ``lifted_set`` holds one lifted substitution per base member, named with the
    lift marker in front of the base name.
    """
    base_set: object
    lifted_set: object
    alphabet: DecoratedAlphabet

    def lifted_name(self, name: str) -> str:
        if name not in self.base_set:
            raise UnknownSubstitutionError(name)
        return LIFT_MARKER + name

    def lift_sequence(self, seq):
        """The base sequence with every name replaced by its lifted name"""
        return seq.renamed({name: LIFT_MARKER + name for name in self.base_set.names})

    def letter(self, base: int, v_dec: str, h_dec: str) -> int:
        return self.alphabet.encode(DecoratedLetter(base, v_dec, h_dec))
