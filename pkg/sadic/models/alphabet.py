"""Alphabet model - ordered glyphs indexed 0..|A|-1"""
from typing import Iterable, Iterator, Tuple

from sadic.errors import InvalidArgumentError


class Alphabet:
    """Finite ordered alphabet

    Letters are plain integer indices; glyphs are the printable symbols shown in
    pattern files. Base alphabets loaded from documents use one-character glyphs,
    derived alphabets (decorated letters, substitution names) may use longer
    labels.
    """

    __slots__ = ('_glyphs', '_index')

    def __init__(self, glyphs: Iterable[str]):
        glyphs = tuple(glyphs)
        if not glyphs:
            raise InvalidArgumentError("alphabet must be nonempty")
        for glyph in glyphs:
            if not isinstance(glyph, str) or not glyph or any(ch.isspace() for ch in glyph):
                raise InvalidArgumentError(f"invalid glyph {glyph!r}")
        if len(set(glyphs)) != len(glyphs):
            raise InvalidArgumentError(f"glyphs must be pairwise distinct: {glyphs}")
        self._glyphs = glyphs
        self._index = {glyph: i for i, glyph in enumerate(glyphs)}

    @property
    def glyphs(self) -> Tuple[str, ...]:
        return self._glyphs

    @property
    def single_character(self) -> bool:
        """True if every glyph is one character (rows print without separators)"""
        return all(len(glyph) == 1 for glyph in self._glyphs)

    def letter(self, glyph: str) -> int:
        """Index of a glyph"""
        try:
            return self._index[glyph]
        except KeyError:
            raise InvalidArgumentError(f"unknown glyph {glyph!r}") from None

    def glyph(self, letter: int) -> str:
        if not 0 <= letter < len(self._glyphs):
            raise InvalidArgumentError(f"letter index {letter} out of range")
        return self._glyphs[letter]

    def __contains__(self, glyph) -> bool:
        return glyph in self._index

    def __len__(self) -> int:
        return len(self._glyphs)

    def __iter__(self) -> Iterator[int]:
        return iter(range(len(self._glyphs)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self._glyphs == other._glyphs

    def __hash__(self) -> int:
        return hash(self._glyphs)

    def __reduce__(self):
        return (self.__class__, (self._glyphs,))

    def __repr__(self) -> str:
        return f"Alphabet({list(self._glyphs)!r})"
