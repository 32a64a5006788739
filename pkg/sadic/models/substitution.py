"""
Substitution models
Substitution (letter -> rectangular image), SubstitutionSet, SubstitutionPattern and SizeProfile
"""
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from sadic.errors import (
    AlphabetMismatchError, InvalidArgumentError, ShapeMismatchError, UnknownSubstitutionError
)
from sadic.models.alphabet import Alphabet
from sadic.models.pattern import RectPattern


class Substitution:
    """Total mapping letter -> RectPattern with letter-dependent extents

    Extents are cell counts: the image of a letter with max-index vector k has
    extent k + 1 per axis. Non-degenerate substitutions have every extent >= 2.
    """

    __slots__ = ('name', 'alphabet', 'images', 'widths', 'heights', 'non_degenerate')

    def __init__(self, name: str, alphabet: Alphabet, images: Sequence[RectPattern],
                 non_degenerate: bool = True):
        images = tuple(images)
        if not name or any(ch.isspace() for ch in name):
            raise InvalidArgumentError(f"invalid substitution name {name!r}")
        if len(images) != len(alphabet):
            raise InvalidArgumentError(
                f"substitution {name!r} has {len(images)} images for {len(alphabet)} letters")
        for letter, image in enumerate(images):
            if image.alphabet != alphabet:
                raise AlphabetMismatchError(
                    f"image of {alphabet.glyph(letter)!r} under {name!r} uses another alphabet")
            if non_degenerate and (image.width < 2 or image.height < 2):
                raise InvalidArgumentError(
                    f"degenerate image of {alphabet.glyph(letter)!r} under {name!r}: "
                    f"{image.width}x{image.height}")
        self.name = name
        self.alphabet = alphabet
        self.images = images
        self.widths = np.array([image.width for image in images], dtype=np.int64)
        self.heights = np.array([image.height for image in images], dtype=np.int64)
        self.widths.setflags(write=False)
        self.heights.setflags(write=False)
        self.non_degenerate = non_degenerate

    @classmethod
    def from_rows(cls, name: str, alphabet: Alphabet, rules: Dict[str, Sequence[str]],
                  non_degenerate: bool = True) -> 'Substitution':
        """Build from glyph -> rows (top row first)"""
        missing = [glyph for glyph in alphabet.glyphs if glyph not in rules]
        if missing:
            raise InvalidArgumentError(f"substitution {name!r} has no image for {missing}")
        images = [RectPattern.from_rows(alphabet, rules[glyph]) for glyph in alphabet.glyphs]
        return cls(name, alphabet, images, non_degenerate=non_degenerate)

    def image(self, letter: int) -> RectPattern:
        return self.images[letter]

    def extent(self, letter: int) -> Tuple[int, int]:
        """(width, height) of the image of a letter"""
        return int(self.widths[letter]), int(self.heights[letter])

    @property
    def uniform_support(self) -> bool:
        """True if every image has the same extents"""
        return bool((self.widths == self.widths[0]).all() and (self.heights == self.heights[0]).all())

    @property
    def uniform_width(self) -> Optional[int]:
        return int(self.widths[0]) if (self.widths == self.widths[0]).all() else None

    @property
    def min_extent(self) -> int:
        return int(min(self.widths.min(), self.heights.min()))

    @property
    def max_extent(self) -> int:
        return int(max(self.widths.max(), self.heights.max()))

    @property
    def letter_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def renamed(self, name: str) -> 'Substitution':
        return Substitution(name, self.alphabet, self.images, non_degenerate=self.non_degenerate)

    def rules(self) -> Dict[str, List[str]]:
        """glyph -> rows (top row first)"""
        return {self.alphabet.glyph(letter): image.to_rows() for letter, image in enumerate(self.images)}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Substitution):
            return NotImplemented
        return self.name == other.name and self.alphabet == other.alphabet and self.images == other.images

    def __hash__(self) -> int:
        return hash((self.name, self.alphabet, self.images))

    def __reduce__(self):
        return (self.__class__, (self.name, self.alphabet, self.images, self.non_degenerate))

    def __repr__(self) -> str:
        return f"Substitution({self.name!r})"


class SubstitutionSet:
    """Finite ordered set of substitutions over one alphabet, with distinct names"""

    __slots__ = ('alphabet', 'members', '_by_name')

    def __init__(self, alphabet: Alphabet, members: Sequence[Substitution]):
        members = tuple(members)
        if not members:
            raise InvalidArgumentError("substitution set must be nonempty")
        by_name = {}
        for member in members:
            if member.alphabet != alphabet:
                raise AlphabetMismatchError(f"substitution {member.name!r} uses another alphabet")
            if member.name in by_name:
                raise InvalidArgumentError(f"duplicate substitution name {member.name!r}")
            by_name[member.name] = member
        self.alphabet = alphabet
        self.members = members
        self._by_name = by_name

    def get(self, name: str) -> Substitution:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownSubstitutionError(name) from None

    def index(self, name: str) -> int:
        return self.names.index(self.get(name).name)

    @property
    def names(self) -> List[str]:
        return [member.name for member in self.members]

    @property
    def min_width(self) -> int:
        return int(min(member.widths.min() for member in self.members))

    @property
    def min_height(self) -> int:
        return int(min(member.heights.min() for member in self.members))

    @property
    def min_extent(self) -> int:
        return min(member.min_extent for member in self.members)

    @property
    def max_extent(self) -> int:
        return max(member.max_extent for member in self.members)

    def subset(self, names: Sequence[str]) -> 'SubstitutionSet':
        return SubstitutionSet(self.alphabet, [self.get(name) for name in names])

    def __contains__(self, item) -> bool:
        if isinstance(item, Substitution):
            return self._by_name.get(item.name) == item
        return item in self._by_name

    def __iter__(self) -> Iterator[Substitution]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        return isinstance(other, SubstitutionSet) and self.alphabet == other.alphabet \
            and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.alphabet, self.members))

    def __reduce__(self):
        return (self.__class__, (self.alphabet, self.members))

    def __repr__(self) -> str:
        return f"SubstitutionSet({self.names})"


class SubstitutionPattern:
    """Rectangular array of substitution names from a set (indexed [y, x], y upward)"""

    __slots__ = ('subs', 'entries', '_hash')

    def __init__(self, subs: SubstitutionSet, entries):
        entries = np.array(entries, dtype=np.int32)
        if entries.ndim != 2 or entries.size == 0:
            raise InvalidArgumentError("substitution pattern needs a nonempty 2-d array")
        if entries.min() < 0 or entries.max() >= len(subs):
            raise InvalidArgumentError("substitution pattern entry outside the set")
        entries.setflags(write=False)
        self.subs = subs
        self.entries = entries
        self._hash = None

    @classmethod
    def from_rows(cls, subs: SubstitutionSet, rows: Sequence) -> 'SubstitutionPattern':
        """Rows top-to-bottom; each row a whitespace-separated string or a list of names"""
        parsed = [row.split() if isinstance(row, str) else list(row) for row in rows]
        if not parsed or any(len(row) != len(parsed[0]) for row in parsed):
            raise ShapeMismatchError("substitution pattern rows must be nonempty and of equal length")
        return cls(subs, [[subs.index(name) for name in row] for row in reversed(parsed)])

    @classmethod
    def from_text(cls, subs: SubstitutionSet, text: str) -> 'SubstitutionPattern':
        separator = '\n' if '\n' in text.strip() else '/'
        return cls.from_rows(subs, [row for row in text.strip().split(separator) if row.strip()])

    @classmethod
    def constant(cls, subs: SubstitutionSet, name: str, width: int, height: int) -> 'SubstitutionPattern':
        return cls(subs, np.full((height, width), subs.index(name), dtype=np.int32))

    @property
    def width(self) -> int:
        return self.entries.shape[1]

    @property
    def height(self) -> int:
        return self.entries.shape[0]

    def at(self, x: int, y: int) -> Substitution:
        return self.subs.members[int(self.entries[y, x])]

    def to_rows(self) -> List[str]:
        names = self.subs.names
        return [' '.join(names[v] for v in row) for row in self.entries[::-1]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubstitutionPattern):
            return NotImplemented
        return self.subs == other.subs and bool(np.array_equal(self.entries, other.entries))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.entries.shape, self.entries.tobytes()))
        return self._hash

    def __reduce__(self):
        return (self.__class__, (self.subs, np.array(self.entries)))

    def __repr__(self) -> str:
        return f"SubstitutionPattern({' / '.join(self.to_rows())!r})"


@dataclass(frozen=True)
class SizeProfile:
    """Per-axis block extents over a coordinate range

    horizontal[i] is the extent of column h_start + i, vertical[j] the extent of
    row v_start + j.
    """
    horizontal: Tuple[int, ...]
    vertical: Tuple[int, ...]
    h_start: int = 0
    v_start: int = 0

    def __post_init__(self):
        if any(e < 1 for e in self.horizontal + self.vertical):
            raise InvalidArgumentError("profile extents must be >= 1")

    def axis(self, axis: str) -> Tuple[Tuple[int, ...], int]:
        if axis in ('horizontal', 'h', 'x'):
            return self.horizontal, self.h_start
        if axis in ('vertical', 'v', 'y'):
            return self.vertical, self.v_start
        raise InvalidArgumentError(f"unknown axis {axis!r}")
