"""
Rectangular pattern model
Cells are stored as a read-only numpy array indexed [y, x] with y increasing upward;
text rows are listed top-to-bottom, matching printed tables.
"""
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from sadic.errors import InvalidArgumentError
from sadic.models.alphabet import Alphabet


class RectPattern:
    """Finite rectangular array of letters over an alphabet"""

    __slots__ = ('alphabet', 'cells', '_hash')

    def __init__(self, alphabet: Alphabet, cells):
        cells = np.array(cells, dtype=np.int32)
        if cells.ndim != 2 or cells.shape[0] < 1 or cells.shape[1] < 1:
            raise InvalidArgumentError(f"pattern needs a nonempty 2-d cell array, got shape {cells.shape}")
        if cells.min() < 0 or cells.max() >= len(alphabet):
            raise InvalidArgumentError("pattern cell outside the alphabet")
        cells.setflags(write=False)
        self.alphabet = alphabet
        self.cells = cells
        self._hash = None

    # ========== Construction ==========

    @classmethod
    def from_rows(cls, alphabet: Alphabet, rows: Sequence) -> 'RectPattern':
        """Build from rows listed top-to-bottom

        Each row is either a string (one character per cell when the alphabet is
        single-character, whitespace-separated glyphs otherwise) or a sequence of
        glyphs.
        """
        parsed = [_split_row(alphabet, row) for row in rows]
        if not parsed or not parsed[0]:
            raise InvalidArgumentError("pattern has no cells")
        width = len(parsed[0])
        for y, row in enumerate(parsed):
            if len(row) != width:
                raise InvalidArgumentError(f"ragged rows: row {y} has {len(row)} cells, expected {width}")
        cells = [[alphabet.letter(glyph) for glyph in row] for row in reversed(parsed)]
        return cls(alphabet, cells)

    @classmethod
    def from_text(cls, alphabet: Alphabet, text: str) -> 'RectPattern':
        """Parse newline- or '/'-separated rows, top row first"""
        separator = '\n' if '\n' in text.strip() else '/'
        rows = [row.strip() for row in text.strip().split(separator)]
        return cls.from_rows(alphabet, [row for row in rows if row])

    @classmethod
    def filled(cls, alphabet: Alphabet, letter: int, width: int, height: int) -> 'RectPattern':
        return cls(alphabet, np.full((height, width), letter, dtype=np.int32))

    @classmethod
    def single(cls, alphabet: Alphabet, letter: int) -> 'RectPattern':
        return cls.filled(alphabet, letter, 1, 1)

    # ========== Shape and access ==========

    @property
    def width(self) -> int:
        return self.cells.shape[1]

    @property
    def height(self) -> int:
        return self.cells.shape[0]

    @property
    def shape(self) -> Tuple[int, int]:
        """(width, height)"""
        return self.width, self.height

    def at(self, x: int, y: int) -> int:
        if not (0 <= x < self.width and 0 <= y < self.height):
            raise InvalidArgumentError(f"cell ({x}, {y}) outside {self.width}x{self.height} pattern")
        return int(self.cells[y, x])

    def crop(self, x: int, y: int, width: int, height: int) -> 'RectPattern':
        """Sub-rectangle with lower-left corner (x, y)"""
        if x < 0 or y < 0 or width < 1 or height < 1 or x + width > self.width or y + height > self.height:
            raise InvalidArgumentError(
                f"box ({x}, {y}, {width}x{height}) outside {self.width}x{self.height} pattern")
        return RectPattern(self.alphabet, self.cells[y:y + height, x:x + width])

    def letters(self) -> List[int]:
        """Distinct letters occurring in the pattern"""
        return sorted(int(v) for v in np.unique(self.cells))

    # ========== Serialization ==========

    def to_rows(self) -> List[str]:
        """Glyph rows, top row first"""
        glyphs = self.alphabet.glyphs
        joiner = '' if self.alphabet.single_character else ' '
        return [joiner.join(glyphs[v] for v in row) for row in self.cells[::-1]]

    def to_text(self) -> str:
        return '\n'.join(self.to_rows())

    def sort_key(self):
        """Canonical order: (width, height, rows top-to-bottom)"""
        return self.width, self.height, tuple(self.to_rows())

    # ========== Value semantics ==========

    def __eq__(self, other) -> bool:
        if not isinstance(other, RectPattern):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.cells.shape == other.cells.shape
                and bool(np.array_equal(self.cells, other.cells)))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.alphabet, self.cells.shape, self.cells.tobytes()))
        return self._hash

    def __lt__(self, other: 'RectPattern') -> bool:
        return self.sort_key() < other.sort_key()

    def __reduce__(self):
        return (self.__class__, (self.alphabet, np.array(self.cells)))

    def __repr__(self) -> str:
        return f"RectPattern({'/'.join(self.to_rows())!r})"


def canonical(patterns: Iterable[RectPattern]) -> List[RectPattern]:
    """Deduplicate and sort in canonical order"""
    return sorted(set(patterns), key=RectPattern.sort_key)


def _split_row(alphabet: Alphabet, row) -> List[str]:
    if isinstance(row, str):
        if alphabet.single_character and not any(ch.isspace() for ch in row.strip()):
            return list(row.strip())
        return row.split()
    return list(row)
