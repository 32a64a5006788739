"""Result models returned by the language, derivation and property-A services"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, List, Optional, Tuple

from sadic.errors import InvalidArgumentError
from sadic.models.pattern import RectPattern, canonical


class LanguageMode(str, Enum):
    """Which subshift a finite-window language approximates"""
    LOCAL_SEQ = 'local-seq'
    GLOBAL_SEQ = 'global-seq'
    LOCAL_SET = 'local-set'
    GLOBAL_SET = 'global-set'


@dataclass(frozen=True)
class LanguageQuery:
    mode: LanguageMode
    level: int
    width: int
    height: int

    def __post_init__(self):
        if self.level < 0 or self.width < 1 or self.height < 1:
            raise InvalidArgumentError(
                f"invalid language query: level={self.level}, window={self.width}x{self.height}")


class WindowSet:
    """Canonical deduplicated set of same-shape patterns computed at a level"""

    __slots__ = ('width', 'height', 'level', 'members', '_lookup')

    def __init__(self, width: int, height: int, level: int, members: Iterable[RectPattern]):
        members = tuple(canonical(members))
        for member in members:
            if member.shape != (width, height):
                raise InvalidArgumentError(
                    f"window set member of shape {member.shape} in a {width}x{height} set")
        self.width = width
        self.height = height
        self.level = level
        self.members = members
        self._lookup = frozenset(members)

    def __contains__(self, pattern) -> bool:
        return pattern in self._lookup

    def __iter__(self) -> Iterator[RectPattern]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def issubset(self, other: 'WindowSet') -> bool:
        return self._lookup <= other._lookup

    def difference(self, other: 'WindowSet') -> 'WindowSet':
        removed = other._lookup
        return WindowSet(self.width, self.height, self.level, [p for p in self.members if p not in removed])

    def map(self, func) -> 'WindowSet':
        """Apply a pattern -> pattern map memberwise (e.g. a projection)"""
        return WindowSet(self.width, self.height, self.level, [func(p) for p in self.members])

    def __eq__(self, other) -> bool:
        if not isinstance(other, WindowSet):
            return NotImplemented
        return (self.width, self.height) == (other.width, other.height) and self.members == other.members

    def __repr__(self) -> str:
        return f"WindowSet({self.width}x{self.height}, level={self.level}, {len(self.members)} members)"


@dataclass(frozen=True)
class ParseResult:
    """One desubstitution of a pattern by a single substitution

    The pattern's cell (0, 0) sits at cell ``offset`` of the preimage's first
    (lower-left) block; ``cropped`` tells whether boundary blocks are partial.
    """
    substitution: str
    offset: Tuple[int, int]
    preimage: RectPattern
    cropped: bool
    columns: Tuple[int, ...] = field(default=(), compare=False)
    rows: Tuple[int, ...] = field(default=(), compare=False)

    def sort_key(self):
        return self.substitution, self.offset, self.preimage.sort_key()


@dataclass(frozen=True)
class AmbiguityReport:
    """Candidates that still coexist when the sample budget is exhausted"""
    candidates: Tuple[ParseResult, ...]
    window: Tuple[int, int]
    stage: int = 0
    recovered: Tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.candidates) < 2:
            raise InvalidArgumentError("an ambiguity report needs at least two candidates")

    @property
    def names(self) -> List[str]:
        return sorted({c.substitution for c in self.candidates})


@dataclass(frozen=True)
class UniqueDerivationCounterexample:
    window: RectPattern
    parses: Tuple[ParseResult, ...]


class PropertyAStatus(str, Enum):
    HOLDS_UNIFORM_SUPPORT = 'holds-uniform-support'
    HOLDS_SINGLETON = 'holds-singleton'
    NO_COUNTEREXAMPLE = 'no-counterexample-up-to-bounds'
    COUNTEREXAMPLE = 'counterexample'
    UNKNOWN = 'unknown'


@dataclass(frozen=True)
class PropertyAWitness:
    """An S-pattern p, the placement of a 2x2 block l in it, and the l-chain with no extension"""
    pattern: RectPattern
    placement: Tuple[int, int]
    chain: Tuple  # substitution patterns s_1..s_n applied to l
    blocks: Tuple[RectPattern, ...]  # l_0 = l, l_1, ..., l_n


@dataclass(frozen=True)
class PropertyAVerdict:
    status: PropertyAStatus
    witness: Optional[PropertyAWitness] = None
    checked: int = 0

    def __post_init__(self):
        if self.status is PropertyAStatus.COUNTEREXAMPLE and self.witness is None:
            raise InvalidArgumentError("a counterexample verdict needs a witness")

    @property
    def holds(self) -> bool:
        return self.status in (PropertyAStatus.HOLDS_UNIFORM_SUPPORT, PropertyAStatus.HOLDS_SINGLETON)
