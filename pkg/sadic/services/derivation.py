"""
Derivation Service
Desubstitution of patterns into grids of substitution images, recovery of the
substitution sequence from growing samples and a bounded unique-derivation check
"""
import logging
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple, Union

import numpy as np
from joblib import Parallel, delayed

from sadic.errors import BudgetExceededError, InvalidArgumentError, UnparseableSampleError
from sadic.models import (
    AmbiguityReport, ParseResult, RectPattern, Substitution, SubstitutionSet,
    UniqueDerivationCounterexample
)
from sadic.services.grid import apply_uniform
from sadic.services.language import LanguageEnumerator

logger = logging.getLogger(__name__)

ANCHORED = 'anchored'
WINDOWED = 'windowed'
PARSE_MODES = (ANCHORED, WINDOWED)


# ========== Single-substitution parser ==========

class _GridParser:
    """Tilings of one pattern by the images of one substitution"""

    def __init__(self, p: RectPattern, s: Substitution, anchored: bool, budget: int):
        self.p = p
        self.s = s
        self.anchored = anchored
        self.budget = budget
        self.widths = sorted(set(int(w) for w in s.widths))
        self.heights = sorted(set(int(h) for h in s.heights))
        self.by_extent: Dict[Tuple[int, int], List[int]] = {}
        for letter in s.alphabet:
            self.by_extent.setdefault(s.extent(letter), []).append(letter)
        self._memo: Dict[Tuple[int, int, int, int], List[int]] = {}
        self.produced = 0

    def _visible(self, x: int, y: int, c: int, r: int):
        return max(x, 0), min(x + c, self.p.width), max(y, 0), min(y + r, self.p.height)

    def block_letters(self, x: int, y: int, c: int, r: int) -> List[int]:
        """Letters whose c x r image, placed with lower-left corner (x, y), agrees with p"""
        key = (x, y, c, r)
        if key not in self._memo:
            x0, x1, y0, y1 = self._visible(x, y, c, r)
            if self.anchored and (x0, x1, y0, y1) != (x, x + c, y, y + r):
                self._memo[key] = []
            else:
                target = self.p.cells[y0:y1, x0:x1]
                self._memo[key] = [
                    a for a in self.by_extent.get((c, r), ())
                    if np.array_equal(self.s.images[a].cells[y0 - y:y1 - y, x0 - x:x1 - x], target)
                ]
        return self._memo[key]

    def _columns(self, x: int, y: int, r: int, first: bool, dx: int, acc: Tuple[int, ...]):
        if x >= self.p.width:
            yield acc
            return
        for c in self.widths:
            if first and c <= dx:
                continue
            if self.block_letters(x, y, c, r):
                yield from self._columns(x + c, y, r, False, dx, acc + (c,))

    def _rows(self, xs: List[int], columns: Tuple[int, ...], y: int, acc: Tuple[int, ...]):
        if y >= self.p.height:
            yield acc
            return
        for r in self.heights:
            if all(self.block_letters(x, y, c, r) for x, c in zip(xs, columns)):
                yield from self._rows(xs, columns, y + r, acc + (r,))

    def parse(self, dx: int, dy: int) -> List[ParseResult]:
        results = []
        for r0 in self.heights:
            if r0 <= dy:
                continue
            for columns in self._columns(-dx, -dy, r0, True, dx, ()):
                xs = list(np.cumsum((0,) + columns[:-1]) - dx)
                for rows in self._rows(xs, columns, -dy + r0, (r0,)):
                    ys = list(np.cumsum((0,) + rows[:-1]) - dy)
                    results.extend(self._preimages(xs, columns, ys, rows, dx, dy))
        return results

    def _preimages(self, xs, columns, ys, rows, dx: int, dy: int) -> List[ParseResult]:
        options, cropped = [], False
        for y, r in zip(ys, rows):
            for x, c in zip(xs, columns):
                letters = self.block_letters(x, y, c, r)
                if self._visible(x, y, c, r) == (x, x + c, y, y + r):
                    options.append(letters)
                else:
                    # a partial block only fixes the least consistent letter
                    options.append(letters[:1])
                    cropped = True
        results = []
        for choice in product(*options):
            self.produced += 1
            if self.produced > self.budget:
                raise BudgetExceededError(f"parses of {self.p.width}x{self.p.height} pattern by {self.s.name!r}",
                                          self.budget, self.produced - 1)
            preimage = RectPattern(self.p.alphabet, np.array(choice).reshape(len(rows), len(columns)))
            results.append(ParseResult(self.s.name, (dx, dy), preimage, cropped, columns, rows))
        return results


def _parse_with(p: RectPattern, s: Substitution, mode: str, budget: int) -> List[ParseResult]:
    parser = _GridParser(p, s, mode == ANCHORED, budget)
    if mode == ANCHORED:
        return parser.parse(0, 0)
    results = []
    for dy in range(max(parser.heights)):
        for dx in range(max(parser.widths)):
            results.extend(parser.parse(dx, dy))
    return results


def desubstitute(p: RectPattern, subs: SubstitutionSet, mode: str = ANCHORED, *,
                 budget: int, n_jobs: int = 1) -> List[ParseResult]:
    """Every parse of p as a grid of images of a single member of the set

    Anchored parses tile p exactly with full blocks from its lower-left corner;
    windowed parses allow partial blocks on every margin and search every offset
    of p's cell (0, 0) inside the first block. Results come sorted by
    (substitution, offset, preimage); an empty list means p is unparseable.
    """
    if mode not in PARSE_MODES:
        raise InvalidArgumentError(f"unknown parse mode {mode!r}, expected one of {PARSE_MODES}")
    if p.alphabet != subs.alphabet:
        raise InvalidArgumentError("pattern and substitution set use different alphabets")
    found = Parallel(n_jobs=n_jobs)(delayed(_parse_with)(p, s, mode, budget) for s in subs)
    unique = {}
    for result in (r for results in found for r in results):
        unique.setdefault((result.substitution, result.offset, result.preimage), result)
    return sorted(unique.values(), key=ParseResult.sort_key)


def verify_parse(p: RectPattern, result: ParseResult, subs: SubstitutionSet) -> bool:
    """Re-apply a parse and compare with p on p's support"""
    image = apply_uniform(subs.get(result.substitution), result.preimage)
    dx, dy = result.offset
    if image.width < dx + p.width or image.height < dy + p.height:
        return False
    return bool(np.array_equal(image.cells[dy:dy + p.height, dx:dx + p.width], p.cells))


# ========== Sequence recovery ==========

SampleProvider = Callable[[int], RectPattern]


class SequenceRecovery:
    """
    Recovers s_0, s_1, ... from level-indexed samples of a sequence's language

    Stage t works on the samples P_t(n): P_0(n) comes from the provider and
    P_{t+1}(n) is the preimage of P_t(n + 1) under the substitution and offset
    chosen at stage t. A candidate survives a stage while every sample seen so
    far admits a windowed parse by it at a common offset.
    """

    def __init__(self, provider: SampleProvider, subs: SubstitutionSet, min_level: int = 1,
                 max_level: int = 6, budget: int = 10000, n_jobs: int = 1):
        if min_level < 0 or max_level < min_level:
            raise InvalidArgumentError(f"invalid sample levels {min_level}..{max_level}")
        self.provider = provider
        self.subs = subs
        self.min_level = min_level
        self.max_level = max_level
        self.budget = budget
        self.n_jobs = n_jobs
        self.chosen: List[Tuple[str, Tuple[int, int]]] = []
        self._samples: Dict[Tuple[int, int], RectPattern] = {}

    def sample(self, stage: int, level: int) -> RectPattern:
        key = (stage, level)
        if key not in self._samples:
            if stage == 0:
                self._samples[key] = self.provider(level)
            else:
                name, offset = self.chosen[stage - 1]
                parent = self.sample(stage - 1, level + 1)
                parses = [r for r in desubstitute(parent, self.subs.subset([name]), WINDOWED,
                                                  budget=self.budget) if r.offset == offset]
                if not parses:
                    raise UnparseableSampleError(
                        f"sample of level {level + 1} at stage {stage - 1} has no parse by {name!r} "
                        f"at offset {offset}", stage=stage - 1, level=level + 1)
                self._samples[key] = parses[0].preimage
        return self._samples[key]

    def _stage(self, stage: int) -> Union[Tuple[str, Tuple[int, int]], AmbiguityReport]:
        offsets: Dict[str, Optional[set]] = {name: None for name in self.subs.names}
        last: List[ParseResult] = []
        sample = None
        for level in range(self.min_level, self.max_level + 1):
            sample = self.sample(stage, level)
            parses = desubstitute(sample, self.subs.subset(list(offsets)), WINDOWED,
                                  budget=self.budget, n_jobs=self.n_jobs)
            for name in list(offsets):
                seen = {r.offset for r in parses if r.substitution == name}
                offsets[name] = seen if offsets[name] is None else offsets[name] & seen
                if not offsets[name]:
                    del offsets[name]
            logger.debug("Stage %d level %d: candidates %s", stage, level, sorted(offsets))
            if not offsets:
                raise UnparseableSampleError(
                    f"no candidate parses the {sample.width}x{sample.height} sample of level {level} "
                    f"at stage {stage}", stage=stage, level=level)
            last = [r for r in parses if r.substitution in offsets and r.offset in offsets[r.substitution]]
            if len(offsets) == 1:
                name, kept = next(iter(offsets.items()))
                return name, (0, 0) if (0, 0) in kept else min(kept, key=lambda o: (o[1], o[0]))
        return AmbiguityReport(tuple(last), (sample.width, sample.height), stage,
                               tuple(name for name, _ in self.chosen))

    def run(self, depth: int) -> Union[List[str], AmbiguityReport]:
        if depth < 1:
            raise InvalidArgumentError(f"depth {depth} < 1")
        for stage in range(len(self.chosen), depth):
            outcome = self._stage(stage)
            if isinstance(outcome, AmbiguityReport):
                logger.info("Stage %d stays ambiguous between %s", stage, outcome.names)
                return outcome
            self.chosen.append(outcome)
            logger.info("Stage %d: recovered %s at offset %s", stage, *outcome)
        return [name for name, _ in self.chosen[:depth]]


def recover_sequence(provider: SampleProvider, subs: SubstitutionSet, depth: int, *,
                     min_level: int = 1, max_level: int = 6, budget: int,
                     n_jobs: int = 1) -> Union[List[str], AmbiguityReport]:
    """First ``depth`` names of the sequence whose language the samples come from"""
    return SequenceRecovery(provider, subs, min_level, max_level, budget, n_jobs).run(depth)


# ========== Unique derivation ==========

def _ambiguous_parses(window: RectPattern, subs: SubstitutionSet, budget: int) -> Optional[List[ParseResult]]:
    parses = desubstitute(window, subs, WINDOWED, budget=budget)
    return parses if len(parses) >= 2 else None


def unique_derivation_check(subs: SubstitutionSet, side: int, depth: int = 1, *, budget: int,
                            parse_budget: int, n_jobs: int = 1) -> Optional[UniqueDerivationCounterexample]:
    """First side x side window of the global language admitting two parses, if any

    None only certifies the finite windows examined.
    """
    if side < subs.max_extent:
        raise InvalidArgumentError(f"side {side} is smaller than the largest image extent {subs.max_extent}")
    if depth < 1:
        raise InvalidArgumentError(f"depth {depth} < 1")
    windows = LanguageEnumerator(budget, n_jobs).global_language(subs, depth - 1, side, side)
    logger.info("Probing %d windows of side %d", len(windows), side)
    found = Parallel(n_jobs=n_jobs)(delayed(_ambiguous_parses)(w, subs, parse_budget) for w in windows)
    for window, parses in zip(windows, found):
        if parses is not None:
            return UniqueDerivationCounterexample(window, tuple(parses))
    return None
