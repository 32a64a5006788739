"""
Property A Service
Sufficient conditions and a bounded exhaustive search for property A: every way
of deriving a 2x2 block of an S-pattern extends to a derivation of the pattern
"""
import logging
from itertools import product
from typing import Dict, List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed

from sadic.errors import BudgetExceededError, InvalidArgumentError
from sadic.models import (
    PropertyAStatus, PropertyAVerdict, PropertyAWitness, RectPattern, SubstitutionPattern,
    SubstitutionSet, canonical
)
from sadic.services.grid import (
    apply_nonuniform, block_offsets, check_compat_nonuniform, compatible_substitution_patterns,
    extent_tables
)
from sadic.services.language import LanguageEnumerator

logger = logging.getLogger(__name__)

BLOCK = 2

Region = Tuple[int, int, int, int]  # x, y, width, height


def sufficient_property_a(subs: SubstitutionSet) -> PropertyAVerdict:
    """Holds when every member has letter-independent support, or when there is one member"""
    if all(s.uniform_support for s in subs):
        return PropertyAVerdict(PropertyAStatus.HOLDS_UNIFORM_SUPPORT)
    if len(subs) == 1:
        return PropertyAVerdict(PropertyAStatus.HOLDS_SINGLETON)
    return PropertyAVerdict(PropertyAStatus.UNKNOWN)


class PropertyASearch:
    """
    Bounded search for a block derivation that the surrounding pattern cannot follow

    Parameters:
    -----------
    subs : SubstitutionSet
    depth : int
        Longest derivation chain examined (N)
    budget : int
        Largest number of substitution patterns explored
    """

    def __init__(self, subs: SubstitutionSet, depth: int, budget: int):
        self.subs = subs
        self.depth = depth
        self.budget = budget
        self.explored = 0
        self.checked = 0
        self._compatible: Dict[RectPattern, List[SubstitutionPattern]] = {}

    def _spend(self, amount: int = 1) -> None:
        self.explored += amount
        if self.explored > self.budget:
            raise BudgetExceededError("property A substitution patterns", self.budget, self.explored - amount)

    def compatible(self, p: RectPattern) -> List[SubstitutionPattern]:
        if p not in self._compatible:
            found = []
            for sp in compatible_substitution_patterns(self.subs, p):
                self._spend()
                found.append(sp)
            self._compatible[p] = found
        return self._compatible[p]

    # ========== Extension search ==========

    def extends(self, p: RectPattern, region: Region, blocks: List[RectPattern]) -> bool:
        """True iff some compatible chain on p derives blocks[1:] from ``region``"""
        if len(blocks) == 1:
            return True
        target = blocks[1]
        last = len(blocks) == 2
        for image, tracked in self._images(p, region, target, last):
            if self.extends(image, tracked, blocks[1:]):
                return True
        return False

    def _images(self, p: RectPattern, region: Region, target: RectPattern, last: bool):
        """Images of p under compatible substitution patterns whose tracked block is ``target``

        On the last step only existence matters, so cells outside the region keep
        their first option.
        """
        widths, heights = extent_tables(self.subs)
        cell_widths = widths[:, p.cells]
        cell_heights = heights[:, p.cells]
        x, y, w, h = region
        column_options = [
            sorted(set.intersection(*(set(cell_widths[:, j, i].tolist()) for j in range(p.height))))
            for i in range(p.width)
        ]
        row_options = [
            sorted(set.intersection(*(set(cell_heights[:, j, i].tolist()) for i in range(p.width))))
            for j in range(p.height)
        ]
        for columns in product(*column_options):
            xs = block_offsets(columns)
            if xs[x + w] - xs[x] != target.width:
                continue
            for rows in product(*row_options):
                ys = block_offsets(rows)
                if ys[y + h] - ys[y] != target.height:
                    continue
                options = self._cell_options(p, region, target, columns, rows, xs, ys, last)
                if options is None:
                    continue
                for choice in product(*options):
                    self._spend()
                    sp = SubstitutionPattern(self.subs, np.array(choice, dtype=np.int32).reshape(p.height, p.width))
                    tracked = (int(xs[x]), int(ys[y]), target.width, target.height)
                    yield apply_nonuniform(sp, p), tracked

    def _cell_options(self, p, region, target, columns, rows, xs, ys, last) -> Optional[List[List[int]]]:
        x, y, w, h = region
        ox, oy = int(xs[x]), int(ys[y])
        options = []
        for j in range(p.height):
            for i in range(p.width):
                letter = p.cells[j, i]
                members = [k for k, s in enumerate(self.subs.members)
                           if s.extent(letter) == (columns[i], rows[j])]
                if x <= i < x + w and y <= j < y + h:
                    x0, y0 = int(xs[i]) - ox, int(ys[j]) - oy
                    expected = target.cells[y0:y0 + rows[j], x0:x0 + columns[i]]
                    members = [k for k in members
                               if np.array_equal(self.subs.members[k].images[letter].cells, expected)]
                elif last:
                    members = members[:1]
                if not members:
                    return None
                options.append(members)
        return options

    # ========== Chains ==========

    def _chains(self, blocks: List[RectPattern], chain: List[SubstitutionPattern]):
        """Every derivation chain of length 1..depth starting from blocks[0], shortest first per branch"""
        if len(chain) == self.depth:
            return
        for sp in self.compatible(blocks[-1]):
            image = apply_nonuniform(sp, blocks[-1])
            yield blocks + [image], chain + [sp]
            yield from self._chains(blocks + [image], chain + [sp])

    def search_pattern(self, p: RectPattern) -> Optional[PropertyAWitness]:
        """First 2x2 block of p (by placement) with a chain p cannot follow"""
        for y in range(p.height - BLOCK + 1):
            for x in range(p.width - BLOCK + 1):
                block = p.crop(x, y, BLOCK, BLOCK)
                for blocks, chain in self._chains([block], []):
                    self.checked += 1
                    if not self.extends(p, (x, y, BLOCK, BLOCK), blocks):
                        return PropertyAWitness(p, (x, y), tuple(chain), tuple(blocks))
        return None


def _search_one(subs: SubstitutionSet, depth: int, budget: int, p: RectPattern):
    search = PropertyASearch(subs, depth, budget)
    return search.search_pattern(p), search.checked, search.explored


def bounded_property_a(subs: SubstitutionSet, max_level: int, max_depth: int, *, budget: int,
                       n_jobs: int = 1) -> PropertyAVerdict:
    """Exhaustive property A check over S-patterns of level <= max_level and chains of length <= max_depth"""
    if max_level < 1:
        raise InvalidArgumentError(f"S-pattern level {max_level} < 1: no 2x2 block exists in a letter")
    if max_depth < 1:
        raise InvalidArgumentError(f"derivation depth {max_depth} < 1")
    levels = LanguageEnumerator(budget).s_pattern_levels(subs, max_level)
    patterns = [p for p in canonical(q for level in levels[1:] for q in level)
                if p.width >= BLOCK and p.height >= BLOCK]
    logger.info("Checking property A on %d S-patterns up to level %d", len(patterns), max_level)

    results = Parallel(n_jobs=n_jobs)(delayed(_search_one)(subs, max_depth, budget, p) for p in patterns)
    explored = sum(r[2] for r in results)
    if explored > budget:
        raise BudgetExceededError("property A substitution patterns", budget, explored)
    checked = 0
    for witness, count, _ in results:
        checked += count
        if witness is not None:
            logger.info("Counterexample in %s at %s", witness.pattern, witness.placement)
            return PropertyAVerdict(PropertyAStatus.COUNTEREXAMPLE, witness, checked)
    return PropertyAVerdict(PropertyAStatus.NO_COUNTEREXAMPLE, None, checked)


def verify_witness(subs: SubstitutionSet, witness: PropertyAWitness, *, budget: int) -> bool:
    """Replay the witness chain on its block and confirm that no extension exists on the pattern"""
    x, y = witness.placement
    blocks = list(witness.blocks)
    if len(blocks) != len(witness.chain) + 1 or witness.pattern.crop(x, y, BLOCK, BLOCK) != blocks[0]:
        return False
    for sp, source, image in zip(witness.chain, blocks, blocks[1:]):
        if not check_compat_nonuniform(sp, source) or apply_nonuniform(sp, source) != image:
            return False
    return not PropertyASearch(subs, len(witness.chain), budget).extends(
        witness.pattern, (x, y, BLOCK, BLOCK), blocks)
