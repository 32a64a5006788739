"""
Language Service
Enumerates S-patterns and the finite-window languages of the local and global
subshifts generated by a sequence or a set of substitutions
"""
import logging
from itertools import product
from typing import List, Optional

import numpy as np
from joblib import Parallel, delayed
from numpy.lib.stride_tricks import sliding_window_view

from sadic.errors import BudgetExceededError, InvalidArgumentError
from sadic.models import (
    Alphabet, LanguageMode, LanguageQuery, RectPattern, SequenceSpec, SubstitutionSet, WindowSet, canonical
)
from sadic.services.grid import apply_nonuniform, compatible_substitution_patterns, iterate

logger = logging.getLogger(__name__)

# sources handed to one worker in a single task
SOURCE_CHUNK = 256


# ========== Window arrays ==========

def _window_rows(cells: np.ndarray, width: int, height: int) -> np.ndarray:
    """Distinct width x height windows of a cell array, one flattened window per row"""
    views = sliding_window_view(cells, (height, width))
    return np.unique(views.reshape(-1, height * width), axis=0)


def _merge_rows(parts: List[np.ndarray], size: int) -> np.ndarray:
    if not parts:
        return np.empty((0, size), dtype=np.int32)
    return np.unique(np.concatenate(parts), axis=0)


def _rows_to_patterns(alphabet: Alphabet, rows: np.ndarray, width: int, height: int) -> List[RectPattern]:
    return [RectPattern(alphabet, row.reshape(height, width)) for row in rows]


def _check_window(width: int, height: int) -> None:
    if width < 1 or height < 1:
        raise InvalidArgumentError(f"window {width}x{height} must be at least 1x1")


def windows_of(p: RectPattern, width: int, height: int) -> List[RectPattern]:
    """All width x height sub-rectangles of p, deduplicated in canonical order"""
    _check_window(width, height)
    if width > p.width or height > p.height:
        raise InvalidArgumentError(f"window {width}x{height} larger than {p.width}x{p.height} pattern")
    return canonical(_rows_to_patterns(p.alphabet, _window_rows(p.cells, width, height), width, height))


def row_word(p: RectPattern, axis: str, index: int) -> List[int]:
    """Letters along row ``index`` (left to right) or column ``index`` (bottom to top)"""
    if axis in ('horizontal', 'h', 'x'):
        if not 0 <= index < p.height:
            raise InvalidArgumentError(f"row {index} outside a pattern of height {p.height}")
        return [int(v) for v in p.cells[index, :]]
    if axis in ('vertical', 'v', 'y'):
        if not 0 <= index < p.width:
            raise InvalidArgumentError(f"column {index} outside a pattern of width {p.width}")
        return [int(v) for v in p.cells[:, index]]
    raise InvalidArgumentError(f"unknown axis {axis!r}")


# ========== Workers ==========

def _iterate_windows(subs: SubstitutionSet, seq: SequenceSpec, level: int, letter: int,
                     width: int, height: int):
    image = iterate(subs, seq, level, letter)
    if image.width < width or image.height < height:
        return None
    return _window_rows(image.cells, width, height)


def _image_windows(stage_set: SubstitutionSet, sources: np.ndarray, source_shape, width: int,
                   height: int, budget: int):
    """Windows of every compatible image of a chunk of flattened source patterns"""
    source_w, source_h = source_shape
    parts, count = [], 0
    for row in sources:
        q = RectPattern(stage_set.alphabet, row.reshape(source_h, source_w))
        for sp in compatible_substitution_patterns(stage_set, q):
            count += 1
            if count > budget:
                raise BudgetExceededError("global language images", budget, count - 1)
            parts.append(_window_rows(apply_nonuniform(sp, q).cells, width, height))
    return _merge_rows(parts, width * height), count


# ========== Enumerator ==========

class LanguageEnumerator:
    """
    Finite-window language enumeration under a hard budget

    Parameters:
    -----------
    budget : int
        Largest number of patterns (S-patterns or images) one enumeration may produce
    n_jobs : int (default=1)
        joblib worker count for per-letter and per-source work; results are
        merged in canonical order so they do not depend on it
    """

    def __init__(self, budget: int, n_jobs: int = 1):
        if budget < 1:
            raise InvalidArgumentError(f"budget {budget} < 1")
        self.budget = budget
        self.n_jobs = n_jobs

    def _parallel(self):
        return Parallel(n_jobs=self.n_jobs)

    # ========== S-patterns ==========

    def s_pattern_levels(self, subs: SubstitutionSet, level: int) -> List[List[RectPattern]]:
        """S-patterns of every level 0..level, each level canonical"""
        if level < 0:
            raise InvalidArgumentError(f"level {level} < 0")
        current = [RectPattern.single(subs.alphabet, a) for a in subs.alphabet]
        levels = [canonical(current)]
        produced = 0
        for m in range(level):
            images = set()
            for q in levels[-1]:
                for sp in compatible_substitution_patterns(subs, q):
                    produced += 1
                    if produced > self.budget:
                        raise BudgetExceededError(f"S-patterns of level {m + 1}", self.budget, len(images))
                    images.add(apply_nonuniform(sp, q))
            levels.append(canonical(images))
            logger.info("Level %d: %d S-patterns", m + 1, len(images))
        return levels

    def s_patterns(self, subs: SubstitutionSet, level: int) -> List[RectPattern]:
        return self.s_pattern_levels(subs, level)[-1]

    # ========== Local languages ==========

    def local_language(self, subs: SubstitutionSet, seq: SequenceSpec, level: int,
                       width: int, height: int) -> WindowSet:
        """Windows of the iterates S_[0,m](a) for m <= level and every letter a"""
        _check_window(width, height)
        if level < 0:
            raise InvalidArgumentError(f"level {level} < 0")
        tasks = [(m, a) for m in range(level + 1) for a in subs.alphabet]
        parts = self._parallel()(
            delayed(_iterate_windows)(subs, seq, m, a, width, height) for m, a in tasks)
        parts = [part for part in parts if part is not None]
        if not parts:
            raise InvalidArgumentError(f"no iterate up to level {level} contains a {width}x{height} window")
        rows = _merge_rows(parts, width * height)
        return WindowSet(width, height, level, _rows_to_patterns(subs.alphabet, rows, width, height))

    def local_language_set(self, subs: SubstitutionSet, level: int, width: int, height: int) -> WindowSet:
        """Windows of the S-patterns of level <= level"""
        _check_window(width, height)
        parts = [_window_rows(p.cells, width, height)
                 for patterns in self.s_pattern_levels(subs, level) for p in patterns
                 if p.width >= width and p.height >= height]
        if not parts:
            raise InvalidArgumentError(f"no S-pattern up to level {level} contains a {width}x{height} window")
        rows = _merge_rows(parts, width * height)
        return WindowSet(width, height, level, _rows_to_patterns(subs.alphabet, rows, width, height))

    def two_by_two_blocks(self, subs: SubstitutionSet, level: int) -> WindowSet:
        return self.local_language_set(subs, level, 2, 2)

    # ========== Global languages ==========

    def global_language(self, subs: SubstitutionSet, level: int, width: int, height: int,
                        seq: Optional[SequenceSpec] = None) -> WindowSet:
        """Windows of level-n images of arbitrary source patterns

        With ``seq`` the stage t substitution is seq[t]; without it every stage
        ranges over all substitution patterns from the set. A window of an image
        under a stage whose smallest image width is m lies in the image of a
        (ceil((w-1)/m)+1)-wide source window, so the stages recurse on shrinking
        source shapes down to all patterns of the final shape.
        """
        _check_window(width, height)
        if level < 0:
            raise InvalidArgumentError(f"level {level} < 0")
        if seq is None:
            stage_sets = [subs] * (level + 1)
        else:
            stage_sets = [SubstitutionSet(subs.alphabet, [subs.get(seq[t])]) for t in range(level + 1)]

        shapes = [(width, height)]
        for stage_set in stage_sets:
            w, h = shapes[-1]
            shapes.append((-(-(w - 1) // stage_set.min_width) + 1, -(-(h - 1) // stage_set.min_height) + 1))

        rows = self._all_patterns(subs.alphabet, *shapes[-1])
        for stage in range(level, -1, -1):
            source_shape, (w, h) = shapes[stage + 1], shapes[stage]
            rows = self._stage_windows(stage_sets[stage], rows, source_shape, w, h)
            logger.info("Stage %d: %d windows of shape %dx%d", stage, len(rows), w, h)
        return WindowSet(width, height, level, _rows_to_patterns(subs.alphabet, rows, width, height))

    def _all_patterns(self, alphabet: Alphabet, width: int, height: int) -> np.ndarray:
        total = len(alphabet) ** (width * height)
        if total > self.budget:
            raise BudgetExceededError(f"source patterns of shape {width}x{height}", self.budget, 0)
        return np.array(list(product(range(len(alphabet)), repeat=width * height)),
                        dtype=np.int32).reshape(total, width * height)

    def _stage_windows(self, stage_set: SubstitutionSet, sources: np.ndarray, source_shape,
                       width: int, height: int) -> np.ndarray:
        chunks = [sources[i:i + SOURCE_CHUNK] for i in range(0, len(sources), SOURCE_CHUNK)]
        results = self._parallel()(
            delayed(_image_windows)(stage_set, chunk, source_shape, width, height, self.budget)
            for chunk in chunks)
        produced = sum(count for _, count in results)
        if produced > self.budget:
            raise BudgetExceededError("global language images", self.budget, produced)
        return _merge_rows([part for part, _ in results], width * height)

    def separation_witnesses(self, subs: SubstitutionSet, seq: SequenceSpec, level: int,
                             width: int, height: int) -> WindowSet:
        """Windows of the global language not (yet) seen in the local language"""
        found = self.global_language(subs, level, width, height, seq=seq)
        return found.difference(self.local_language(subs, seq, level, width, height))

    def answer(self, query: LanguageQuery, subs: SubstitutionSet, seq: Optional[SequenceSpec] = None) -> WindowSet:
        """Dispatch a query to the local or global enumeration of its mode"""
        shape = (query.width, query.height)
        if query.mode in (LanguageMode.LOCAL_SEQ, LanguageMode.GLOBAL_SEQ) and seq is None:
            raise InvalidArgumentError(f"{query.mode.value} query needs a sequence")
        if query.mode is LanguageMode.LOCAL_SEQ:
            return self.local_language(subs, seq, query.level, *shape)
        if query.mode is LanguageMode.LOCAL_SET:
            return self.local_language_set(subs, query.level, *shape)
        if query.mode is LanguageMode.GLOBAL_SEQ:
            return self.global_language(subs, query.level, *shape, seq=seq)
        return self.global_language(subs, query.level, *shape)


# ========== Functional interface ==========

def s_patterns(subs: SubstitutionSet, level: int, *, budget: int) -> List[RectPattern]:
    """S-patterns of level exactly ``level``"""
    return LanguageEnumerator(budget).s_patterns(subs, level)


def local_language(subs: SubstitutionSet, seq: SequenceSpec, level: int, width: int, height: int,
                   *, n_jobs: int = 1) -> WindowSet:
    # iterates are bounded by the level, not by a budget
    return LanguageEnumerator(1, n_jobs).local_language(subs, seq, level, width, height)


def local_language_set(subs: SubstitutionSet, level: int, width: int, height: int,
                       *, budget: int) -> WindowSet:
    return LanguageEnumerator(budget).local_language_set(subs, level, width, height)


def global_language(subs: SubstitutionSet, level: int, width: int, height: int,
                    seq: Optional[SequenceSpec] = None, *, budget: int, n_jobs: int = 1) -> WindowSet:
    return LanguageEnumerator(budget, n_jobs).global_language(subs, level, width, height, seq=seq)


def two_by_two_blocks(subs: SubstitutionSet, level: int, *, budget: int) -> WindowSet:
    return LanguageEnumerator(budget).two_by_two_blocks(subs, level)


def separation_witnesses(subs: SubstitutionSet, seq: SequenceSpec, level: int, width: int, height: int,
                         *, budget: int, n_jobs: int = 1) -> WindowSet:
    return LanguageEnumerator(budget, n_jobs).separation_witnesses(subs, seq, level, width, height)

