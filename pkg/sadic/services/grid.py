"""
Grid Service
Compatibility, the grid map phi, uniform and non-uniform application, composition
and iteration of substitutions on rectangular patterns
"""
import logging
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from sadic.errors import (
    AlphabetMismatchError, IncompatibilityError, InvalidArgumentError, ShapeMismatchError
)
from sadic.models import (
    Alphabet, RectPattern, SequenceSpec, SizeProfile, Substitution, SubstitutionPattern,
    SubstitutionSet
)

logger = logging.getLogger(__name__)

COMPOSE_SEPARATOR = '∘'


# ========== Extent tables ==========

@lru_cache(maxsize=256)
def extent_tables(subs: SubstitutionSet) -> Tuple[np.ndarray, np.ndarray]:
    """widths[s, a], heights[s, a] for every member s and letter a"""
    widths = np.stack([member.widths for member in subs.members])
    heights = np.stack([member.heights for member in subs.members])
    return widths, heights


@lru_cache(maxsize=256)
def _image_stack(subs: SubstitutionSet) -> Optional[np.ndarray]:
    """images[s, a] as one array when every image in the set has the same shape"""
    shapes = {image.cells.shape for member in subs.members for image in member.images}
    if len(shapes) != 1:
        return None
    return np.stack([np.stack([image.cells for image in member.images]) for member in subs.members])


def _singleton(s: Substitution) -> SubstitutionSet:
    return SubstitutionSet(s.alphabet, [s])


def _extent_grids(sp: SubstitutionPattern, p: RectPattern) -> Tuple[np.ndarray, np.ndarray]:
    if sp.subs.alphabet != p.alphabet:
        raise AlphabetMismatchError("substitution pattern and pattern use different alphabets")
    if (sp.width, sp.height) != (p.width, p.height):
        raise ShapeMismatchError(
            f"substitution pattern is {sp.width}x{sp.height}, pattern is {p.width}x{p.height}")
    widths, heights = extent_tables(sp.subs)
    return widths[sp.entries, p.cells], heights[sp.entries, p.cells]


def _aligned(widths: np.ndarray, heights: np.ndarray) -> bool:
    """Same column => equal widths, same row => equal heights"""
    return bool((widths == widths[:1, :]).all() and (heights == heights[:, :1]).all())


# ========== Compatibility ==========

def check_compat_uniform(s: Substitution, p: RectPattern) -> bool:
    """True iff cells sharing a column have equal image widths and cells sharing a row equal heights"""
    if s.alphabet != p.alphabet:
        raise AlphabetMismatchError(f"substitution {s.name!r} and pattern use different alphabets")
    return _aligned(s.widths[p.cells], s.heights[p.cells])


def check_compat_nonuniform(sp: SubstitutionPattern, p: RectPattern) -> bool:
    """Compatibility of a pattern of substitutions with a same-shape pattern"""
    return _aligned(*_extent_grids(sp, p))


def size_profile(sp: SubstitutionPattern, p: RectPattern) -> SizeProfile:
    """Common image width of every column and height of every row"""
    widths, heights = _extent_grids(sp, p)
    if not _aligned(widths, heights):
        raise IncompatibilityError("substitution pattern is not compatible with the pattern", witness=p)
    return SizeProfile(tuple(int(w) for w in widths[0, :]), tuple(int(h) for h in heights[:, 0]))


def phi(profile: SizeProfile, r: int, axis: str) -> int:
    """Lower corner of the image block of coordinate r along an axis

    phi(0) = 0, phi(r) = sum of extents 0..r-1 for r > 0 and
    -(sum of extents r..-1) for r < 0.
    """
    extents, start = profile.axis(axis)
    if r == 0:
        return 0
    lo, hi = (0, r - 1) if r > 0 else (r, -1)
    if lo < start or hi >= start + len(extents):
        raise InvalidArgumentError(
            f"coordinate range [{lo}, {hi}] outside profile range [{start}, {start + len(extents) - 1}]")
    total = sum(extents[lo - start:hi - start + 1])
    return total if r > 0 else -total


def block_offsets(extents: Sequence[int]) -> np.ndarray:
    """phi at 0..len(extents): prefix sums starting at 0"""
    return np.concatenate([[0], np.cumsum(extents, dtype=np.int64)])


# ========== Application ==========

def apply_nonuniform(sp: SubstitutionPattern, p: RectPattern) -> RectPattern:
    """Image of p where cell i is replaced by sp_i(p_i), blocks placed by phi"""
    widths, heights = _extent_grids(sp, p)
    if not _aligned(widths, heights):
        raise IncompatibilityError("substitution pattern is not compatible with the pattern", witness=p)

    stack = _image_stack(sp.subs)
    if stack is not None:
        # every block has the same shape: gather and interleave in one step
        blocks = stack[sp.entries, p.cells]
        rows, cols, bh, bw = blocks.shape
        return RectPattern(p.alphabet, blocks.transpose(0, 2, 1, 3).reshape(rows * bh, cols * bw))

    xs = block_offsets(widths[0, :])
    ys = block_offsets(heights[:, 0])
    out = np.empty((int(ys[-1]), int(xs[-1])), dtype=np.int32)
    members = sp.subs.members
    for y in range(p.height):
        for x in range(p.width):
            image = members[sp.entries[y, x]].images[p.cells[y, x]]
            out[ys[y]:ys[y + 1], xs[x]:xs[x + 1]] = image.cells
    return RectPattern(p.alphabet, out)


def apply_uniform(s: Substitution, p: RectPattern) -> RectPattern:
    """Image of p under a single substitution applied to every cell"""
    if not check_compat_uniform(s, p):
        raise IncompatibilityError(f"substitution {s.name!r} is not compatible with the pattern", witness=p)
    subs = _singleton(s)
    return apply_nonuniform(SubstitutionPattern.constant(subs, s.name, p.width, p.height), p)


# ========== Composition and iteration ==========

def two_cell_patterns(alphabet: Alphabet) -> List[RectPattern]:
    """Single letters plus every horizontal and vertical pair of letters"""
    letters = list(alphabet)
    patterns = [RectPattern.single(alphabet, a) for a in letters]
    patterns += [RectPattern(alphabet, [[a, b]]) for a, b in product(letters, repeat=2)]
    patterns += [RectPattern(alphabet, [[a], [b]]) for a, b in product(letters, repeat=2)]
    return patterns


def compatibility_witness(outer: Substitution, inner: Substitution) -> Optional[RectPattern]:
    """A pattern compatible with inner whose inner-image is not compatible with outer, if any

    The defining condition only constrains pairs of cells sharing a coordinate,
    so single letters and two-cell patterns decide compatibility.
    """
    if outer.alphabet != inner.alphabet:
        raise AlphabetMismatchError(f"{outer.name!r} and {inner.name!r} use different alphabets")
    for pattern in two_cell_patterns(inner.alphabet):
        if check_compat_uniform(inner, pattern) and \
                not check_compat_uniform(outer, apply_uniform(inner, pattern)):
            return pattern
    return None


def compose(outer: Substitution, inner: Substitution) -> Substitution:
    """outer o inner: the image of a is outer applied to inner(a)"""
    witness = compatibility_witness(outer, inner)
    if witness is not None:
        raise IncompatibilityError(
            f"{outer.name!r} is not compatible with {inner.name!r}: witness {witness.to_rows()}",
            witness=witness)
    images = [apply_uniform(outer, image) for image in inner.images]
    return Substitution(f"{outer.name}{COMPOSE_SEPARATOR}{inner.name}", inner.alphabet, images,
                        non_degenerate=outer.non_degenerate and inner.non_degenerate)


def apply_stages(subs: SubstitutionSet, seq: SequenceSpec, first: int, last: int,
                 p: RectPattern) -> RectPattern:
    """Apply s_last, then s_{last-1}, ..., then s_first to p"""
    for stage in range(last, first - 1, -1):
        s = subs.get(seq[stage])
        try:
            p = apply_uniform(s, p)
        except IncompatibilityError as exc:
            raise IncompatibilityError(f"stage {stage}: {exc}", witness=exc.witness, stage=stage) from exc
    return p


def iterate(subs: SubstitutionSet, seq: SequenceSpec, n: int, a: int) -> RectPattern:
    """S_[0,n](a), computed innermost-first"""
    if n < 0:
        raise InvalidArgumentError(f"level {n} < 0")
    return apply_stages(subs, seq, 0, n, RectPattern.single(subs.alphabet, a))


# ========== Window search ==========

def appears_in(p: RectPattern, q: RectPattern) -> List[Tuple[int, int]]:
    """Every anchor (x, y) at which p occurs inside q"""
    if p.alphabet != q.alphabet:
        raise AlphabetMismatchError("patterns use different alphabets")
    if p.width > q.width or p.height > q.height:
        return []
    views = sliding_window_view(q.cells, (p.height, p.width))
    ys, xs = np.nonzero((views == p.cells).all(axis=(2, 3)))
    return sorted(zip((int(x) for x in xs), (int(y) for y in ys)), key=lambda xy: (xy[1], xy[0]))


def avoids(q: RectPattern, forbidden) -> bool:
    """True iff no forbidden pattern appears in q"""
    return not any(appears_in(f, q) for f in forbidden)


# ========== Set constructions ==========

def split_nondeterministic(name: str, alphabet: Alphabet, choices: Dict[int, Sequence[RectPattern]],
                           non_degenerate: bool = True) -> SubstitutionSet:
    """Deterministic substitutions choosing one image per letter, named name.0, name.1, ..."""
    options = []
    for letter in alphabet:
        images = list(choices.get(letter, ()))
        if not images:
            raise InvalidArgumentError(f"no image for {alphabet.glyph(letter)!r} in {name!r}")
        options.append(images)
    members = [Substitution(f"{name}.{i}", alphabet, picked, non_degenerate=non_degenerate)
               for i, picked in enumerate(product(*options))]
    logger.debug("Split %s into %d deterministic substitutions", name, len(members))
    return SubstitutionSet(alphabet, members)


def pairwise_compositions(subs: SubstitutionSet) -> SubstitutionSet:
    """Every compatible composition s o t for s, t in the set"""
    members = []
    for outer, inner in product(subs.members, repeat=2):
        if compatibility_witness(outer, inner) is None:
            members.append(compose(outer, inner))
    if not members:
        raise IncompatibilityError("no pair of substitutions in the set is composable")
    return SubstitutionSet(subs.alphabet, members)


def compatible_substitution_patterns(subs: SubstitutionSet, p: RectPattern):
    """Yield every substitution pattern compatible with p, in a deterministic order

    Columns choose a common image width and rows a common image height; each cell
    then picks any member whose image of the cell's letter has exactly those extents.
    """
    if subs.alphabet != p.alphabet:
        raise AlphabetMismatchError("substitution set and pattern use different alphabets")
    widths, heights = extent_tables(subs)
    cell_widths = widths[:, p.cells]    # [s, y, x]
    cell_heights = heights[:, p.cells]

    column_options = [
        sorted(set.intersection(*(set(cell_widths[:, y, x].tolist()) for y in range(p.height))))
        for x in range(p.width)
    ]
    row_options = [
        sorted(set.intersection(*(set(cell_heights[:, y, x].tolist()) for x in range(p.width))))
        for y in range(p.height)
    ]
    for column_widths in product(*column_options):
        target_w = np.array(column_widths)[np.newaxis, np.newaxis, :]
        fits_w = cell_widths == target_w
        for row_heights in product(*row_options):
            target_h = np.array(row_heights)[np.newaxis, :, np.newaxis]
            fits = fits_w & (cell_heights == target_h)
            cell_options = [np.flatnonzero(fits[:, y, x]).tolist()
                            for y in range(p.height) for x in range(p.width)]
            if any(not options for options in cell_options):
                continue
            for choice in product(*cell_options):
                yield SubstitutionPattern(subs, np.array(choice, dtype=np.int32).reshape(p.height, p.width))
