"""
Decoration Service
Lifts substitutions to letters that record which substitutions produced them,
projects decorated patterns back and reads the recorded history
"""
import logging
from typing import List

import numpy as np

from sadic.errors import InvalidArgumentError, LiftError, UnknownSubstitutionError
from sadic.models import (
    Alphabet, DecoratedAlphabet, DecoratedLetter, DecoratedSystem, LIFT_MARKER, RectPattern,
    SequenceSpec, Substitution, SubstitutionSet
)
from sadic.services.grid import iterate
from sadic.services.language import row_word

logger = logging.getLogger(__name__)

PROJECTIONS = ('base', 'V', 'H')


# ========== Lifting ==========

def lift_substitution(s: Substitution, subs: SubstitutionSet,
                      alphabet: DecoratedAlphabet = None) -> Substitution:
    """The lifted substitution ~s over A x S x S

    The image of (a, s_V, s_H) has the support of s(a) and copies its letters.
    Every cell is decorated (s, s) except the rightmost column, whose V-name is
    s_V, and the top row, whose H-name is s_H.
    """
    if s not in subs:
        raise UnknownSubstitutionError(s.name)
    if alphabet is None:
        alphabet = DecoratedAlphabet(subs.alphabet, subs.names)
    count = len(alphabet.names)
    own = alphabet.names.index(s.name)

    images = []
    for letter in alphabet:
        decorated = alphabet.decode(letter)
        base = s.image(decorated.base).cells
        v = np.full(base.shape, own, dtype=np.int32)
        h = np.full(base.shape, own, dtype=np.int32)
        v[:, -1] = alphabet.names.index(decorated.v_dec)
        h[-1, :] = alphabet.names.index(decorated.h_dec)
        images.append(RectPattern(alphabet, (base * count + v) * count + h))
    return Substitution(LIFT_MARKER + s.name, alphabet, images, non_degenerate=s.non_degenerate)


def lift_set(subs: SubstitutionSet) -> DecoratedSystem:
    """Lift every member of a set; lifting an already lifted set is refused"""
    if isinstance(subs.alphabet, DecoratedAlphabet):
        raise LiftError("substitution set is already over a decorated alphabet")
    marked = [name for name in subs.names if name.startswith(LIFT_MARKER)]
    if marked:
        raise LiftError(f"substitution names {marked} already carry the lift marker {LIFT_MARKER!r}")
    try:
        alphabet = DecoratedAlphabet(subs.alphabet, subs.names)
    except InvalidArgumentError as exc:
        raise LiftError(str(exc)) from exc
    lifted = SubstitutionSet(alphabet, [lift_substitution(s, subs, alphabet) for s in subs])
    logger.debug("Lifted %d substitutions onto %d decorated letters", len(subs), len(alphabet))
    return DecoratedSystem(subs, lifted, alphabet)


# ========== Projections ==========

def project(p: RectPattern, which: str) -> RectPattern:
    """Cellwise projection keeping the base letter, the V-name or the H-name"""
    alphabet = p.alphabet
    if not isinstance(alphabet, DecoratedAlphabet):
        raise InvalidArgumentError("projection needs a pattern over a decorated alphabet")
    bases, vs, hs = (np.array(c, dtype=np.int32) for c in alphabet.components())
    if which == 'base':
        return RectPattern(alphabet.base, bases[p.cells])
    if which == 'V':
        return RectPattern(Alphabet(alphabet.names), vs[p.cells])
    if which == 'H':
        return RectPattern(Alphabet(alphabet.names), hs[p.cells])
    raise InvalidArgumentError(f"unknown projection {which!r}, expected one of {PROJECTIONS}")


def sync_check(p: RectPattern) -> bool:
    """True iff V-names are constant down every column and H-names along every row"""
    v = project(p, 'V').cells
    h = project(p, 'H').cells
    return bool((v[1:, :] == v[:-1, :]).all() and (h[:, 1:] == h[:, :-1]).all())


# ========== History ==========

def history_word(subs: SubstitutionSet, seq: SequenceSpec, level: int, seed: DecoratedLetter) -> List[str]:
    """V-names along the bottom row of the lifted iterate grown from ``seed``"""
    if any(subs.get(seq[t]).uniform_width is None for t in range(level + 1)):
        logger.warning("Stage widths are not uniform up to level %d; history word is unchecked", level)
    system = lift_set(subs)
    grown = iterate(system.lifted_set, system.lift_sequence(seq), level, system.alphabet.encode(seed))
    names = system.alphabet.names
    return [names[v] for v in row_word(project(grown, 'V'), 'horizontal', 0)]


def ruler_word(subs: SubstitutionSet, seq: SequenceSpec, level: int, seed_name: str) -> List[str]:
    """Closed form of the history word for stages of uniform width

    Position x carries seq[t] for the first stage t whose mixed-radix digit of x
    is not the stage's largest digit, and the seed name when there is none.
    """
    if seed_name not in subs:
        raise UnknownSubstitutionError(seed_name)
    widths = []
    for t in range(level + 1):
        width = subs.get(seq[t]).uniform_width
        if width is None:
            raise InvalidArgumentError(f"stage {t} ({seq[t]!r}) has no uniform width")
        widths.append(width)

    word = []
    for x in range(int(np.prod(widths))):
        name, rest = seed_name, x
        for t, width in enumerate(widths):
            if rest % width != width - 1:
                name = seq[t]
                break
            rest //= width
        word.append(name)
    return word
