"""Shared fixtures: the shipped example systems and seeded random systems"""
import numpy as np
import pytest

from sadic.models import Alphabet, RectPattern, SequenceSpec, Substitution, SubstitutionSet
from sadic.services.documents import example_system


@pytest.fixture(scope='session')
def example1():
    return example_system('example1')


@pytest.fixture(scope='session')
def example3():
    return example_system('example3')


@pytest.fixture
def ob():
    return Alphabet(['o', 'b'])


def pattern(alphabet, text):
    """Rows top-to-bottom separated by '/'"""
    return RectPattern.from_text(alphabet, text)


def random_system(rng, max_letters=3, max_members=3, max_extent=3, injective=False):
    """Random set of uniform-support substitutions and a random periodic sequence"""
    alphabet = Alphabet('oba'[:int(rng.integers(2, max_letters + 1))])
    members = []
    for i in range(int(rng.integers(1, max_members + 1))):
        width, height = (int(v) for v in rng.integers(2, max_extent + 1, size=2))
        while True:
            images = [RectPattern(alphabet, rng.integers(0, len(alphabet), size=(height, width)))
                      for _ in alphabet]
            s = Substitution(f"s{i}", alphabet, images)
            if not injective or s.letter_injective:
                break
        members.append(s)
    subs = SubstitutionSet(alphabet, members)
    period = [subs.names[int(k)] for k in rng.integers(0, len(subs), size=int(rng.integers(1, 4)))]
    return subs, SequenceSpec(period=period)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_mixed_system(rng, max_members=2):
    """Letter-dependent extents along one axis: o and b share one extent, a has the other"""
    alphabet = Alphabet('oba')
    members = []
    for i in range(int(rng.integers(1, max_members + 1))):
        shared, odd = (int(v) for v in rng.permutation([2, 3]))
        other = int(rng.integers(2, 4))
        if rng.integers(0, 2):
            shapes = [(shared, other), (shared, other), (odd, other)]
        else:
            shapes = [(other, shared), (other, shared), (other, odd)]
        while True:
            images = [RectPattern(alphabet, rng.integers(0, len(alphabet), size=(h, w))) for w, h in shapes]
            s = Substitution(f"m{i}", alphabet, images)
            if s.letter_injective:
                break
        members.append(s)
    return SubstitutionSet(alphabet, members)


def compatible_pattern(rng, s, width, height):
    """Random pattern whose columns share image widths and rows share image heights under s"""
    column_letters = rng.integers(0, len(s.alphabet), size=width)
    row_letters = rng.integers(0, len(s.alphabet), size=height)
    cells = np.empty((height, width), dtype=np.int32)
    for y in range(height):
        for x in range(width):
            extent = (s.extent(int(column_letters[x]))[0], s.extent(int(row_letters[y]))[1])
            fitting = [a for a in s.alphabet if s.extent(a) == extent]
            cells[y, x] = fitting[int(rng.integers(0, len(fitting)))]
    return RectPattern(s.alphabet, cells)
