"""Sufficient conditions and the bounded property A search"""
import pytest

from conftest import pattern, random_system
from sadic.errors import BudgetExceededError, InvalidArgumentError
from sadic.models import (
    PropertyAStatus, PropertyAWitness, SubstitutionPattern, Substitution, SubstitutionSet
)
from sadic.services.property_a import bounded_property_a, sufficient_property_a, verify_witness

BUDGET = 50000


@pytest.fixture
def mixed(ob):
    return Substitution.from_rows('t', ob, {'o': ['oo', 'oo'], 'b': ['ooo', 'obo', 'boo']})


@pytest.fixture
def stuck(ob):
    """u blows a blank block up to 3x3, but nothing gives b a height of 3"""
    t = Substitution.from_rows('t', ob, {'o': ['oo', 'oo'], 'b': ['oob', 'oob']})
    u = Substitution.from_rows('u', ob, {'o': ['ooo', 'ooo', 'ooo'], 'b': ['oo', 'bo']})
    return SubstitutionSet(ob, [t, u])


def test_sufficient_conditions(example3, mixed, ob):
    subs, _ = example3
    assert sufficient_property_a(subs).status is PropertyAStatus.HOLDS_UNIFORM_SUPPORT
    assert sufficient_property_a(SubstitutionSet(ob, [mixed])).status is PropertyAStatus.HOLDS_SINGLETON
    pair = SubstitutionSet(ob, [mixed, example3[0].get('a')])
    verdict = sufficient_property_a(pair)
    assert verdict.status is PropertyAStatus.UNKNOWN
    assert not verdict.holds


def test_bounded_single_substitution(example1):
    subs, _ = example1
    verdict = bounded_property_a(subs, 2, 1, budget=BUDGET)
    assert verdict.status is PropertyAStatus.NO_COUNTEREXAMPLE
    assert verdict.witness is None
    assert verdict.checked > 0


def test_bounded_square_pair(example3):
    subs, _ = example3
    verdict = bounded_property_a(subs.subset(['a', 'd']), 1, 1, budget=BUDGET)
    assert verdict.status is PropertyAStatus.NO_COUNTEREXAMPLE


def test_bounded_finds_counterexample(stuck):
    verdict = bounded_property_a(stuck, 1, 1, budget=BUDGET)
    assert verdict.status is PropertyAStatus.COUNTEREXAMPLE
    witness = verdict.witness
    assert len(witness.chain) == 1
    assert verify_witness(stuck, witness, budget=BUDGET)


def test_counterexample_witness_in_stuck_pattern(stuck, ob):
    verdict = bounded_property_a(stuck, 1, 1, budget=BUDGET)
    assert verdict.witness.pattern == pattern(ob, "oob/oob")
    assert verdict.witness.blocks[0] == pattern(ob, "oo/oo")
    assert verdict.witness.blocks[1].shape == (6, 6)


def test_verify_witness_rejects_inconsistent_chain(stuck, ob):
    p = pattern(ob, "oob/oob")
    block = pattern(ob, "oo/oo")
    sp = SubstitutionPattern.constant(stuck, 't', 2, 2)
    # the stated image is not t applied to the block
    wrong = PropertyAWitness(p, (0, 0), (sp,), (block, pattern(ob, "ooo/ooo/ooo")))
    assert not verify_witness(stuck, wrong, budget=BUDGET)
    misplaced = PropertyAWitness(p, (1, 0), (sp,), (block, pattern(ob, "oooo/oooo/oooo/oooo")))
    assert not verify_witness(stuck, misplaced, budget=BUDGET)


def test_extendable_chain_is_not_a_witness(stuck, ob):
    p = pattern(ob, "oob/oob")
    block = pattern(ob, "oo/oo")
    sp = SubstitutionPattern.constant(stuck, 't', 2, 2)
    extendable = PropertyAWitness(p, (0, 0), (sp,), (block, pattern(ob, "oooo/oooo/oooo/oooo")))
    assert not verify_witness(stuck, extendable, budget=BUDGET)


def test_bounded_arguments(example1):
    subs, _ = example1
    with pytest.raises(InvalidArgumentError):
        bounded_property_a(subs, 0, 1, budget=BUDGET)
    with pytest.raises(InvalidArgumentError):
        bounded_property_a(subs, 1, 0, budget=BUDGET)


def test_bounded_budget(example3):
    subs, _ = example3
    with pytest.raises(BudgetExceededError):
        bounded_property_a(subs, 2, 2, budget=5)


def test_uniform_support_members_never_fail(rng):
    for _ in range(10):
        subs, _ = random_system(rng, max_members=2)
        verdict = bounded_property_a(subs, 1, 1, budget=BUDGET)
        assert verdict.status is PropertyAStatus.NO_COUNTEREXAMPLE
