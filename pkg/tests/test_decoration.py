"""Lifting, projections, synchronisation and history words"""
import pytest

from conftest import pattern, random_system
from sadic.errors import InvalidArgumentError, LiftError
from sadic.models import (
    Alphabet, DecoratedLetter, RectPattern, SequenceSpec, Substitution, SubstitutionSet
)
from sadic.services.decoration import (
    history_word, lift_set, lift_substitution, project, ruler_word, sync_check
)
from sadic.services.grid import iterate
from sadic.services.language import local_language


@pytest.fixture
def ruler_system(ob):
    """Three substitutions of width 2 applied in the period u, v, w"""
    members = [Substitution.from_rows(name, ob, {'o': ['oo', 'oo'], 'b': ['ob', 'bo']})
               for name in ('u', 'v', 'w')]
    return SubstitutionSet(ob, members), SequenceSpec(period=['u', 'v', 'w'])


def test_lifted_image_example3(example3):
    subs, _ = example3
    system = lift_set(subs)
    assert len(system.alphabet) == 32
    lifted = system.lifted_set.get('~a')
    image = lifted.image(system.letter(subs.alphabet.letter('b'), 'c', 'd'))
    assert project(image, 'base').to_rows() == ['oo', 'bo']
    assert project(image, 'V').to_rows() == ['ac', 'ac']
    assert project(image, 'H').to_rows() == ['dd', 'aa']


def test_lifted_names_and_sequence(example3):
    subs, seq = example3
    system = lift_set(subs)
    assert system.lifted_set.names == ['~a', '~b', '~c', '~d']
    assert system.lifted_name('c') == '~c'
    assert system.lift_sequence(seq).take(4) == ['~d', '~c', '~a', '~a']


def test_lift_refuses_lifted_sets(example1):
    subs, _ = example1
    system = lift_set(subs)
    with pytest.raises(LiftError):
        lift_set(system.lifted_set)
    marked = SubstitutionSet(subs.alphabet, [subs.get('s').renamed('~s')])
    with pytest.raises(LiftError):
        lift_set(marked)


def test_lift_single_member(example3):
    subs, _ = example3
    lifted = lift_substitution(subs.get('d'), subs)
    assert lifted.name == '~d'
    assert lifted.uniform_support


def test_projection_commutes_with_iteration(rng):
    for _ in range(50):
        subs, seq = random_system(rng)
        system = lift_set(subs)
        level = int(rng.integers(0, 4))
        base = int(rng.integers(0, len(subs.alphabet)))
        v, h = (subs.names[int(k)] for k in rng.integers(0, len(subs), size=2))
        grown = iterate(system.lifted_set, system.lift_sequence(seq), level, system.letter(base, v, h))
        assert project(grown, 'base') == iterate(subs, seq, level, base)
        assert sync_check(grown)


def test_sync_check_orientation(example1):
    subs, _ = example1
    system = lift_set(subs)
    ts = DecoratedLetter(0, 's', 's')
    # same V-name up a column
    column = RectPattern(system.alphabet, [[system.alphabet.encode(ts)], [system.alphabet.encode(ts)]])
    assert sync_check(column)
    row = RectPattern(system.alphabet, [[system.alphabet.encode(ts), system.letter(1, 's', 's')]])
    assert sync_check(row)


def test_sync_check_detects_mismatch(ob):
    subs = SubstitutionSet(ob, [
        Substitution.from_rows('x', ob, {'o': ['oo', 'oo'], 'b': ['oo', 'bo']}),
        Substitution.from_rows('y', ob, {'o': ['oo', 'oo'], 'b': ['bo', 'oo']}),
    ])
    system = lift_set(subs)
    # horizontal neighbours may carry different V-names
    row = RectPattern(system.alphabet, [[system.letter(0, 'x', 'x'), system.letter(0, 'y', 'x')]])
    assert sync_check(row)
    column = RectPattern(system.alphabet, [[system.letter(0, 'x', 'x')], [system.letter(0, 'y', 'x')]])
    assert not sync_check(column)
    row = RectPattern(system.alphabet, [[system.letter(0, 'x', 'x'), system.letter(0, 'x', 'y')]])
    assert not sync_check(row)


def test_history_word(ruler_system):
    subs, seq = ruler_system
    seed = DecoratedLetter(1, 'v', 'u')
    assert history_word(subs, seq, 2, seed) == ['u', 'v', 'u', 'w', 'u', 'v', 'u', 'v']
    assert history_word(subs, seq, 0, seed) == ['u', 'v']


def test_history_word_is_the_ruler_word(ruler_system):
    subs, seq = ruler_system
    for level in range(7):
        word = history_word(subs, seq, level, DecoratedLetter(0, 'w', 'w'))
        assert len(word) == 2 ** (level + 1)
        assert word == ruler_word(subs, seq, level, 'w')


def test_ruler_word_matches_history_example1(example1):
    subs, seq = example1
    for level in range(7):
        seed = DecoratedLetter(1, 's', 's')
        assert history_word(subs, seq, level, seed) == ruler_word(subs, seq, level, 's')


def test_ruler_word_matches_history_random(rng):
    for _ in range(20):
        subs, seq = random_system(rng)
        level = int(rng.integers(0, 4))
        seed_name = subs.names[-1]
        seed = DecoratedLetter(0, seed_name, subs.names[0])
        assert history_word(subs, seq, level, seed) == ruler_word(subs, seq, level, seed_name)


def test_ruler_word_needs_uniform_widths(ob):
    t = Substitution.from_rows('t', ob, {'o': ['oo', 'oo'], 'b': ['ooo', 'boo']})
    subs = SubstitutionSet(ob, [t])
    with pytest.raises(InvalidArgumentError):
        ruler_word(subs, SequenceSpec.constant('t'), 1, 't')


def test_project_errors(example1):
    subs, _ = example1
    with pytest.raises(InvalidArgumentError):
        project(pattern(subs.alphabet, "ob"), 'V')
    system = lift_set(subs)
    with pytest.raises(InvalidArgumentError):
        project(RectPattern.single(system.alphabet, 0), 'diagonal')


def test_projection_alphabet_is_the_names(example3):
    subs, _ = example3
    system = lift_set(subs)
    image = system.lifted_set.get('~b').image(system.letter(0, 'a', 'a'))
    assert project(image, 'V').alphabet == Alphabet(['a', 'b', 'c', 'd'])


def test_sync_check_vertical_pair_ignores_h_names(example3):
    subs, _ = example3
    system = lift_set(subs)
    o = subs.alphabet.letter('o')
    # (o, a, c) below (o, a, a): same V-name up the column
    column = RectPattern(system.alphabet, [[system.letter(o, 'a', 'c')], [system.letter(o, 'a', 'a')]])
    assert sync_check(column)
    row = RectPattern(system.alphabet, [[system.letter(o, 'a', 'a'), system.letter(o, 'c', 'a')]])
    assert sync_check(row)


def test_projection_transports_window_languages(rng):
    for _ in range(10):
        subs, seq = random_system(rng, max_members=2)
        system = lift_set(subs)
        level = int(rng.integers(1, 3))
        lifted = local_language(system.lifted_set, system.lift_sequence(seq), level, 2, 2)
        assert lifted.map(lambda p: project(p, 'base')) == local_language(subs, seq, level, 2, 2)


def test_every_level_reaches_commutation(example3):
    subs, seq = example3
    system = lift_set(subs)
    for level in range(4):
        for base in subs.alphabet:
            grown = iterate(system.lifted_set, system.lift_sequence(seq), level, system.letter(base, 'a', 'd'))
            assert project(grown, 'base') == iterate(subs, seq, level, base)
            assert sync_check(grown)
