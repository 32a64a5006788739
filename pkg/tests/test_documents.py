"""System documents and pattern files"""
import json

import pytest

from sadic.errors import DocumentError
from sadic.models import SequenceSpec
from sadic.services.documents import (
    builtin_systems, document_from_system, load_pattern, load_substitution_pattern, load_system,
    parse_pattern, parse_substitution_pattern, resolve_system_path, save_pattern, save_system,
    system_from_document
)


def document(**changes):
    base = {
        'alphabet': ['o', 'b'],
        'substitutions': {'s': {'o': ['oo', 'oo'], 'b': ['oo', 'bo']}},
        'sequence': {'prefix': [], 'period': ['s']},
    }
    base.update(changes)
    return base


def test_builtin_systems():
    assert {'example1', 'example3'} <= set(builtin_systems())
    assert resolve_system_path('example3').endswith('example3.json')
    assert resolve_system_path('no/such/file.json') == 'no/such/file.json'


def test_load_example3(example3):
    subs, seq = example3
    assert subs.names == ['a', 'b', 'c', 'd']
    assert subs.get('c').extent(0) == (2, 3)
    assert seq.take(5) == ['d', 'c', 'a', 'a', 'a']


def test_sequence_defaults_to_first_substitution():
    doc = document()
    del doc['sequence']
    _, seq = system_from_document(doc)
    assert seq == SequenceSpec.constant('s')


@pytest.mark.parametrize('changes, key', [
    ({'substitutions': {'s': {'o': ['oo', 'o'], 'b': ['oo', 'bo']}}}, 'substitutions.s.o'),
    ({'substitutions': {'s': {'o': ['oo', 'oo'], 'b': ['oo', 'bo'], 'x': ['oo', 'oo']}}}, 'substitutions.s.x'),
    ({'substitutions': {'s': {'o': ['oo', 'oo']}}}, 'substitutions.s.b'),
    ({'substitutions': {'s': {'o': ['oo'], 'b': ['bo']}}}, 'substitutions.s'),
    ({'substitutions': {}}, 'substitutions'),
    ({'sequence': {'prefix': [], 'period': ['t']}}, 'sequence.period'),
    ({'sequence': {'prefix': ['s'], 'period': []}}, 'sequence.period'),
    ({'alphabet': ['o', 'o']}, 'alphabet'),
])
def test_invalid_documents_name_the_key(changes, key):
    with pytest.raises(DocumentError) as info:
        system_from_document(document(**changes))
    assert info.value.key == key


def test_degenerate_images_allowed_by_flag():
    doc = document(substitutions={'s': {'o': ['oo'], 'b': ['bo']}}, flags={'non_degenerate': False})
    subs, _ = system_from_document(doc)
    assert subs.get('s').extent(1) == (2, 1)


def test_several_images_split_the_substitution():
    doc = document(substitutions={'n': {'o': [['oo', 'oo'], ['ob', 'oo']], 'b': ['oo', 'bo']}})
    del doc['sequence']
    subs, seq = system_from_document(doc)
    assert subs.names == ['n.0', 'n.1']
    assert seq == SequenceSpec.constant('n.0')


def test_round_trip(tmp_path, example3):
    subs, seq = example3
    path = tmp_path / 'systems' / 'copy.json'
    save_system(str(path), subs, seq)
    assert load_system(str(path)) == (subs, seq)
    assert json.loads(path.read_text()) == document_from_system(subs, seq)


def test_invalid_json(tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{"alphabet": [')
    with pytest.raises(DocumentError) as info:
        load_system(str(path))
    assert info.value.key == '<document>'


def test_missing_file():
    with pytest.raises(OSError):
        load_system('no/such/file.json')


def test_patterns_from_files_and_text(tmp_path, example3):
    subs, _ = example3
    p = parse_pattern('obbb/bboo', subs.alphabet)
    path = tmp_path / 'p.txt'
    save_pattern(str(path), p)
    assert load_pattern(str(path), subs.alphabet) == p
    sp = parse_substitution_pattern('a a b a / c c d c', subs)
    assert sp.to_rows() == ['a a b a', 'c c d c']
    grid = tmp_path / 'grid.txt'
    grid.write_text('a a b a\nc c d c\n')
    assert load_substitution_pattern(str(grid), subs) == sp


def test_missing_pattern_file_is_not_read_as_glyphs(example1):
    subs, _ = example1
    with pytest.raises(OSError):
        load_pattern('no/such/pattern.txt', subs.alphabet)


def test_pattern_errors(example3):
    subs, _ = example3
    with pytest.raises(DocumentError) as info:
        parse_pattern('oxo', subs.alphabet)
    assert info.value.key == 'pattern'
    with pytest.raises(DocumentError) as info:
        parse_substitution_pattern('a z', subs)
    assert info.value.key == 'subs'
