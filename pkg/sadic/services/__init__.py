"""
Sadic Services
Grid algebra, languages, decoration, derivation, property A, documents and rendering
"""
from sadic.services.grid import (
    apply_nonuniform, apply_stages, apply_uniform, appears_in, avoids, block_offsets,
    check_compat_nonuniform, check_compat_uniform, compatibility_witness,
    compatible_substitution_patterns, compose, iterate, pairwise_compositions, phi,
    size_profile, split_nondeterministic
)
from sadic.services.language import (
    LanguageEnumerator, global_language, local_language, local_language_set, row_word,
    s_patterns, separation_witnesses, two_by_two_blocks, windows_of
)
from sadic.services.decoration import (
    history_word, lift_set, lift_substitution, project, ruler_word, sync_check
)
from sadic.services.derivation import (
    SequenceRecovery, desubstitute, recover_sequence, unique_derivation_check, verify_parse
)
from sadic.services.property_a import (
    PropertyASearch, bounded_property_a, sufficient_property_a, verify_witness
)
from sadic.services.documents import load_pattern, load_system, save_system
from sadic.services.renderer import render

__all__ = [
    'apply_nonuniform', 'apply_stages', 'apply_uniform', 'appears_in', 'avoids', 'block_offsets',
    'check_compat_nonuniform', 'check_compat_uniform', 'compatibility_witness',
    'compatible_substitution_patterns', 'compose', 'iterate', 'pairwise_compositions', 'phi',
    'size_profile', 'split_nondeterministic',
    'LanguageEnumerator', 'global_language', 'local_language', 'local_language_set', 'row_word',
    's_patterns', 'separation_witnesses', 'two_by_two_blocks', 'windows_of',
    'history_word', 'lift_set', 'lift_substitution', 'project', 'ruler_word', 'sync_check',
    'SequenceRecovery', 'desubstitute', 'recover_sequence', 'unique_derivation_check', 'verify_parse',
    'PropertyASearch', 'bounded_property_a', 'sufficient_property_a', 'verify_witness',
    'load_pattern', 'load_system', 'save_system',
    'render'
]
