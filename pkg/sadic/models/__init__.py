"""
Sadic Models
Value types: alphabets, patterns, substitutions, sequences and result records
"""
from sadic.models.alphabet import Alphabet
from sadic.models.pattern import RectPattern, canonical
from sadic.models.substitution import Substitution, SubstitutionSet, SubstitutionPattern, SizeProfile
from sadic.models.sequence import SequenceSpec, parse_names
from sadic.models.decorated import DecoratedLetter, DecoratedAlphabet, DecoratedSystem, LIFT_MARKER
from sadic.models.results import (
    LanguageMode, LanguageQuery, WindowSet, ParseResult, AmbiguityReport,
    UniqueDerivationCounterexample, PropertyAStatus, PropertyAWitness, PropertyAVerdict
)

__all__ = [
    'Alphabet', 'RectPattern', 'canonical',
    'Substitution', 'SubstitutionSet', 'SubstitutionPattern', 'SizeProfile',
    'SequenceSpec', 'parse_names',
    'DecoratedLetter', 'DecoratedAlphabet', 'DecoratedSystem', 'LIFT_MARKER',
    'LanguageMode', 'LanguageQuery', 'WindowSet', 'ParseResult', 'AmbiguityReport',
    'UniqueDerivationCounterexample', 'PropertyAStatus', 'PropertyAWitness', 'PropertyAVerdict'
]
