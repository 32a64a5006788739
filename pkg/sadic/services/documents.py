"""
Document Service
JSON system documents, pattern files and the shipped example systems
"""
import json
import logging
import os
from typing import Dict, List, Tuple

from sadic.errors import DocumentError, SadicError
from sadic.models import (
    Alphabet, RectPattern, SequenceSpec, Substitution, SubstitutionPattern, SubstitutionSet
)
from sadic.services.grid import split_nondeterministic

logger = logging.getLogger(__name__)

SYSTEMS_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'static', 'systems')


def builtin_systems() -> List[str]:
    """Names of the shipped example systems"""
    return sorted(name[:-len('.json')] for name in os.listdir(SYSTEMS_DIR) if name.endswith('.json'))


def resolve_system_path(path: str) -> str:
    """A file path, or the name of a shipped system such as ``example1``"""
    if not os.path.exists(path) and path in builtin_systems():
        return os.path.join(SYSTEMS_DIR, f"{path}.json")
    return path


# ========== System documents ==========

def _require(document: Dict, key: str, kind, path: str):
    if key not in document:
        raise DocumentError(path, "missing key")
    value = document[key]
    if not isinstance(value, kind):
        raise DocumentError(path, f"expected {kind.__name__}, got {type(value).__name__}")
    return value


def _pattern(alphabet: Alphabet, rows, path: str) -> RectPattern:
    if not isinstance(rows, list) or not all(isinstance(row, str) for row in rows):
        raise DocumentError(path, "image must be a list of row strings")
    try:
        return RectPattern.from_rows(alphabet, rows)
    except SadicError as exc:
        raise DocumentError(path, str(exc)) from exc


def system_from_document(document: Dict, non_degenerate: bool = True) -> Tuple[SubstitutionSet, SequenceSpec]:
    """Validated core objects from a parsed system document

    A letter may map to a list of images; its substitution is then split into
    the deterministic choices ``name.0``, ``name.1``, ...
    """
    if not isinstance(document, dict):
        raise DocumentError('<document>', "expected an object")
    glyphs = _require(document, 'alphabet', list, 'alphabet')
    try:
        alphabet = Alphabet(glyphs)
    except SadicError as exc:
        raise DocumentError('alphabet', str(exc)) from exc

    flags = document.get('flags', {})
    if not isinstance(flags, dict):
        raise DocumentError('flags', "expected an object")
    non_degenerate = bool(flags.get('non_degenerate', non_degenerate))

    rules = _require(document, 'substitutions', dict, 'substitutions')
    if not rules:
        raise DocumentError('substitutions', "no substitutions")
    members = []
    for name, images in rules.items():
        key = f"substitutions.{name}"
        if not isinstance(images, dict):
            raise DocumentError(key, "expected an object mapping glyphs to rows")
        unknown = sorted(set(images) - set(alphabet.glyphs))
        if unknown:
            raise DocumentError(f"{key}.{unknown[0]}", "unknown glyph")
        missing = [glyph for glyph in alphabet.glyphs if glyph not in images]
        if missing:
            raise DocumentError(f"{key}.{missing[0]}", "missing image")
        choices = {}
        for glyph in alphabet.glyphs:
            value = images[glyph]
            if _has_several_images(value):
                choices[alphabet.letter(glyph)] = [
                    _pattern(alphabet, rows, f"{key}.{glyph}[{i}]") for i, rows in enumerate(value)]
            else:
                choices[alphabet.letter(glyph)] = [_pattern(alphabet, value, f"{key}.{glyph}")]
        try:
            if all(len(options) == 1 for options in choices.values()):
                members.append(Substitution(name, alphabet, [choices[a][0] for a in alphabet],
                                            non_degenerate=non_degenerate))
            else:
                members.extend(split_nondeterministic(name, alphabet, choices, non_degenerate).members)
        except SadicError as exc:
            raise DocumentError(key, str(exc)) from exc
    try:
        subs = SubstitutionSet(alphabet, members)
    except SadicError as exc:
        raise DocumentError('substitutions', str(exc)) from exc

    seq = _sequence(document.get('sequence'), subs)
    logger.debug("Loaded %d substitutions over %d letters", len(subs), len(alphabet))
    return subs, seq


def _has_several_images(value) -> bool:
    """Rows are strings, so a list of lists is a list of images"""
    return isinstance(value, list) and bool(value) and all(isinstance(image, list) for image in value)


def _sequence(value, subs: SubstitutionSet) -> SequenceSpec:
    if value is None:
        return SequenceSpec.constant(subs.names[0])
    if not isinstance(value, dict):
        raise DocumentError('sequence', "expected an object with prefix and period")
    prefix = value.get('prefix', [])
    period = value.get('period', [])
    for key, names in (('prefix', prefix), ('period', period)):
        if not isinstance(names, list) or not all(isinstance(name, str) for name in names):
            raise DocumentError(f"sequence.{key}", "expected a list of substitution names")
        for name in names:
            if name not in subs:
                raise DocumentError(f"sequence.{key}", f"unknown substitution {name!r}")
    if not period:
        raise DocumentError('sequence.period', "period must be nonempty")
    return SequenceSpec(prefix, period)


def document_from_system(subs: SubstitutionSet, seq: SequenceSpec) -> Dict:
    return {
        'alphabet': list(subs.alphabet.glyphs),
        'substitutions': {s.name: s.rules() for s in subs},
        'sequence': seq.as_document(),
        'flags': {'non_degenerate': all(s.non_degenerate for s in subs)},
    }


def load_system(path: str, non_degenerate: bool = True) -> Tuple[SubstitutionSet, SequenceSpec]:
    """Load a system document; validation errors name the offending key"""
    path = resolve_system_path(path)
    with open(path, encoding='utf-8') as f:
        try:
            document = json.load(f)
        except json.JSONDecodeError as exc:
            raise DocumentError('<document>', f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return system_from_document(document, non_degenerate)


def save_system(path: str, subs: SubstitutionSet, seq: SequenceSpec) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(document_from_system(subs, seq), f, indent=2, ensure_ascii=False)
        f.write('\n')


# ========== Pattern files ==========

def read_text(path: str) -> str:
    with open(path, encoding='utf-8') as f:
        return f.read()


def parse_pattern(text: str, alphabet: Alphabet) -> RectPattern:
    """Glyph rows, top row first ('/' or newlines separate rows)"""
    try:
        return RectPattern.from_text(alphabet, text)
    except SadicError as exc:
        raise DocumentError('pattern', str(exc)) from exc


def load_pattern(path: str, alphabet: Alphabet) -> RectPattern:
    """Pattern file; a missing file raises OSError"""
    return parse_pattern(read_text(path), alphabet)


def parse_substitution_pattern(text: str, subs: SubstitutionSet) -> SubstitutionPattern:
    """Whitespace-separated substitution names, top row first"""
    try:
        return SubstitutionPattern.from_text(subs, text)
    except SadicError as exc:
        raise DocumentError('subs', str(exc)) from exc


def load_substitution_pattern(path: str, subs: SubstitutionSet) -> SubstitutionPattern:
    return parse_substitution_pattern(read_text(path), subs)


def save_pattern(path: str, p: RectPattern) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        f.write(p.to_text() + '\n')


def example_system(name: str) -> Tuple[SubstitutionSet, SequenceSpec]:
    return load_system(os.path.join(SYSTEMS_DIR, f"{name}.json"))

