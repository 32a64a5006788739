"""Sequence model - effective sequences of substitution names"""
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from sadic.errors import InvalidArgumentError, UnknownSubstitutionError


class SequenceSpec:
    """Eventually periodic sequence of names, optionally overridden by a computable rule

    Index n maps to prefix[n] when n < len(prefix), else
    period[(n - len(prefix)) % len(period)]. A ``rule`` callable, when given,
    decides every index instead.
    """

    __slots__ = ('prefix', 'period', 'rule')

    def __init__(self, prefix: Sequence[str] = (), period: Sequence[str] = (),
                 rule: Optional[Callable[[int], str]] = None):
        prefix, period = tuple(prefix), tuple(period)
        if not period and rule is None:
            raise InvalidArgumentError("sequence needs a nonempty period or a rule")
        self.prefix = prefix
        self.period = period
        self.rule = rule

    @classmethod
    def constant(cls, name: str) -> 'SequenceSpec':
        return cls(period=(name,))

    @classmethod
    def from_prefix(cls, names: Sequence[str]) -> 'SequenceSpec':
        """The given names followed by the last name forever"""
        names = tuple(names)
        if not names:
            raise InvalidArgumentError("empty sequence")
        return cls(prefix=names[:-1], period=names[-1:])

    def __getitem__(self, n: int) -> str:
        if n < 0:
            raise InvalidArgumentError(f"sequence index {n} < 0")
        if self.rule is not None:
            return self.rule(n)
        if n < len(self.prefix):
            return self.prefix[n]
        return self.period[(n - len(self.prefix)) % len(self.period)]

    def take(self, count: int) -> List[str]:
        return [self[n] for n in range(count)]

    def shifted(self, offset: int) -> 'SequenceSpec':
        """The sequence n -> self[n + offset]"""
        if offset == 0:
            return self
        if self.rule is not None:
            rule = self.rule
            return SequenceSpec(rule=lambda n: rule(n + offset))
        if offset <= len(self.prefix):
            return SequenceSpec(self.prefix[offset:], self.period)
        shift = (offset - len(self.prefix)) % len(self.period)
        return SequenceSpec((), self.period[shift:] + self.period[:shift])

    def renamed(self, mapping: Dict[str, str]) -> 'SequenceSpec':
        """Same sequence with every name passed through ``mapping``"""
        if self.rule is not None:
            rule = self.rule
            return SequenceSpec(rule=lambda n: mapping[rule(n)])
        return SequenceSpec([mapping[name] for name in self.prefix], [mapping[name] for name in self.period])

    def validate(self, subs, horizon: int = 0) -> None:
        """Check that every listed name (and rule values up to ``horizon``) resolves"""
        names = list(self.prefix) + list(self.period)
        if self.rule is not None:
            names += [self.rule(n) for n in range(horizon)]
        for name in names:
            if name not in subs:
                raise UnknownSubstitutionError(name)

    def as_document(self) -> Dict[str, List[str]]:
        if self.rule is not None:
            raise InvalidArgumentError("rule-defined sequences have no document form")
        return {'prefix': list(self.prefix), 'period': list(self.period)}

    def __eq__(self, other) -> bool:
        if not isinstance(other, SequenceSpec):
            return NotImplemented
        return (self.prefix, self.period, self.rule) == (other.prefix, other.period, other.rule)

    def __hash__(self) -> int:
        return hash((self.prefix, self.period))

    def __repr__(self) -> str:
        if self.rule is not None:
            return f"SequenceSpec(rule={self.rule!r})"
        return f"SequenceSpec(prefix={list(self.prefix)}, period={list(self.period)})"


def parse_names(text: str) -> Tuple[str, ...]:
    """Split a comma- or whitespace-separated list of names"""
    return tuple(part for part in text.replace(',', ' ').split() if part)
