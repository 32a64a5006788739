"""Exception hierarchy shared by models, services and the CLI"""


class SadicError(Exception):
    """Base class for all domain errors (CLI exit code 1)"""


class InvalidArgumentError(SadicError, ValueError):
    """A precondition on an argument does not hold"""


class AlphabetMismatchError(SadicError):
    """Two objects that must share an alphabet do not"""


class ShapeMismatchError(SadicError):
    """Two rectangular objects that must share a shape do not"""


class UnknownSubstitutionError(SadicError, KeyError):
    """A substitution name does not resolve in its set"""

    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unknown substitution {self.name!r}"


class IncompatibilityError(SadicError):
    """A substitution (pattern) is not compatible with a pattern

    Attributes:
        witness: the offending pattern (for compose, the failing two-cell pattern)
        stage: sequence index at which iteration failed, if any
    """

    def __init__(self, message, witness=None, stage=None):
        super().__init__(message)
        self.witness = witness
        self.stage = stage


class BudgetExceededError(SadicError):
    """An enumeration produced more items than its budget allows"""

    def __init__(self, what, budget, partial_count):
        super().__init__(f"{what}: budget of {budget} exceeded after {partial_count} items")
        self.budget = budget
        self.partial_count = partial_count


class UnparseableSampleError(SadicError):
    """No remaining candidate substitution parses a sample"""

    def __init__(self, message, stage=None, level=None):
        super().__init__(message)
        self.stage = stage
        self.level = level


class DocumentError(SadicError):
    """A system document failed validation

    Attributes:
        key: dotted path of the offending key
    """

    def __init__(self, key, message):
        super().__init__(f"{key}: {message}")
        self.key = key


class LiftError(SadicError):
    """A substitution set cannot be lifted to the decorated alphabet"""


class PaletteError(SadicError):
    """A palette does not cover the alphabet"""


class ConfigurationError(ValueError):
    """An environment setting cannot be read (CLI exit code 2)"""

    def __init__(self, name, value):
        super().__init__(f"{name}: expected an integer, got {value!r}")
        self.name = name
