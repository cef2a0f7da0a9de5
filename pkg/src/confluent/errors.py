"""Exception and warning types shared across the library."""


class ConfluentError(Exception):
    """Base class for all library errors."""


class PoleError(ConfluentError, ValueError):
    """An argument landed on (or within tolerance of) a pole of Pi."""


class DomainError(ConfluentError, ValueError):
    """Arguments violate an operation's documented domain."""


class IntegerDifferenceError(DomainError):
    """alpha - beta is (nearly) an integer, where the two-series form breaks down."""


class NonConvergenceError(ConfluentError, ArithmeticError):
    """A series term budget was exhausted before the stopping rule fired."""

    def __init__(self, message, *, value=None, work=0):
        super().__init__(message)
        self.value = value
        self.work = work


class UnknownIdentityError(ConfluentError, KeyError):
    """Identity key not present in the catalog registry."""


class VariantResolutionError(ConfluentError, RuntimeError):
    """Empirical variant adoption failed; carries the residual table."""

    def __init__(self, message, table=None):
        super().__init__(message)
        self.table = table or {}


class AmbiguousVariantError(VariantResolutionError):
    """More than one candidate variant passed the probe grid."""


class NoVariantError(VariantResolutionError):
    """No candidate variant passed the probe grid."""


class OracleQualityError(ConfluentError, ArithmeticError):
    """The quadrature reference is too noisy for the requested comparison."""


class SlowDecayWarning(UserWarning):
    """Oscillatory integrand decays slowly; tail acceleration is mandatory."""


class DegenerateBracketWarning(UserWarning):
    """Term magnitudes never started growing within the internal budget."""
