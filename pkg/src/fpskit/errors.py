"""Exception taxonomy shared across the package.

Plain division by zero on scalars raises the builtin ZeroDivisionError;
everything else that violates a documented precondition raises a subclass
of ExactError so callers (CLI, HTTP service) can map it to a validation
failure.
"""


class ExactError(Exception):
    """Base class for all contract violations raised by fpskit."""


class NonSquare(ExactError):
    pass


class MissingVariable(ExactError):
    pass


class NonInvertibleConstantTerm(ExactError):
    pass


class NonzeroConstantTermInner(ExactError):
    pass


class BadValuation(ExactError):
    pass


class NotTangentToIdentity(BadValuation):
    pass


class BadConstantTerm(ExactError):
    pass


class InsufficientPrecision(ExactError):
    pass


class IndexOutOfRange(ExactError):
    pass


class BadRange(ExactError):
    pass


class InsufficientSequence(ExactError):
    pass


class ZeroPivot(ExactError):
    """Condensation fast path hit a vanishing interior determinant."""


class SingularExpansion(ExactError):
    """Continued-fraction expansion hit a vanishing leading term."""


class ZeroConstantTerm(ExactError):
    pass


class InsufficientDepth(ExactError):
    pass


class InstanceTooLarge(ExactError):
    pass


class NotFactorizable(ExactError):
    pass


class MalformedRational(ExactError):
    pass


class EmptyCoefficients(ExactError):
    pass
