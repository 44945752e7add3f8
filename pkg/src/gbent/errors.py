class GbentError(ValueError):
    """Base class for precondition failures raised by this package."""


class FormMismatch(GbentError):
    pass


class OddDimension(GbentError):
    pass


class NotGbent(GbentError):
    pass


class RegularityViolation(AssertionError):
    """A gbent function over Z_{2^t} had a Walsh value not of the form
    2^(n/2) * zeta^j.  This cannot happen for correct code."""


class ConditionViolated(GbentError):
    pass


class IncompleteSpread(GbentError):
    pass


class InvalidSpread(GbentError):
    pass


class ZeroValueOnSpread(GbentError):
    pass


class HypothesisViolated(GbentError):
    pass


class BadParameters(GbentError):
    pass


class ZeroCoefficientVector(GbentError):
    pass


class NotABijection(GbentError):
    pass


class BoundViolated(GbentError):
    pass


class RDSParamsError(GbentError):
    pass
