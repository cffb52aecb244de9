"""Exception types shared across the package."""


class MultCoefError(Exception):
    """Base class for all errors raised by multcoef."""


class PartitionParseError(MultCoefError, ValueError):
    """Text could not be read as a partition."""


class NotDecreasing(PartitionParseError):
    """Parts were given in increasing order somewhere."""


class SizeMismatch(MultCoefError, ValueError):
    """Arguments that must have equal (or compatible) sizes do not."""


class Infeasible(MultCoefError):
    """No algorithm path fits the configured budgets for this query."""


class PreconditionViolated(MultCoefError, ValueError):
    """A specialised algorithm was called outside its domain of validity."""


class VariableCountMismatch(MultCoefError, ValueError):
    """Symmetric polynomials in different numbers of variables were combined."""


class NegativeCoefficient(MultCoefError, ValueError):
    """Plethystic substitution needs a polynomial with nonnegative coefficients."""
