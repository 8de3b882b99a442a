"""Exception hierarchy for ginisafe.

Public functions raise these instead of bare ValueError so callers (and the
CLI) can map failures to exit codes and name the violated invariant.
"""


class GiniSafeError(Exception):
    """Base error for this package."""


class ValidationError(GiniSafeError, ValueError):
    """Input violates a domain invariant (shape, range, normalization)."""


class NegativeEntryError(ValidationError):
    """A probability entry is negative beyond the allowed tolerance."""


class NotNormalizedError(ValidationError):
    """Probabilities do not sum to 1 within the allowed tolerance."""


class DimensionMismatchError(ValidationError):
    """Operands have incompatible dimensions."""


class IndexOutOfRangeError(ValidationError, IndexError):
    """A component position or level index is outside [0, d)."""


class DimensionTooLargeError(ValidationError):
    """The requested dense object exceeds the supported size budget."""


class NotProductFormError(GiniSafeError):
    """A tensor asserted to be product-form carries correlations above tolerance."""


class CorrelatedSpecRejectedError(GiniSafeError):
    """Operation is defined for independent ensembles only."""
