"""Exception types shared across the package."""


class RibbonError(Exception):
    """Base class for all package-specific errors."""


class IncompatibleShape(RibbonError):
    """A copy of the ribbon meets the skew shape in a non-contiguous set."""


class NonConsecutiveCopies(RibbonError):
    """The nonempty ribbon copies are not a consecutive range."""


class NotSkew(RibbonError):
    """A cell set does not form a valid skew diagram."""


class EmptySection(RibbonError):
    """A ribbon section [a, b) was requested with a >= b."""


class StrandTraceError(RibbonError):
    """Strand segments do not form simple endpoint-terminated paths."""


class BudgetExceeded(RibbonError):
    """An enumeration exceeded the configured budget (see RIL_BUDGET)."""


class ValidityError(RibbonError):
    """A tableau operation produced an invalid filling (internal error)."""
