"""Exception types shared across the package."""


class IsocharError(Exception):
    """Base class for library errors."""


class DimensionMismatch(IsocharError, ValueError):
    pass


class NonIntegralExponent(IsocharError, ValueError):
    pass


class NotDominant(IsocharError, ValueError):
    pass


class NotInvariant(IsocharError, ValueError):
    pass


class NonGenericPoint(IsocharError, ValueError):
    pass


class UnsupportedRootSystem(IsocharError, ValueError):
    pass


class BudgetExceeded(IsocharError, RuntimeError):
    """A size guard or work budget was exceeded."""
