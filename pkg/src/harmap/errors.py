"""Exception types shared across the package."""


class HarmapError(Exception):
    """Base class for all package-specific errors."""


class DivisorVanishesAtOrigin(HarmapError):
    """Series division requires a divisor with nonzero constant term."""


class SectionBeyondTruncation(HarmapError):
    """Requested partial-sum index exceeds the stored truncation degree."""


class NonUnimodularParameter(HarmapError):
    """A parameter that must lie on the unit circle does not."""


class CriticalPoint(HarmapError):
    """The analytic-part derivative vanishes, so the dilatation is undefined."""


class DegenerateDilatation(HarmapError):
    """Shear system is singular: 1 +/- omega(0) is numerically zero."""


class DegenerateDenominator(HarmapError):
    """Convexity functional denominator z*h' - conj(z*g') is numerically zero."""


class UnknownCatalogName(HarmapError):
    """No catalog entry under the requested name."""


class BadBracket(HarmapError):
    """Bisection preconditions violated: predicate must pass at lo and fail at hi."""
