"""Exception types shared across the toolkit.

Everything numerical that can fail derives from :class:`FodiError` so the
CLI can map library failures onto a single exit code.
"""


class FodiError(Exception):
    """Base class for all toolkit errors."""


class DegreeZero(FodiError):
    """Root finding requested on a constant polynomial."""


class NearPole(FodiError):
    """Unit-circle evaluation landed on (or numerically at) a pole."""

    def __init__(self, omega, denom_mag):
        self.omega = omega
        self.denom_mag = denom_mag
        super().__init__(
            f"denominator magnitude {denom_mag:.3e} at omega={omega:.6g} rad/s "
            "is below the near-pole guard"
        )


class BadAlpha(FodiError):
    """Interpolation weight outside [0, 1]."""


class BadT(FodiError):
    """Non-positive sampling time."""


class NotAnalytic(FodiError):
    """Operand is not analytic and nonzero at x = 0, so no power series exists."""


class Breakdown(FodiError):
    """Continued-fraction development hit a (numerically) vanishing partial term."""


class SingularTable(FodiError):
    """The Pade system is numerically singular; carries condition diagnostics."""

    def __init__(self, message, condition=None):
        self.condition = condition
        if condition is not None:
            message = f"{message} (condition estimate {condition:.3e})"
        super().__init__(message)


class BadRange(FodiError):
    """Invalid frequency-grid request."""


class SpecMismatch(FodiError):
    """Objective configuration does not match the filter's realization spec."""


class AllInfeasible(FodiError):
    """Every objective evaluation returned the infinite-cost sentinel."""


class ZeroNumerator(FodiError):
    """Filter inversion requested on a zero numerator."""
