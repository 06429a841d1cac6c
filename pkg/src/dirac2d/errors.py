"""Exception hierarchy for the package."""

from __future__ import annotations


class Dirac2DError(Exception):
    """Base class for all errors raised by dirac2d."""


class InvalidState(Dirac2DError, ValueError):
    """A set of quantum numbers violates a selection constraint."""


class InvalidKappa(InvalidState):
    """kappa is not a half-odd integer or exceeds n - 1/2."""


class ForbiddenNegativeKappa(InvalidState):
    """kappa < 0 requested for a nodeless (n' = 0) state."""


class MuMismatch(InvalidState):
    """|mu| differs from |kappa|."""


class SupercriticalCharge(Dirac2DError, ValueError):
    """lambda >= kappa**2, so the origin exponent gamma is not real."""


class IncompatibleBeta(Dirac2DError, ValueError):
    """PolyExp terms with different exponential decay rates were combined."""


class NonIntegerGammaGap(Dirac2DError, ValueError):
    """PolyExp terms whose power exponents differ by a non-integer were combined."""


class DivergentIntegral(Dirac2DError, ValueError):
    """Moment requested for a PolyExp that is not integrable on (0, inf)."""


class DomainError(Dirac2DError, ValueError):
    """PolyExp evaluated outside its domain."""


class NotApplicable(Dirac2DError, ValueError):
    """A closed form was requested for a state it does not cover."""


class DegenerateDenominator(Dirac2DError, ArithmeticError):
    """The c*kappa + d denominator of the general closed form vanished."""


class NoEigenvalueNear(Dirac2DError, RuntimeError):
    """The discrete radial problem has no eigenvalue close to the guess."""


class ConvergenceFailure(Dirac2DError, RuntimeError):
    """The sparse eigensolver did not converge."""
