"""Exception and warning types shared across the toolkit."""


class GelfandError(Exception):
    """Base class for all toolkit errors."""


class NoZeroFound(GelfandError):
    """Shooting integration found no sign change before r_max.

    The radial solution always vanishes in finite radius for a > 0, so this
    signals a misconfigured integration window.
    """


class NonFiniteState(GelfandError):
    """Integration state overflowed or produced NaN (step size too large)."""


class OutOfRange(GelfandError, ValueError):
    """Parameter outside the admissible range of the requested formula."""


class GridMismatch(GelfandError, ValueError):
    """Sampled data does not live on the operator's grid."""


class DimensionMismatch(GelfandError, ValueError):
    """Fiber/ball dimensions of two objects disagree."""


class NotInvertible(GelfandError):
    """Linearized radial operator has mu_1 <= 0; comparison solve refused."""


class NearSingular(GelfandError):
    """Tube linear solve stalled; eps is too close to the resonant set."""


class NoConvergence(GelfandError):
    """Fixed-point iteration exceeded its iteration budget."""


class DivergedFromBall(GelfandError):
    """Fixed-point iterate left its admissible ball ||v|| <= C*eps."""


class MultipleStableSolutions(GelfandError):
    """Two distinct stable tube solutions were found; flags a bug or a
    too-large eps (uniqueness must hold in the stable regime)."""


class InequalityFails(GelfandError):
    """A pointwise comparison inequality failed at the current eps."""


class TangencyWarning(UserWarning):
    """Branch count requested at a level tangent to a fold; count ambiguous."""


class SlowConvergenceWarning(UserWarning):
    """Eigenpair iteration converged slowly (near-degenerate pair)."""
