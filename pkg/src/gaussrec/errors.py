"""Exception hierarchy shared by all gaussrec modules."""


class GaussRecError(Exception):
    """Base class for all domain errors raised by this package."""


class PoleOfGamma(GaussRecError):
    """A gamma factor was requested at a non-positive integer argument."""


class NoConvergence(GaussRecError):
    """A series did not converge within the allowed number of terms."""


class DegenerateConnection(GaussRecError):
    """A two-term connection formula hit an (near-)integer parameter
    combination for which it is numerically unstable."""


class SingularPoint(GaussRecError):
    """z lies in the singular set of the requested quantity."""


class SingularPrefactor(GaussRecError):
    """A transformation prefactor is singular at this (z, n)."""


class BoundaryIndeterminate(GaussRecError):
    """z lies within the indeterminacy band of a |t1| = |t2| boundary,
    where neither solution dominates."""


class StepSingular(GaussRecError):
    """The leading recurrence coefficient vanished at some index."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"leading coefficient vanishes at n={index}")


class TraceFailure(GaussRecError):
    """A boundary bisection could not bracket a sign change where one
    was expected."""


class VoidShift(GaussRecError):
    """The all-zero shift vector selects no recursion family."""


class CatastrophicCancellation(GaussRecError):
    """A difference of two solutions lost essentially all significant digits."""


class DomainError(GaussRecError):
    """An argument lies outside the mathematical domain of the operation."""
