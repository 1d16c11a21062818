"""Exception types shared across the package."""


class SvnCoronaError(Exception):
    """Base class for all package errors."""


class SizeTooSmall(SvnCoronaError):
    """A family spec violates its minimum-order invariant."""


class EmptyOperand(SvnCoronaError):
    """A corona operand has no vertices."""


class UnknownLabel(SvnCoronaError):
    """A vertex label does not exist in the graph under consideration."""


class ArityMismatch(SvnCoronaError):
    """A coloring does not cover the vertex set, or uses an out-of-range color."""


class BudgetExceeded(SvnCoronaError):
    """An exact search ran out of time, nodes, or allowed graph size.

    Carries the best bounds established so far as ``(low, high)``; either
    side may be None when nothing was proven.
    """

    def __init__(self, message: str, bounds: tuple = (None, None)):
        super().__init__(message)
        self.bounds = bounds


class OutOfTheoremRange(SvnCoronaError):
    """A family size is malformed for the closed-form tables (e.g. a path of order 2)."""


class Unsupported(SvnCoronaError):
    """The requested pair falls outside every supported closed-form case."""


class ConstructionInvalid(SvnCoronaError):
    """A constructive coloring failed verification and could not be repaired."""


class HypothesisViolated(SvnCoronaError):
    """Input violates the hypothesis a constructive scheme requires."""


class PreconditionViolated(SvnCoronaError):
    """Operation precondition does not hold for the given arguments."""
