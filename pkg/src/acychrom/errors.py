"""Exception hierarchy shared by every module."""


class AcychromError(Exception):
    """Base class for all package errors."""


class FormatError(AcychromError, ValueError):
    """Malformed graph or order file."""


class AntisymmetryViolation(FormatError):
    """Both (i, j) and (j, i) present, a missing pair in a tournament, or a bad diagonal."""


class NotAPermutation(FormatError):
    """An order does not list 0..n-1 exactly once."""


class SizeLimitExceeded(AcychromError):
    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class DimensionMismatch(AcychromError, ValueError):
    pass


class PreconditionViolated(AcychromError, ValueError):
    pass


class VerificationFailed(AcychromError):
    """A post-condition check on a constructed certificate did not hold."""


class Timeout(AcychromError):
    """Exact search ran past its wall-clock budget.

    ``lower`` and ``upper`` carry the best bounds known when the budget ran out.
    """

    def __init__(self, what: str, lower: int, upper: int):
        super().__init__(f"{what}: timed out with bounds [{lower}, {upper}]")
        self.lower = lower
        self.upper = upper


class NoOddCycle(AcychromError):
    """The subdivision is bipartite, so no odd cycle exists."""


class ChromaticTooLow(AcychromError):
    """The host graph is at most 3-chromatic."""
