"""Exception hierarchy shared by all modules."""


class HypregError(Exception):
    """Base class for every error raised by this package."""


class UndefinedTermError(HypregError, ValueError):
    """A lower Pochhammer factor vanishes before the series terminates."""


class TerminatingSeriesError(HypregError):
    """Raised by the endpoint classifier for polynomial (terminating) series.

    The series is a finite sum, so it trivially converges; ``verdict`` carries
    that answer for callers who want it anyway.
    """

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class InterpolationMismatch(HypregError):
    """Verification points disagree with an interpolated polynomial."""


class GeneratingFunctionError(HypregError, ValueError):
    """F(z + 1) - F(z) != f(z) at some probe point."""


class OverlappingIntervalsError(HypregError, ValueError):
    pass


class SymmetryError(HypregError, ValueError):
    """A sequence fails the reflection symmetry required by the summation formula."""

    def __init__(self, message, x=None):
        super().__init__(message)
        self.x = x


class NoStableLimitError(HypregError, ArithmeticError):
    """A numerical oracle did not settle within tolerance or budget."""

    def __init__(self, message, method=None, last_value=None, last_estimate=None):
        super().__init__(message)
        self.method = method
        self.last_value = last_value
        self.last_estimate = last_estimate


class SingularSystemError(HypregError, ArithmeticError):
    pass
