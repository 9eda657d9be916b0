"""Exception types raised across the package."""


class MaryPolyError(Exception):
    pass


class NotDivisible(MaryPolyError, ArithmeticError):
    """No exact integer-coefficient quotient exists."""


class NotMonic(MaryPolyError, ValueError):
    pass


class NonIntegerGcd(MaryPolyError, ArithmeticError):
    """The monic gcd over Q has a non-integral coefficient."""


class DigitOutOfRange(MaryPolyError, ValueError):
    pass


class InsufficientFactors(MaryPolyError, ValueError):
    pass


class OddBase(MaryPolyError, ValueError):
    pass


class SupportViolation(MaryPolyError, ArithmeticError):
    """A normalized polynomial has an exponent off the expected lattice."""


class NoConvergence(MaryPolyError, RuntimeError):
    """Root iteration hit its cap; ``report`` holds the partial result."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
