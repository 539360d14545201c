"""Exception hierarchy shared by all modules.

``DomainError`` covers violated preconditions and unrealizable requests;
``ConsistencyError`` flags an internal cross-check failure that would
contradict an expected structural fact (those are never caught silently).
"""


class DomainError(ValueError):
    """A request that is well-formed but mathematically out of domain."""


class ShapeError(DomainError):
    """Column heights that do not describe a staircase."""


class RegimeError(DomainError):
    """Weight or weight-vector outside the sign regime an operation requires."""


class GenericityError(DomainError):
    """A weight vector orthogonal to a tangent character.

    Carries the offending couple so callers can report the witness.
    """

    def __init__(self, message, couple=None):
        super().__init__(message)
        self.couple = couple


class NotZeroDimensionalError(DomainError):
    """Leading ideal with infinitely many standard monomials."""


class UnrealizableError(DomainError):
    """No staircase realizes the requested Hilbert function."""


class BoundExceededError(DomainError):
    """Input larger than the configured brute-force bound."""


class StepLimitExceeded(DomainError):
    """Resource guard tripped; the computation was aborted, never truncated."""


class NonPolynomialError(DomainError):
    """A chart polynomial acquired a negative exponent."""


class ConsistencyError(RuntimeError):
    """An internal certificate failed; the message carries the witness."""
