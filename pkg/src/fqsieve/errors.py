"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed polynomial text.  Carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class InadmissibleError(ValueError):
    """The bivariate input does not satisfy the preconditions of the sieve."""


class InseparableError(InadmissibleError):
    """The input vanishes under d/dx but is not a perfect p-th power.

    Such inputs are refused rather than classified: deciding square-freeness
    for them would require bivariate factorization over a non-perfect field.
    """


class BudgetExceededError(RuntimeError):
    """An enumeration or residue scan would exceed the configured work budget."""


class CertificationError(ValueError):
    """The requested truncation cutoff is too small to certify the tail."""
