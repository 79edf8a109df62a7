"""Exception types shared across the package.

Precondition violations (bad inputs, out-of-family symbols) and numeric
failures (non-convergence, runaway series) are kept in separate branches so
the CLI can map them to distinct exit codes.
"""


class HardySymmError(Exception):
    """Base class for all package errors."""


class PreconditionError(HardySymmError):
    """An input violates a documented precondition."""


class OutsideDisk(PreconditionError):
    """A point that must lie strictly inside the unit disk does not."""


class FamilyMismatch(PreconditionError):
    """Symbols fall outside the coupled family (deg psi0 <= 1, deg psi1 <= 2,
    quadratic coefficient of psi1 equal to the linear coefficient of psi0)."""


class NotPolynomial(PreconditionError):
    """A conjugated-symbol pushforward is genuinely rational: polynomial
    division left a non-negligible remainder."""


class NotHermitian(PreconditionError):
    """Symbols fail the hermitian classification required by the caller."""


class NotAZero(PreconditionError):
    """The queried point is not a zero of psi1."""


class NotSimple(PreconditionError):
    """The queried zero of psi1 is not simple."""


class ZeroPolynomial(PreconditionError):
    """The operation is undefined for the zero polynomial."""


class NumericError(HardySymmError):
    """A numeric procedure failed to produce a trustworthy result."""


class SeriesDivergence(NumericError):
    """Power-series coefficients grew beyond the overflow guard."""


class NonConvergence(NumericError):
    """The QR iteration hit its cap. ``partial`` holds the eigenvalues
    deflated before the cap."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = list(partial) if partial is not None else []
