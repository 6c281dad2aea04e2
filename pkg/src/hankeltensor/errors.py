"""Exception hierarchy.

Mathematical rejections (wrong shapes, indefinite input) derive from
:class:`StructureError`; floating-point failures derive from
:class:`NumericalError`. The CLI maps the first family to exit code 2 and
the second to exit code 3.
"""


class HankelError(Exception):
    pass


class StructureError(HankelError, ValueError):
    """Input violates a structural precondition."""


class DimensionError(StructureError):
    """Vector or generator length does not match the declared sizes."""


class NotPSDError(StructureError):
    """A matrix that must be positive semidefinite has a negative eigenvalue.

    ``eigenvalue`` carries the offending (most negative) eigenvalue.
    """

    def __init__(self, message, eigenvalue):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class NotStrongError(NotPSDError):
    """The associated Hankel matrix of a tensor is not PSD."""

    def __init__(self, eigenvalue):
        super().__init__(
            f"not a strong Hankel tensor: associated Hankel matrix has "
            f"eigenvalue {eigenvalue:.6g}", eigenvalue)


class NumericalError(HankelError, ArithmeticError):
    """A numerical procedure failed its own accuracy check."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ConvergenceError(NumericalError):
    pass
