"""Exception types shared across the package.

``InternalInvariantViolation`` is reserved for cross-check failures between
two independent computations of the same quantity; callers treat it as a bug,
not as bad input (the command line maps it to exit code 3, everything user
induced to exit code 2).
"""


class InterlaceError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(InterlaceError):
    """Operands have incompatible or non-square shapes."""


class InvalidSelector(InterlaceError):
    """A row/column selector is out of range, unsorted, or ill-sized."""


class ZeroPolynomial(InterlaceError):
    """The zero polynomial was passed where a nonzero one is required."""


class DegreeZero(InterlaceError):
    """Constant polynomials have no root pattern to classify."""


class NotSquarefree(InterlaceError):
    """Root isolation requires a squarefree polynomial."""


class NonnegativityViolated(InterlaceError):
    """An entrywise-nonnegative matrix was required."""


class PositivityViolated(InterlaceError):
    """A strictly positive parameter or entry was required."""


class NotClassNPlus(InterlaceError):
    """Sign-pattern prediction needs a class n+ sign classification."""


class ModulusTie(InterlaceError):
    """Two eigenvalues share a modulus; a certified strict ordering is impossible."""


class PreconditionFailed(InterlaceError):
    """A documented precondition of a certification routine does not hold."""

    def __init__(self, check: str, detail: str = ""):
        self.check = check
        self.detail = detail
        super().__init__(f"{check}: {detail}" if detail else check)


class ParseError(InterlaceError):
    """Malformed matrix document, polynomial file, or numeric literal."""


class InternalInvariantViolation(InterlaceError):
    """Two independent routes disagreed; indicates a bug, not bad input."""
