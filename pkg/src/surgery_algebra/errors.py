"""Exception hierarchy shared by the whole package.

Two broad failure kinds matter to callers: the input made sense but the
requested operation is impossible or meaningless for it (``DomainError``,
CLI exit code 1), and the input did not parse or had the wrong shape
(``SchemaError``, CLI exit code 2).
"""


class SurgeryAlgebraError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SurgeryAlgebraError):
    """Valid-looking input for which the operation is not defined."""


class SchemaError(SurgeryAlgebraError):
    """Malformed input: bad JSON, wrong shapes, unknown ring tags."""


class SingularMatrixError(DomainError):
    """A matrix that had to be invertible is not."""


class WrongRingError(DomainError):
    """Operands built over different rings, or a ring the operation cannot handle."""


class PreconditionError(DomainError):
    """A documented precondition failed; the message names the identity."""
