"""
Custom exceptions for hopfkit.

Axiom failures found by a ``verify_*`` function are reported, not raised.
The exceptions below signal malformed input, impossible linear algebra, or a
construction whose precondition or certificate failed.
"""

from typing import TYPE_CHECKING, Optional, Tuple

if TYPE_CHECKING:
    from .report import Report


class HopfkitError(Exception):
    """Base exception for hopfkit errors."""

    pass


class ShapeMismatchError(HopfkitError):
    """Raised when tensor or map shapes do not fit together."""

    pass


class FieldMismatchError(HopfkitError):
    """Raised when scalars or tensors from different fields are combined."""

    pass


class SingularMapError(HopfkitError):
    """Raised when a map that must be invertible is not."""

    pass


class NotIdempotentError(HopfkitError):
    """Raised by split_idempotent when e∘e ≠ e."""

    def __init__(self, message: str, witness: Tuple[int, ...]):
        super().__init__(message)
        self.witness = witness


class ReportError(HopfkitError):
    """Base for errors that carry the report explaining them."""

    def __init__(self, message: str, report: Optional["Report"] = None):
        super().__init__(message)
        self.report = report


class PreconditionError(ReportError):
    """Raised when an input to a construction fails its verification."""

    pass


class CertificationError(ReportError):
    """Raised when a constructed object fails one of its certificates."""

    pass


class WellDefinednessError(ReportError):
    """Raised when a map does not descend to a quotient space."""

    pass


class UnknownExampleError(HopfkitError):
    """Raised when a catalog name is not known."""

    pass


class ExampleParameterError(HopfkitError):
    """Raised when catalog parameters are invalid."""

    pass


class AlgebraFileError(HopfkitError):
    """Raised when an algebra file cannot be parsed."""

    pass


class DimensionLimitError(HopfkitError):
    """Raised when a carrier exceeds HOPFKIT_MAX_DIM."""

    pass


class ContextMismatchError(HopfkitError):
    """Raised when an object does not belong to the braided context it is used in."""

    pass
