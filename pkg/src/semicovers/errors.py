"""
Exception hierarchy for semicovers.

Every error carries:
- an ``error_code`` used in the machine-readable CLI payload
- an ``exit_code`` returned by the CLI (2 schema, 3 precondition, 4 overflow, 5 guard)

Library code only raises; the CLI is the single place where errors are turned
into JSON payloads and exit codes.
"""
from typing import Any


class SemicoversError(Exception):
    """Base class for every error raised by the library."""

    error_code: str = "internal_error"
    exit_code: int = 1

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_payload(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "error": type(self).__name__,
            "error_code": self.error_code,
            "message": self.message,
        }
        if self.details:
            payload["details"] = self.details
        return payload


class SchemaError(SemicoversError):
    """Input document or command-line flag does not match the expected schema."""

    error_code = "schema_violation"
    exit_code = 2


class DimensionMismatchError(SchemaError):
    """Two points (or a point and a cone) live in different ambient dimensions."""

    error_code = "dimension_mismatch"


class PreconditionError(SemicoversError):
    """An operation was called outside its domain."""

    error_code = "precondition_failed"
    exit_code = 3


class GapOutsideConeError(PreconditionError):
    error_code = "gap_outside_cone"


class InadmissibleSetError(PreconditionError):
    error_code = "inadmissible_lambda"


class NotIrreducibleError(PreconditionError):
    error_code = "not_irreducible"


class PostconditionError(PreconditionError):
    """A constructor produced an object that failed its own verification."""

    error_code = "postcondition_failed"


class CoverConstructionError(PostconditionError):
    """An explicit symmetric or pseudo-symmetric cover failed one of its checks."""

    error_code = "cover_construction_failed"


class CoordinateOverflowError(SemicoversError):
    error_code = "coordinate_overflow"
    exit_code = 4


class GuardCeilingError(SemicoversError):
    """A size or termination guard fired before the computation finished."""

    error_code = "guard_ceiling"
    exit_code = 5


__all__ = [
    "SemicoversError",
    "SchemaError",
    "DimensionMismatchError",
    "PreconditionError",
    "GapOutsideConeError",
    "InadmissibleSetError",
    "NotIrreducibleError",
    "PostconditionError",
    "CoverConstructionError",
    "CoordinateOverflowError",
    "GuardCeilingError",
]
