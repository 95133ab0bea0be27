import pytest

from semicovers.errors import (
    CoordinateOverflowError,
    CoverConstructionError,
    DimensionMismatchError,
    GapOutsideConeError,
    GuardCeilingError,
    PostconditionError,
    PreconditionError,
    SchemaError,
    SemicoversError,
)


class TestExitCodes:
    """Each family maps to its CLI exit code."""

    @pytest.mark.parametrize(
        "error, code",
        [
            (SchemaError, 2),
            (DimensionMismatchError, 2),
            (PreconditionError, 3),
            (GapOutsideConeError, 3),
            (PostconditionError, 3),
            (CoverConstructionError, 3),
            (CoordinateOverflowError, 4),
            (GuardCeilingError, 5),
        ],
    )
    def test_exit_code(self, error, code):
        assert error("boom").exit_code == code
        assert issubclass(error, SemicoversError)


class TestPayload:
    """to_payload is the machine-readable error body."""

    def test_without_details(self):
        assert SchemaError("bad").to_payload() == {
            "error": "SchemaError",
            "error_code": "schema_violation",
            "message": "bad",
        }

    def test_with_details(self):
        payload = GapOutsideConeError("outside", gap=[1, -1]).to_payload()
        assert payload["error_code"] == "gap_outside_cone"
        assert payload["details"] == {"gap": [1, -1]}

    def test_str(self):
        assert str(GuardCeilingError("too deep")) == "too deep"

    def test_cover_construction(self):
        payload = CoverConstructionError("not closed").to_payload()
        assert payload["error_code"] == "cover_construction_failed"
        assert issubclass(CoverConstructionError, PostconditionError)
