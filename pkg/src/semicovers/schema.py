"""
JSON documents read and written by the command-line tool.

Every loader raises SchemaError on malformed input so that the CLI can map
it to its schema exit code; canonical output is compact, key-sorted JSON.
"""
import json
import logging
import sys
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, ValidationError, model_validator

from semicovers.config import get_settings
from semicovers.core.cone import Cone
from semicovers.core.orders import OrderKind, TotalOrderSpec, order_from_name
from semicovers.errors import SchemaError
from semicovers.hilbert import DiophantineSystem
from semicovers.semigroup.models import CSemigroup, GeneratedSemigroup
from semicovers.semigroup.operations import gaps_from_generators
from semicovers.varieties.convex import RationalPolytope
from semicovers.varieties.modular import ModularSystem

logger = logging.getLogger("semicovers.schema")


class OrderDocument(BaseModel):
    kind: OrderKind = Field(description="Order family.", examples=["graded-then-revcoordlex"])
    perm: list[int] = Field(default_factory=list, description="Coordinate permutation; empty for identity.")


class ConeDocument(BaseModel):
    rays: list[list[int]] = Field(description="Extremal-ray generators.", examples=[[[4, 1], [9, 5]]])


class SemigroupDocument(BaseModel):
    """Either a cone with its gaps, or a generator list."""

    cone: ConeDocument | None = Field(default=None, description="Cone of the semigroup.")
    gaps: list[list[int]] = Field(default_factory=list, description="Gaps, any order.", examples=[[[2, 1], [3, 1]]])
    generators: list[list[int]] | None = Field(
        default=None,
        description="Generators, converted to cone-and-gaps form on load.",
        examples=[[[4, 1], [5, 2], [7, 2], [9, 5], [4, 2], [6, 2], [6, 3], [7, 3], [11, 6]]],
    )
    order: OrderDocument | None = Field(default=None, description="Active order; the configured default if omitted.")

    @model_validator(mode="after")
    def _one_representation(self) -> "SemigroupDocument":
        if (self.cone is None) == (self.generators is None):
            raise ValueError('give exactly one of "cone" or "generators"')
        if self.generators is not None and self.gaps:
            raise ValueError('"gaps" only makes sense together with "cone"')
        return self


def dumps(payload: Any) -> str:
    """Canonical JSON text: sorted keys, no insignificant whitespace."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def read_json(path: str | Path) -> Any:
    """Parse a JSON file; "-" reads standard input."""
    try:
        text = sys.stdin.read() if str(path) == "-" else Path(path).read_text()
        return json.loads(text)
    except OSError as exc:
        raise SchemaError(f"Cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc


def _validate(model: type[BaseModel], doc: Any, what: str) -> Any:
    try:
        return model.model_validate(doc)
    except ValidationError as exc:
        raise SchemaError(f"Invalid {what} document: {exc.errors(include_url=False)}") from exc


def parse_order(doc: dict | None) -> TotalOrderSpec:
    if doc is None:
        return order_from_name(get_settings().default_order)
    order = _validate(OrderDocument, doc, "order")
    return _validate(TotalOrderSpec, {"kind": order.kind, "perm": order.perm}, "order")


def parse_cone(doc: Any) -> Cone:
    cone = _validate(ConeDocument, doc, "cone")
    return _validate(Cone, {"rays": cone.rays}, "cone")


def parse_generated(doc: Any, order: TotalOrderSpec | None = None) -> GeneratedSemigroup:
    parsed = _validate(SemigroupDocument, doc, "semigroup")
    if parsed.generators is None:
        raise SchemaError("Expected a generator document")
    order = order or parse_order(parsed.order.model_dump() if parsed.order else None)
    return _validate(GeneratedSemigroup, {"generators": parsed.generators, "order": order}, "semigroup")


def parse_semigroup(doc: Any, order: TotalOrderSpec | None = None) -> CSemigroup:
    """Load either representation into a CSemigroup."""
    parsed = _validate(SemigroupDocument, doc, "semigroup")
    order = order or parse_order(parsed.order.model_dump() if parsed.order else None)
    if parsed.generators is not None:
        g = _validate(GeneratedSemigroup, {"generators": parsed.generators, "order": order}, "semigroup")
        return gaps_from_generators(g)
    cone = parse_cone(parsed.cone.model_dump())
    if any(len(h) != cone.dim for h in parsed.gaps):
        raise SchemaError(f"Gaps must have dimension {cone.dim}")
    return CSemigroup(cone=cone, gaps=frozenset(tuple(h) for h in parsed.gaps), order=order)


def parse_system(doc: Any) -> DiophantineSystem:
    if isinstance(doc, dict):
        doc = doc.get("matrix", doc)
    return _validate(DiophantineSystem, {"matrix": doc}, "system")


def parse_modular(doc: Any) -> ModularSystem:
    return _validate(ModularSystem, doc, "modular system")


def parse_polytope(doc: Any) -> RationalPolytope:
    return _validate(RationalPolytope, doc, "polytope")


def semigroup_document(s: CSemigroup) -> dict:
    return s.canonical()


__all__ = [
    "OrderDocument",
    "ConeDocument",
    "SemigroupDocument",
    "dumps",
    "read_json",
    "parse_order",
    "parse_cone",
    "parse_generated",
    "parse_semigroup",
    "parse_system",
    "parse_modular",
    "parse_polytope",
    "semigroup_document",
]
