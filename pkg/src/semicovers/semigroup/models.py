"""
The two semigroup representations.

CSemigroup is the canonical one: a cone together with its finite set of gaps.
GeneratedSemigroup keeps a generator list and answers membership through a
memoised decomposition search.
"""
import logging
from functools import lru_cache
from typing import Any, Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator

from semicovers.core.cone import Cone
from semicovers.core.orders import TotalOrderSpec
from semicovers.core.points import Point
from semicovers.errors import DimensionMismatchError, GapOutsideConeError
from semicovers.hilbert import MonoidMembership, graded_key

logger = logging.getLogger("semicovers.semigroup.models")


class CSemigroup(BaseModel):
    """Cone minus a finite set of gaps."""

    model_config = ConfigDict(frozen=True)

    cone: Cone = Field(description="Minimal integer cone containing the semigroup.")
    gaps: frozenset[tuple[int, ...]] = Field(
        default_factory=frozenset,
        description="Finite set of cone points missing from the semigroup.",
        examples=[[[2, 1], [3, 1]]],
    )
    order: TotalOrderSpec = Field(default_factory=TotalOrderSpec, description="Active total order.")

    def model_post_init(self, __context: Any) -> None:
        for h in self.gaps:
            if len(h) != self.cone.dim:
                raise DimensionMismatchError(f"Gap {h} is not in dimension {self.cone.dim}", gap=list(h))
            if not self.cone.contains(h):
                raise GapOutsideConeError(f"Gap {h} lies outside the cone", gap=list(h))

    @property
    def dim(self) -> int:
        return self.cone.dim

    def __contains__(self, x: Sequence[int]) -> bool:
        x = tuple(x)
        return self.cone.contains(x) and x not in self.gaps

    def sorted_gaps(self) -> list[Point]:
        return self.order.sort(self.gaps)

    def with_gaps(self, gaps) -> "CSemigroup":
        return CSemigroup(cone=self.cone, gaps=frozenset(gaps), order=self.order)

    def canonical_key(self) -> tuple:
        return (self.cone.rays, tuple(self.sorted_gaps()), self.order.kind.value, self.order.perm)

    def canonical(self) -> dict:
        return {
            "cone": self.cone.canonical(),
            "gaps": [list(h) for h in self.sorted_gaps()],
            "order": {"kind": self.order.kind.value, "perm": list(self.order.perm)},
        }


@lru_cache(maxsize=128)
def _membership(generators: tuple[Point, ...]) -> MonoidMembership:
    return MonoidMembership(generators)


class GeneratedSemigroup(BaseModel):
    """Affine semigroup given by a finite generator list."""

    model_config = ConfigDict(frozen=True)

    generators: tuple[tuple[int, ...], ...] = Field(
        description="Non-zero generators, deduplicated and sorted by degree.",
        examples=[[[4, 1], [5, 2], [7, 2], [9, 5], [4, 2], [6, 2], [6, 3], [7, 3], [11, 6]]],
    )
    order: TotalOrderSpec = Field(default_factory=TotalOrderSpec, description="Active total order.")

    @field_validator("generators")
    @classmethod
    def _nonzero_deduplicated(cls, gens: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        if not gens:
            raise ValueError("at least one generator is required")
        dim = len(gens[0])
        for g in gens:
            if len(g) != dim:
                raise ValueError(f"generator {list(g)} is not in dimension {dim}")
            if any(x < 0 for x in g) or not any(g):
                raise ValueError(f"generator {list(g)} must be non-zero with non-negative coordinates")
        return tuple(sorted(set(gens), key=graded_key))

    @property
    def dim(self) -> int:
        return len(self.generators[0])

    def __contains__(self, x: Sequence[int]) -> bool:
        return tuple(x) in _membership(self.generators)


class Violation(BaseModel):
    """Witness that a gap is a sum of two semigroup elements."""

    model_config = ConfigDict(frozen=True)

    gap: tuple[int, ...] = Field(description="Gap h written as a sum of members.")
    summand: tuple[int, ...] = Field(description="Non-zero member u with u <= h.")
    complement: tuple[int, ...] = Field(description="The member h - u.")


__all__ = [
    "CSemigroup",
    "GeneratedSemigroup",
    "Violation",
]
