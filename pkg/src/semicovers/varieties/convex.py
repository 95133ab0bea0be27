"""
Convex-body semigroups B(F): the lattice points of the dilates iF, i = 0, 1, 2, ...,
for a rational polytope F given by its vertices.

Scale intervals are computed on the cone over F x {1}: x lies in tF exactly
when (x, t) lies in that cone, so every facet gives a linear bound on t.
"""
import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Any, Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy import Matrix

from semicovers.core.cone import half_spaces
from semicovers.core.points import box_points, scale
from semicovers.errors import DimensionMismatchError, PreconditionError

logger = logging.getLogger("semicovers.varieties.convex")


def _fraction(value: Any) -> Fraction:
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"{value!r} is not a rational number") from exc


class RationalPolytope(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    vertices: tuple[tuple[Fraction, ...], ...] = Field(
        description='Vertices with rational coordinates, as ints or strings such as "3/2".',
        examples=[[[1, 1], [2, 1]]],
    )

    @field_validator("vertices", mode="before")
    @classmethod
    def _parse(cls, vertices: Any) -> tuple[tuple[Fraction, ...], ...]:
        parsed = tuple(tuple(_fraction(c) for c in v) for v in vertices)
        if not parsed:
            raise ValueError("a polytope needs at least one vertex")
        dim = len(parsed[0])
        for v in parsed:
            if len(v) != dim:
                raise ValueError(f"vertex {v} is not in dimension {dim}")
            if any(c < 0 for c in v):
                raise ValueError("vertices must lie in the non-negative orthant")
        return parsed

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    def lifted_rays(self) -> list[tuple[int, ...]]:
        """Integer generators (L v, L) of the cone over F x {1}."""
        rays = []
        for v in self.vertices:
            denom = math.lcm(*(c.denominator for c in v))
            rays.append(tuple(int(c * denom) for c in v) + (denom,))
        return rays

    def is_full_dimensional(self) -> bool:
        return Matrix(self.lifted_rays()).rank() == self.dim + 1

    def divided(self, d: int) -> "RationalPolytope":
        return RationalPolytope(vertices=tuple(tuple(c / d for c in v) for v in self.vertices))

    def canonical(self) -> dict:
        return {"vertices": [[str(c) for c in v] for v in self.vertices]}


@lru_cache(maxsize=64)
def _facets(polytope: RationalPolytope) -> tuple[list, list]:
    return half_spaces(polytope.lifted_rays())


class ScaleInterval(BaseModel):
    """Closed interval of scales t >= 0 with x in tF; ``upper`` None means unbounded."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    empty: bool = False
    lower: Fraction = Fraction(0)
    upper: Fraction | None = None

    def contains_integer(self, minimum: int = 0) -> bool:
        if self.empty:
            return False
        first = max(math.ceil(self.lower), minimum)
        return self.upper is None or first <= self.upper

    def contains(self, t: Fraction) -> bool:
        return not self.empty and self.lower <= t and (self.upper is None or t <= self.upper)


def convex_scale_interval(polytope: RationalPolytope, x: Sequence[int]) -> ScaleInterval:
    if len(x) != polytope.dim:
        raise DimensionMismatchError(f"Point {tuple(x)} is not in dimension {polytope.dim}")
    equalities, normals = _facets(polytope)
    lower, upper = Fraction(0), None

    def tighten(a: Sequence[int], exact: bool) -> bool:
        nonlocal lower, upper
        ax = sum(c * v for c, v in zip(a[:-1], x))
        at = a[-1]
        if at == 0:
            return ax == 0 if exact else ax >= 0
        bound = Fraction(-ax, at)
        if exact or at > 0:
            lower = max(lower, bound)
        if exact or at < 0:
            upper = bound if upper is None else min(upper, bound)
        return True

    for e in equalities:
        if not tighten(e, exact=True):
            return ScaleInterval(empty=True)
    for n in normals:
        if not tighten(n, exact=False):
            return ScaleInterval(empty=True)
    if upper is not None and upper < lower:
        return ScaleInterval(empty=True)
    return ScaleInterval(lower=lower, upper=upper)


def convex_member(polytope: RationalPolytope, x: Sequence[int]) -> bool:
    """x lies in iF for some non-negative integer i."""
    if not any(x):
        return True
    return convex_scale_interval(polytope, x).contains_integer(minimum=1)


class QuotientMismatch(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: tuple[int, ...]
    in_quotient: bool = Field(description="d x in B(F).")
    in_divided: bool = Field(description="x in B(F/d).")


def convex_quotient_equal(polytope: RationalPolytope, d: int, window: Sequence[int]) -> QuotientMismatch | None:
    """
    Compare B(F)/d with B(F/d) on box(0, window).

    Raises:
        PreconditionError: if F has empty interior or d < 1
    """
    if d < 1:
        raise PreconditionError(f"The divisor must be a positive integer, got {d}", d=d)
    if not polytope.is_full_dimensional():
        raise PreconditionError("Quotient comparison needs a full-dimensional polytope")
    divided = polytope.divided(d)
    for x in box_points(window):
        lhs = convex_member(polytope, scale(d, x))
        rhs = convex_member(divided, x)
        if lhs != rhs:
            return QuotientMismatch(x=x, in_quotient=lhs, in_divided=rhs)
    return None


__all__ = [
    "RationalPolytope",
    "ScaleInterval",
    "QuotientMismatch",
    "convex_scale_interval",
    "convex_member",
    "convex_quotient_equal",
]
