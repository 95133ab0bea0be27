"""
Finitely generated rational cones inside N^p.

A Cone keeps its primitive extremal-ray generators. On construction it derives
an exact half-space description (equalities for the linear span and facet
normals inside it) with sympy's rational nullspace, so that membership is a
handful of integer dot products.
"""
import itertools
import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator
from sympy import Matrix, Rational

from semicovers.core.orders import TotalOrderSpec
from semicovers.core.points import Point, box_points, degree, leq, points_up_to_degree, subtract
from semicovers.errors import DimensionMismatchError, GuardCeilingError, SchemaError

logger = logging.getLogger("semicovers.core.cone")


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = math.gcd(*v)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def integral_vector(vec: Iterable) -> tuple[int, ...]:
    """Smallest integer vector proportional to a rational one."""
    entries = [Rational(v) for v in vec]
    scale = math.lcm(*(e.q for e in entries))
    return primitive([int(e * scale) for e in entries])


def half_spaces(rays: Sequence[Sequence[int]]) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """
    Exact H-description of the cone spanned by ``rays``.

    Returns:
        (equalities, normals): x lies in the cone iff e.x == 0 for every
        equality and n.x >= 0 for every normal.
    """
    m = Matrix([list(r) for r in rays])
    rank = m.rank()
    equalities = [integral_vector(v) for v in m.nullspace()]
    if rank == 0:
        return equalities, []
    if rank == 1:
        return equalities, [primitive(rays[0])]

    normals: set[tuple[int, ...]] = set()
    for subset in itertools.combinations(range(len(rays)), rank - 1):
        sub = Matrix([list(rays[i]) for i in subset])
        if sub.rank() != rank - 1:
            continue
        # any nullspace vector off the span's orthogonal complement is a candidate normal
        for w in sub.nullspace():
            w = integral_vector(w)
            values = [_dot(w, r) for r in rays]
            if not any(values):
                continue
            if all(v >= 0 for v in values):
                normals.add(w)
            elif all(v <= 0 for v in values):
                normals.add(tuple(-x for x in w))
            break
    return equalities, sorted(normals)


def _spans(rays: Sequence[Sequence[int]], x: Sequence[int]) -> bool:
    """x lies in the cone spanned by ``rays`` (False for an empty list)."""
    if not rays:
        return False
    equalities, normals = half_spaces(rays)
    return all(_dot(e, x) == 0 for e in equalities) and all(_dot(n, x) >= 0 for n in normals)


class Cone(BaseModel):
    """Rational cone given by its primitive extremal rays; stands for its lattice points."""

    model_config = ConfigDict(frozen=True)

    rays: tuple[tuple[int, ...], ...] = Field(
        description="Primitive, pairwise non-proportional extremal-ray generators.",
        examples=[[[4, 1], [9, 5]]],
    )

    _equalities: list[tuple[int, ...]] = PrivateAttr(default_factory=list)
    _normals: list[tuple[int, ...]] = PrivateAttr(default_factory=list)

    @field_validator("rays")
    @classmethod
    def _check_rays(cls, rays: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        if not rays:
            raise ValueError("a cone needs at least one ray")
        dim = len(rays[0])
        seen: set[tuple[int, ...]] = set()
        for r in rays:
            if len(r) != dim:
                raise ValueError(f"ray {list(r)} is not in dimension {dim}")
            if any(x < 0 for x in r) or not any(r):
                raise ValueError(f"ray {list(r)} must be nonzero with non-negative coordinates")
            if math.gcd(*r) != 1:
                raise ValueError(f"ray {list(r)} is not primitive")
            if r in seen:
                raise ValueError(f"ray {list(r)} is repeated")
            seen.add(r)
        return tuple(sorted(rays))

    def model_post_init(self, __context) -> None:
        equalities, normals = half_spaces(self.rays)
        self._equalities = equalities
        self._normals = normals
        if len(self.rays) > 2:
            for i, r in enumerate(self.rays):
                if _spans(self.rays[:i] + self.rays[i + 1:], r):
                    raise SchemaError(f"Ray {list(r)} is not extremal", ray=list(r))

    @classmethod
    def from_generators(cls, generators: Iterable[Sequence[int]]) -> "Cone":
        """Minimal cone containing the given points: keeps only extremal directions."""
        directions = sorted({primitive(g) for g in generators if any(g)})
        if not directions:
            raise SchemaError("Cannot build a cone from zero vectors only")
        extremal = [g for i, g in enumerate(directions) if not _spans(directions[:i] + directions[i + 1:], g)]
        logger.debug(f"Cone from {len(directions)} directions has {len(extremal)} extremal rays")
        return cls(rays=tuple(extremal))

    @classmethod
    def orthant(cls, dim: int) -> "Cone":
        return cls(rays=tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.rays[0])

    @property
    def is_simplicial(self) -> bool:
        return len(self.rays) == self.dim

    @property
    def normals(self) -> list[tuple[int, ...]]:
        return list(self._normals)

    def contains(self, x: Sequence[int]) -> bool:
        if len(x) != self.dim:
            raise DimensionMismatchError(f"Point {tuple(x)} is not in dimension {self.dim}")
        if any(v < 0 for v in x):
            return False
        return all(_dot(e, x) == 0 for e in self._equalities) and all(_dot(n, x) >= 0 for n in self._normals)

    def hilbert_basis(self) -> list[Point]:
        """Minimal generators of the monoid of lattice points of the cone."""
        upper = tuple(sum(col) for col in zip(*self.rays))
        points = [p for p in box_points(upper) if any(p) and self.contains(p)]
        points.sort(key=lambda p: (degree(p), p))
        basis: list[Point] = []
        for x in points:
            reducible = False
            for y in points:
                if degree(y) >= degree(x):
                    break
                if leq(y, x):
                    rest = subtract(x, y)
                    if rest is not None and self.contains(rest):
                        reducible = True
                        break
            if not reducible:
                basis.append(x)
        logger.debug(f"Hilbert basis of cone {self.rays}: {len(basis)} elements from {len(points)} candidates")
        return basis

    def degree_ceiling(self, order: TotalOrderSpec, bound: Sequence[int]) -> int:
        """Degree above which no point of the cone is below ``bound`` under ``order``."""
        if order.is_graded:
            return degree(bound)
        lead = order.leading_index(self.dim)
        if any(r[lead] == 0 for r in self.rays):
            raise GuardCeilingError(
                f"Region below {tuple(bound)} is infinite under {order.kind.value}: "
                f"a ray has zero coordinate {lead}"
            )
        ceiling = Fraction(bound[lead] * max(degree(r) for r in self.rays), min(r[lead] for r in self.rays))
        return math.floor(ceiling)

    def points_up_to_degree(self, max_degree: int) -> list[Point]:
        return _cone_points(self, max_degree)

    def region_below(self, order: TotalOrderSpec, bound: Sequence[int], strict: bool = False) -> list[Point]:
        """Lattice points x of the cone with x below ``bound`` (x < bound when strict), ascending."""
        return list(_region(self, order, tuple(bound), strict))

    def canonical(self) -> dict:
        return {"rays": [list(r) for r in self.rays]}


@lru_cache(maxsize=256)
def _cone_points(cone: Cone, max_degree: int) -> list[Point]:
    return [p for p in points_up_to_degree(cone.dim, max_degree) if cone.contains(p)]


@lru_cache(maxsize=1024)
def _region(cone: Cone, order: TotalOrderSpec, bound: Point, strict: bool) -> tuple[Point, ...]:
    ceiling = cone.degree_ceiling(order, bound)
    kb = order.key(bound)
    if strict:
        pts = [p for p in _cone_points(cone, ceiling) if order.key(p) < kb]
    else:
        pts = [p for p in _cone_points(cone, ceiling) if order.key(p) <= kb]
    return tuple(sorted(pts, key=order.key))


def cone_contains(c: Cone, x: Sequence[int]) -> bool:
    return c.contains(x)


def cone_hilbert_basis(c: Cone) -> list[Point]:
    return c.hilbert_basis()


__all__ = [
    "Cone",
    "primitive",
    "integral_vector",
    "half_spaces",
    "cone_contains",
    "cone_hilbert_basis",
]
