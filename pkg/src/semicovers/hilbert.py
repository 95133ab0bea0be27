"""
Hilbert bases of homogeneous linear Diophantine systems and minimal
generating sets of finitely generated submonoids of N^p.
"""
import logging
from typing import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator

from semicovers.config import get_settings
from semicovers.core.points import Point, degree, leq, subtract
from semicovers.errors import DimensionMismatchError, GuardCeilingError, SchemaError

logger = logging.getLogger("semicovers.hilbert")


def graded_key(v: Sequence[int]) -> tuple[int, ...]:
    return (sum(v),) + tuple(v)


class DiophantineSystem(BaseModel):
    """Homogeneous system A.x = 0 over N^n."""

    model_config = ConfigDict(frozen=True)

    matrix: tuple[tuple[int, ...], ...] = Field(
        description="Integer coefficient matrix, one tuple per equation.",
        examples=[[[2, 3, -2]]],
    )

    @field_validator("matrix")
    @classmethod
    def _rectangular(cls, matrix: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        if not matrix or not matrix[0]:
            raise ValueError("a system needs at least one row and one column")
        width = len(matrix[0])
        if any(len(row) != width for row in matrix):
            raise ValueError("all rows must have the same number of columns")
        return matrix

    @property
    def rows(self) -> int:
        return len(self.matrix)

    @property
    def cols(self) -> int:
        return len(self.matrix[0])

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.matrix)

    def residual(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise DimensionMismatchError(f"Vector of length {len(v)} does not fit a system with {self.cols} columns")
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.matrix)

    def solves(self, v: Sequence[int]) -> bool:
        return not any(self.residual(v))


class HilbertBasis(BaseModel):
    model_config = ConfigDict(frozen=True)

    solutions: tuple[tuple[int, ...], ...] = Field(
        description="Minimal non-zero solutions, sorted by degree then lexicographically.",
        examples=[[[1, 0, 1], [0, 2, 3]]],
    )


def hilbert_basis(system: DiophantineSystem) -> HilbertBasis:
    """
    Minimal non-negative solutions of a homogeneous system.

    Completion procedure: grow candidate vectors one unit step at a time,
    only in directions whose column points against the current residual,
    and drop every candidate that dominates an accepted solution.

    Raises:
        GuardCeilingError: if the search runs past the configured degree ceiling
    """
    n = system.cols
    columns = [system.column(j) for j in range(n)]
    ceiling = get_settings().degree_ceiling

    basis: list[Point] = []
    frontier: dict[Point, tuple[int, ...]] = {}
    for j in range(n):
        unit = tuple(1 if i == j else 0 for i in range(n))
        frontier[unit] = columns[j]

    level = 1
    while frontier:
        if level > ceiling:
            raise GuardCeilingError(
                f"Hilbert basis search passed degree {ceiling} with {len(frontier)} open candidates",
                ceiling=ceiling,
            )
        logger.debug(f"Level {level}: {len(frontier)} candidates, {len(basis)} solutions so far")
        found = []
        nxt: dict[Point, tuple[int, ...]] = {}
        for v in sorted(frontier):
            r = frontier[v]
            if any(leq(b, v) for b in basis):
                continue
            if not any(r):
                found.append(v)
                continue
            for j, col in enumerate(columns):
                if sum(a * b for a, b in zip(r, col)) < 0:
                    w = v[:j] + (v[j] + 1,) + v[j + 1:]
                    if w not in nxt:
                        nxt[w] = tuple(a + b for a, b in zip(r, col))
        basis.extend(found)
        frontier = {w: r for w, r in nxt.items() if not any(leq(b, w) for b in found)}
        level += 1

    basis.sort(key=graded_key)
    logger.debug(f"Hilbert basis of a {system.rows}x{n} system has {len(basis)} elements")
    return HilbertBasis(solutions=tuple(basis))


class MonoidMembership:
    """
    Membership in the monoid generated by a finite set of non-zero points.

    x is a member iff x is 0 or x - g is a member for some generator g <= x.
    Answers are memoised, so repeated queries share work.
    """

    def __init__(self, generators: Iterable[Sequence[int]]):
        self.generators: list[Point] = sorted({tuple(g) for g in generators}, key=graded_key)
        for g in self.generators:
            if not any(g):
                raise SchemaError("Generators must be non-zero")
        if self.generators and len({len(g) for g in self.generators}) != 1:
            raise DimensionMismatchError("Generators live in different dimensions")
        self._cache: dict[Point, bool] = {}

    def __contains__(self, x: Sequence[int]) -> bool:
        x = tuple(x)
        if self.generators and len(x) != len(self.generators[0]):
            raise DimensionMismatchError(f"Point {x} is not in dimension {len(self.generators[0])}")
        if x in self._cache:
            return self._cache[x]

        stack = [x]
        while stack:
            y = stack[-1]
            if y in self._cache:
                stack.pop()
                continue
            if not any(y):
                self._cache[y] = True
                stack.pop()
                continue
            children = [z for g in self.generators if (z := subtract(y, g)) is not None]
            if any(self._cache.get(z) for z in children):
                self._cache[y] = True
                stack.pop()
                continue
            unknown = [z for z in children if z not in self._cache]
            if unknown:
                stack.extend(unknown)
                continue
            self._cache[y] = False
            stack.pop()
        return self._cache[x]


def reduce_generating_set(generators: Iterable[Sequence[int]]) -> list[Point]:
    """
    Minimal generating set of the monoid spanned by ``generators``.

    An element is dropped iff it is a sum of the others. Elements are
    considered by increasing degree, so the kept prefix always generates
    everything seen so far.
    """
    gens = sorted({tuple(g) for g in generators}, key=graded_key)
    if any(not any(g) for g in gens):
        raise SchemaError("Cannot reduce a generating set containing the zero vector")
    if gens and len({len(g) for g in gens}) != 1:
        raise DimensionMismatchError("Generators live in different dimensions")

    kept: list[Point] = []
    for g in gens:
        # only strictly smaller degrees can add up to g
        smaller = [k for k in kept if degree(k) < degree(g)]
        if g not in MonoidMembership(smaller):
            kept.append(g)
    logger.debug(f"Reduced {len(gens)} generators to {len(kept)}")
    return kept


__all__ = [
    "DiophantineSystem",
    "HilbertBasis",
    "MonoidMembership",
    "hilbert_basis",
    "reduce_generating_set",
    "graded_key",
]
