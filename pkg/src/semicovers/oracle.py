"""
Naive reference implementations, kept deliberately simple so that the fast
paths can be cross-checked against them (tests and the CLI --verify flag).
"""
import itertools
import logging
import math
from typing import Sequence

from sympy import Matrix

from semicovers.config import get_settings
from semicovers.core.cone import integral_vector
from semicovers.core.points import Point, leq
from semicovers.covers.dd import sort_covers
from semicovers.errors import GuardCeilingError, SchemaError
from semicovers.hilbert import DiophantineSystem, graded_key
from semicovers.quotient import quotient_gaps
from semicovers.semigroup.models import CSemigroup
from semicovers.semigroup.operations import equals, validate

logger = logging.getLogger("semicovers.oracle")


def brute_member(generators: Sequence[Sequence[int]], x: Sequence[int]) -> bool:
    """Try every multiplicity vector bounded componentwise by x."""
    x = tuple(x)
    gens = [tuple(g) for g in generators]
    if any(not any(g) for g in gens):
        raise SchemaError("Generators must be non-zero")
    ranges = []
    for g in gens:
        top = min(xk // gk for xk, gk in zip(x, g) if gk > 0)
        ranges.append(range(top + 1))
    for mult in itertools.product(*ranges):
        total = tuple(sum(m * g[k] for m, g in zip(mult, gens)) for k in range(len(x)))
        if total == x:
            return True
    return False


def extreme_solutions(system: DiophantineSystem) -> list[Point]:
    """
    Extremal rays of the cone of non-negative solutions.

    These are the solutions of minimal support: a column set whose submatrix
    has a one-dimensional kernel spanned by a vector with no zero entry and a
    single sign.
    """
    n = system.cols
    rays: list[Point] = []
    for size in range(1, n + 1):
        for support in itertools.combinations(range(n), size):
            kernel = Matrix([[row[j] for j in support] for row in system.matrix]).nullspace()
            if len(kernel) != 1:
                continue
            v = integral_vector(kernel[0])
            if all(c < 0 for c in v):
                v = tuple(-c for c in v)
            if not all(c > 0 for c in v):
                continue
            ray = [0] * n
            for j, c in zip(support, v):
                ray[j] = c
            rays.append(tuple(ray))
    return sorted(rays, key=graded_key)


def hilbert_search_box(system: DiophantineSystem) -> Point:
    """
    Componentwise sum of the extremal rays of the solution cone.

    A minimal solution is either a ray or a combination of independent rays
    with every coefficient below 1, so it lies in box(0, sum of the rays).
    The ray entries are minors of the matrix.
    """
    box = [0] * system.cols
    for ray in extreme_solutions(system):
        box = [b + r for b, r in zip(box, ray)]
    return tuple(box)


def _echelon(system: DiophantineSystem) -> tuple[list[int], list[int], int, list[list[int]]]:
    """
    Pivot columns, free columns, a common denominator D and integer rows c
    with D * x[pivot i] == sum(c[i][l] * x[free l]) for every rational solution.
    """
    reduced, pivot_cols = Matrix(system.matrix).rref()
    pivots = list(pivot_cols)
    free = [j for j in range(system.cols) if j not in pivot_cols]
    denom = math.lcm(1, *(reduced[i, f].q for i in range(len(pivots)) for f in free))
    coeffs = [[int(-reduced[i, f] * denom) for f in free] for i in range(len(pivots))]
    return pivots, free, denom, coeffs


def brute_hilbert(system: DiophantineSystem, box: Sequence[int] | None = None) -> list[Point]:
    """
    Componentwise-minimal non-zero solutions inside box(0, box).

    Every solution in the box is listed by looping over the free columns of
    the reduced echelon form, each loop narrowed to the values that still
    leave every pivot coordinate reachable inside the box. Solutions that
    dominate another one are then dropped. The box defaults to
    hilbert_search_box.
    """
    box = tuple(box) if box is not None else hilbert_search_box(system)
    n = system.cols
    pivots, free, denom, coeffs = _echelon(system)
    t = len(free)
    if t == 0:
        return []

    # reach[i][l]: least and largest contribution of free columns l.. to pivot row i
    reach = []
    for row in coeffs:
        low, high = [0] * (t + 1), [0] * (t + 1)
        for l in reversed(range(t)):
            c = row[l] * box[free[l]]
            low[l] = low[l + 1] + min(0, c)
            high[l] = high[l + 1] + max(0, c)
        reach.append((low, high))
    tops = [denom * box[p] for p in pivots]

    def candidates(l: int, sums: list[int]) -> range:
        lo, hi = 0, box[free[l]]
        for i, s in enumerate(sums):
            c = coeffs[i][l]
            need = -s - reach[i][1][l + 1]
            room = tops[i] - s - reach[i][0][l + 1]
            if c > 0:
                lo, hi = max(lo, -(-need // c)), min(hi, room // c)
            elif c < 0:
                lo, hi = max(lo, -(-room // c)), min(hi, need // c)
            elif need > 0 or room < 0:
                return range(0)
        if l < t - 1 or lo > hi:
            return range(lo, hi + 1)
        # last column: D must divide every pivot row, step through the residue class of the strictest row
        start, step = lo, 1
        for i, s in enumerate(sums):
            g = math.gcd(coeffs[i][l], denom)
            if s % g:
                return range(0)
            modulus = denom // g
            if modulus > step:
                residue = (-s // g) * pow(coeffs[i][l] // g, -1, modulus) % modulus
                start, step = lo + (residue - lo) % modulus, modulus
        return range(start, hi + 1, step)

    solutions: list[Point] = []
    values = [0] * t

    def extend(l: int, sums: list[int]) -> None:
        for v in candidates(l, sums):
            values[l] = v
            nxt = [s + row[l] * v for s, row in zip(sums, coeffs)]
            if l + 1 < t:
                extend(l + 1, nxt)
            elif all(s % denom == 0 for s in nxt):
                x = [0] * n
                for f, value in zip(free, values):
                    x[f] = value
                for p, s in zip(pivots, nxt):
                    x[p] = s // denom
                if any(x):
                    solutions.append(tuple(x))

    extend(0, [0] * len(pivots))
    solutions.sort(key=graded_key)
    minimal: list[Point] = []
    for x in solutions:
        if not any(leq(m, x) for m in minimal):
            minimal.append(x)
    logger.debug(f"Oracle searched box {list(box)}: {len(solutions)} solutions, {len(minimal)} minimal")
    return minimal


def brute_Dd(s: CSemigroup, d: int, f: Sequence[int]) -> list[CSemigroup]:
    """
    Every C-semigroup T with gaps below f and T/d = S, by trying all gap subsets.

    Raises:
        GuardCeilingError: if there are more candidate gaps than the oracle allows
    """
    candidates = [x for x in s.cone.region_below(s.order, tuple(f)) if any(x)]
    limit = get_settings().oracle_max_candidates
    if len(candidates) > limit:
        raise GuardCeilingError(
            f"{len(candidates)} candidate gaps exceed the oracle limit of {limit}",
            candidates=len(candidates),
            limit=limit,
        )
    found = []
    for r in range(len(candidates) + 1):
        for gaps in itertools.combinations(candidates, r):
            if validate(s.cone, gaps) is not None:
                continue
            t = s.with_gaps(gaps)
            if equals(quotient_gaps(t, d), s):
                found.append(t)
    logger.debug(f"Oracle searched {2 ** len(candidates)} gap sets, {len(found)} covers")
    return sort_covers(found)


__all__ = [
    "brute_member",
    "brute_hilbert",
    "extreme_solutions",
    "hilbert_search_box",
    "brute_Dd",
]
