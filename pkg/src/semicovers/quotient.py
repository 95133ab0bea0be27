"""
Quotients S/d = {x : d x in S}.

Two independent routes: directly on the gap set, and through the Hilbert
basis of the system (M | -d I) whose solutions (lambda, x) encode
sum(lambda_j a_j) = d x.
"""
import logging
from enum import Enum
from typing import Iterable, Sequence

from semicovers.core.orders import TotalOrderSpec
from semicovers.core.points import Point, divide, divisible
from semicovers.errors import PreconditionError
from semicovers.hilbert import DiophantineSystem, hilbert_basis, reduce_generating_set
from semicovers.semigroup.models import CSemigroup, GeneratedSemigroup
from semicovers.semigroup.operations import gaps_from_generators, minimal_generators

logger = logging.getLogger("semicovers.quotient")


class Via(str, Enum):
    HILBERT = "hilbert"
    GAPS = "gaps"


def _check_d(d: int) -> None:
    if d < 1:
        raise PreconditionError(f"The divisor must be a positive integer, got {d}", d=d)


def quotient_gaps(s: CSemigroup, d: int) -> CSemigroup:
    """S/d keeps the cone; its gaps are the h/d for gaps h divisible by d."""
    _check_d(d)
    return s.with_gaps(divide(h, d) for h in s.gaps if divisible(h, d))


def quotient_generated(g: GeneratedSemigroup, d: int) -> list[Point]:
    """
    Minimal generators of <g>/d.

    Solves sum(lambda_j a_j) - d x = 0, projects every minimal solution on its
    last p coordinates and reduces the projections.
    """
    _check_d(d)
    q, p = len(g.generators), g.dim
    matrix = tuple(
        tuple(a[i] for a in g.generators) + tuple(-d if k == i else 0 for k in range(p))
        for i in range(p)
    )
    basis = hilbert_basis(DiophantineSystem(matrix=matrix))
    projections = {sol[q:] for sol in basis.solutions if any(sol[q:])}
    logger.debug(f"Quotient by {d}: {len(basis.solutions)} minimal solutions, {len(projections)} distinct projections")
    return g.order.sort(reduce_generating_set(projections))


def quotient(s: CSemigroup, d: int, via: Via = Via.GAPS) -> CSemigroup:
    """S/d as a CSemigroup, computed along either route."""
    if via == Via.GAPS:
        return quotient_gaps(s, d)
    gens = quotient_generated(GeneratedSemigroup(generators=tuple(minimal_generators(s)), order=s.order), d)
    return gaps_from_generators(GeneratedSemigroup(generators=tuple(gens), order=s.order))


def fg_transfer(fg_of_s: Iterable[Sequence[int]], d: int, order: TotalOrderSpec | None = None) -> list[Point]:
    """Fundamental gaps of S/d from those of S: the h/d with d dividing h, sorted under ``order``."""
    _check_d(d)
    return (order or TotalOrderSpec()).sort(divide(h, d) for h in fg_of_s if divisible(h, d))


def apery_transfer(
    ap_of_s: Iterable[Sequence[int]], m: Sequence[int], d: int, order: TotalOrderSpec | None = None
) -> list[Point]:
    """
    Apery set of S/d with respect to m/d from Ap(S, m), sorted under ``order``.

    Raises:
        PreconditionError: if d does not divide every coordinate of m
    """
    _check_d(d)
    if not divisible(m, d):
        raise PreconditionError(f"{tuple(m)} is not divisible by {d}", m=list(m), d=d)
    return (order or TotalOrderSpec()).sort(divide(w, d) for w in ap_of_s if divisible(w, d))


__all__ = [
    "Via",
    "quotient_gaps",
    "quotient_generated",
    "quotient",
    "fg_transfer",
    "apery_transfer",
]
