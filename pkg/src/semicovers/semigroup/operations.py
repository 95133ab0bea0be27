"""
Invariants of C-semigroups and conversion between representations.
"""
import logging
from typing import Iterable, Sequence

from semicovers.config import get_settings
from semicovers.core.cone import Cone
from semicovers.core.points import Point, add, box_points, degree, leq, points_of_degree, scale, subtract
from semicovers.errors import DimensionMismatchError, GapOutsideConeError, GuardCeilingError, PreconditionError
from semicovers.hilbert import reduce_generating_set
from semicovers.semigroup.models import CSemigroup, GeneratedSemigroup, Violation

logger = logging.getLogger("semicovers.semigroup.operations")


def validate(cone: Cone, gaps: Iterable[Sequence[int]]) -> Violation | None:
    """
    Check that the cone minus ``gaps`` is closed under addition.

    Returns:
        None when it is a C-semigroup, otherwise the first violation found
        (gaps by increasing degree, summands lexicographically)

    Raises:
        GapOutsideConeError: if some gap is not a point of the cone
    """
    gap_set = {tuple(h) for h in gaps}
    for h in gap_set:
        if len(h) != cone.dim:
            raise DimensionMismatchError(f"Gap {h} is not in dimension {cone.dim}")
        if not cone.contains(h):
            raise GapOutsideConeError(f"Gap {h} lies outside the cone", gap=list(h))

    def in_s(x: Point) -> bool:
        return cone.contains(x) and x not in gap_set

    for h in sorted(gap_set, key=lambda p: (degree(p), p)):
        for u in box_points(h):
            if not any(u) or u == h or not in_s(u):
                continue
            rest = subtract(h, u)
            if in_s(rest):
                return Violation(gap=h, summand=u, complement=rest)
    return None


def member(s: CSemigroup | GeneratedSemigroup, x: Sequence[int]) -> bool:
    if len(x) != s.dim:
        raise DimensionMismatchError(f"Point {tuple(x)} is not in dimension {s.dim}")
    return tuple(x) in s


def _least_multiple_in(s: CSemigroup | GeneratedSemigroup, n: Point, ceiling: int) -> int:
    k = 1
    while scale(k, n) not in s:
        k += 1
        if k * degree(n) > ceiling:
            raise GuardCeilingError(
                f"No multiple of {n} up to degree {ceiling} lies in the semigroup; the complement may be infinite",
                ray=list(n),
                ceiling=ceiling,
            )
    return k


def _multiples(s: CSemigroup | GeneratedSemigroup, cone: Cone, ceiling: int) -> tuple[int, int]:
    """
    Degree bounds from the cone's Hilbert basis {n_i} and the least k_i with k_i n_i in S.

    Returns:
        (largest degree of any k_i n_i, sum of (k_i - 1) deg n_i)
    """
    top, spread = 0, 0
    for n in cone.hilbert_basis():
        k = _least_multiple_in(s, n, ceiling)
        top = max(top, k * degree(n))
        spread += (k - 1) * degree(n)
    return top, spread


def window_degree(s: CSemigroup) -> int:
    """Degree beyond which every element of ``s`` splits off some k_i n_i and stays in ``s``."""
    ceiling = get_settings().degree_ceiling
    top, spread = _multiples(s, s.cone, ceiling)
    highest_gap = max((degree(h) for h in s.gaps), default=0)
    return max(highest_gap + top, spread)


def gaps_from_generators(g: GeneratedSemigroup) -> CSemigroup:
    """
    Convert a generator list into cone-and-gaps form.

    Cone points are scanned degree by degree. Once level L satisfies
    L >= max(D + K, B), with D the highest gap degree, K the largest degree of
    a k_i n_i and B the sum of (k_i - 1) deg n_i, every later point decomposes
    as k_i n_i plus an earlier member, so the scan stops.

    Raises:
        GuardCeilingError: if the scan reaches the configured degree ceiling
    """
    cone = Cone.from_generators(g.generators)
    ceiling = get_settings().degree_ceiling
    top, spread = _multiples(g, cone, ceiling)

    gaps: list[Point] = []
    highest_gap = 0
    level = 0
    while True:
        if level > ceiling:
            raise GuardCeilingError(
                f"Gap scan reached degree {ceiling} with {len(gaps)} gaps; the complement may be infinite",
                ceiling=ceiling,
                gaps_found=len(gaps),
            )
        for x in points_of_degree(cone.dim, level):
            if cone.contains(x) and x not in g:
                gaps.append(x)
                highest_gap = level
        if level >= max(highest_gap + top, spread):
            break
        level += 1

    logger.debug(f"Converted {len(g.generators)} generators: {len(gaps)} gaps, scan stopped at degree {level}")
    return CSemigroup(cone=cone, gaps=frozenset(gaps), order=g.order)


def minimal_generators(s: CSemigroup | GeneratedSemigroup) -> list[Point]:
    """Unique minimal generating set, sorted under the semigroup's order."""
    if isinstance(s, GeneratedSemigroup):
        return s.order.sort(reduce_generating_set(s.generators))

    window = window_degree(s)
    members = [x for x in s.cone.points_up_to_degree(window) if any(x) and x not in s.gaps]
    member_set = set(members)
    gens = []
    for x in members:
        half = degree(x) / 2
        decomposable = False
        for u in members:
            if degree(u) > half:
                break
            if leq(u, x):
                rest = subtract(x, u)
                if rest is not None and rest in member_set:
                    decomposable = True
                    break
        if not decomposable:
            gens.append(x)
    logger.debug(f"{len(gens)} minimal generators among {len(members)} members up to degree {window}")
    return s.order.sort(gens)


def frobenius(s: CSemigroup) -> Point | None:
    return s.order.maximum(s.gaps)


def pseudo_frobenius(s: CSemigroup) -> list[Point]:
    """Gaps h with h + a in S for every minimal generator a."""
    if not s.gaps:
        return []
    gens = minimal_generators(s)
    return s.order.sort(h for h in s.gaps if all(add(h, a) in s for a in gens))


def apery(s: CSemigroup, m: Sequence[int], classical: bool = False) -> list[Point]:
    """
    Apery set of ``s`` with respect to ``m``.

    By default this is {x in S : x - m is a gap}, that is (m + gaps) intersected
    with S. With ``classical`` it is {x in S : x - m not in S}, which is only
    finite when the cone is a single ray.

    Raises:
        PreconditionError: if m is zero or not in S, or classical is requested on a wider cone
    """
    m = tuple(m)
    if len(m) != s.dim:
        raise DimensionMismatchError(f"Point {m} is not in dimension {s.dim}")
    if not any(m) or m not in s:
        raise PreconditionError(f"Apery sets need a non-zero element of the semigroup, got {m}", m=list(m))

    if not classical:
        return s.order.sort(x for h in s.gaps if (x := add(m, h)) in s)

    if len(s.cone.rays) != 1:
        raise PreconditionError(
            f"The classical Apery set is infinite on a cone with {len(s.cone.rays)} extremal rays",
            rays=[list(r) for r in s.cone.rays],
        )
    bound = degree(m) + max((degree(h) for h in s.gaps), default=0)
    out = []
    for x in s.cone.points_up_to_degree(bound):
        if x not in s:
            continue
        rest = subtract(x, m)
        if rest is None or rest not in s:
            out.append(x)
    return s.order.sort(out)


def fundamental_gaps(s: CSemigroup) -> list[Point]:
    return s.order.sort(h for h in s.gaps if scale(2, h) in s and scale(3, h) in s)


def genus(s: CSemigroup) -> int:
    return len(s.gaps)


def intersect(s: CSemigroup, t: CSemigroup) -> CSemigroup:
    if s.cone != t.cone:
        raise PreconditionError("Cannot intersect semigroups over different cones", left=list(s.cone.rays), right=list(t.cone.rays))
    if s.order != t.order:
        raise PreconditionError("Cannot intersect semigroups under different orders")
    return s.with_gaps(s.gaps | t.gaps)


def equals(s: CSemigroup, t: CSemigroup) -> bool:
    return s.canonical_key() == t.canonical_key()


__all__ = [
    "validate",
    "member",
    "window_degree",
    "gaps_from_generators",
    "minimal_generators",
    "frobenius",
    "pseudo_frobenius",
    "apery",
    "fundamental_gaps",
    "genus",
    "intersect",
    "equals",
]
