"""
Enumeration of the C-semigroups T with T/d = S and Frobenius element below f.

Every such T has the form T(f, L): the cone points above f, plus dS, plus
every combination sum(a_i l_i) with 0 <= a_i < d over an admissible L drawn
from the members of S that are not multiples of d and lie below f.
"""
import logging
from typing import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, Field

from semicovers.core.points import Point, add, divide, divisible, leq, scale, subtract
from semicovers.errors import InadmissibleSetError, PostconditionError, PreconditionError
from semicovers.quotient import quotient_gaps
from semicovers.semigroup.models import CSemigroup
from semicovers.semigroup.operations import equals, frobenius, validate

logger = logging.getLogger("semicovers.covers.dd")


class CoverEnumeration(BaseModel):
    """Outcome of a D_d(S, f) enumeration."""

    model_config = ConfigDict(frozen=True)

    semigroups: tuple[CSemigroup, ...] = Field(description="Distinct covers, by genus then gap keys.")
    candidates: tuple[tuple[int, ...], ...] = Field(description="The set the subsets L are drawn from.")
    raw_subset_bound: int = Field(description="2 to the number of candidates.")
    admissible_subsets: int = Field(description="Admissible subsets visited, the empty one included.")
    rejected: int = Field(default=0, description="Constructed sets that failed verification.")

    def __len__(self) -> int:
        return len(self.semigroups)


def _check_f(s: CSemigroup, d: int, f: Point) -> None:
    if d < 1:
        raise PreconditionError(f"The divisor must be a positive integer, got {d}", d=d)
    if len(f) != s.dim or not s.cone.contains(f):
        raise PreconditionError(f"Bound {f} is not a point of the cone", f=list(f))
    fb = frobenius(s)
    if fb is not None and s.order.less(f, scale(d, fb)):
        raise PreconditionError(
            f"Bound {f} lies below {d} times the Frobenius element {fb}",
            f=list(f),
            frobenius=list(fb),
        )


def compute_Mf(s: CSemigroup, d: int, f: Sequence[int], inclusive: bool = False) -> list[Point]:
    """
    Members m of S with m < f and some coordinate not divisible by d, ascending.

    With ``inclusive`` the bound itself is allowed (m <= f).
    """
    f = tuple(f)
    if len(f) != s.dim or not s.cone.contains(f):
        raise PreconditionError(f"Bound {f} is not a point of the cone", f=list(f))
    region = s.cone.region_below(s.order, f, strict=not inclusive)
    return [m for m in region if m not in s.gaps and not divisible(m, d)]


def _extend_sums(s: CSemigroup, d: int, sums: frozenset[Point], lam: Point) -> frozenset[Point] | None:
    """
    Add lam to the combinations already in ``sums``.

    Only sums using lam are new; each must be non-divisible by d or have its
    quotient in S. Returns None as soon as one fails.
    """
    fb = frobenius(s)
    new: set[Point] = set()
    for c in sums:
        for a in range(1, d):
            v = add(c, scale(a, lam))
            if v in sums or v in new:
                continue
            if divisible(v, d):
                q = divide(v, d)
                # quotients past the Frobenius element are members automatically
                if not (fb is None or s.order.less(fb, q)) and q not in s:
                    return None
            new.add(v)
    return sums | new


def combination_sums(s: CSemigroup, d: int, lam: Iterable[Sequence[int]]) -> frozenset[Point] | None:
    """All sum(a_i l_i) with 0 <= a_i < d, or None if L is not admissible."""
    sums: frozenset[Point] | None = frozenset({(0,) * s.dim})
    for l in lam:
        sums = _extend_sums(s, d, sums, tuple(l))
        if sums is None:
            return None
    return sums


def is_admissible(s: CSemigroup, d: int, lam: Iterable[Sequence[int]]) -> bool:
    return combination_sums(s, d, lam) is not None


def _assemble(s: CSemigroup, d: int, f: Point, sums: frozenset[Point]) -> CSemigroup:
    region = s.cone.region_below(s.order, f)
    ordered_sums = sorted(sums)

    def covered(x: Point) -> bool:
        for c in ordered_sums:
            if not leq(c, x):
                continue
            rest = subtract(x, c)
            if divisible(rest, d) and divide(rest, d) in s:
                return True
        return False

    return s.with_gaps(x for x in region if not covered(x))


def _verify(s: CSemigroup, d: int, t: CSemigroup) -> str | None:
    violation = validate(t.cone, t.gaps)
    if violation is not None:
        return f"{violation.gap} = {violation.summand} + {violation.complement}"
    if not equals(quotient_gaps(t, d), s):
        return f"quotient by {d} differs from the base semigroup"
    return None


def build_T(s: CSemigroup, d: int, f: Sequence[int], lam: Iterable[Sequence[int]]) -> CSemigroup:
    """
    The cover T(f, L) of ``s``.

    Raises:
        PreconditionError: if f is outside the cone or below d Fb(S), or L leaves M_f
        InadmissibleSetError: if some combination of L is divisible by d with quotient outside S
        PostconditionError: if the result is not a C-semigroup with T/d = S
    """
    f = tuple(f)
    lam = [tuple(l) for l in lam]
    _check_f(s, d, f)
    allowed = set(compute_Mf(s, d, f, inclusive=True))
    outside = [l for l in lam if l not in allowed]
    if outside:
        raise PreconditionError(f"Elements {outside} are not members of S below {f} outside {d}N^p", elements=[list(l) for l in outside])
    sums = combination_sums(s, d, lam)
    if sums is None:
        raise InadmissibleSetError(f"Set {lam} has a combination divisible by {d} whose quotient is a gap", lam=[list(l) for l in lam])
    t = _assemble(s, d, f, sums)
    problem = _verify(s, d, t)
    if problem is not None:
        raise PostconditionError(f"T(f, L) failed verification: {problem}", f=list(f), lam=[list(l) for l in lam])
    return t


def sort_covers(semigroups: Iterable[CSemigroup]) -> list[CSemigroup]:
    """Deterministic order: by genus, then by the ordered gap lists."""
    return sorted(semigroups, key=lambda t: (len(t.gaps), [t.order.key(h) for h in t.sorted_gaps()]))


def cover_enumeration(s: CSemigroup, d: int, f: Sequence[int]) -> CoverEnumeration:
    """
    Every T(f, L) over admissible L, deduplicated by gap set.

    Subsets are grown in candidate order; a branch is cut as soon as the
    new element makes the set inadmissible, since no superset can recover.
    """
    f = tuple(f)
    _check_f(s, d, f)
    candidates = compute_Mf(s, d, f, inclusive=True)
    logger.debug(f"Drawing subsets from {len(candidates)} candidates: {candidates}")

    found: dict[tuple, CSemigroup] = {}
    visited = 0
    rejected = 0
    stack: list[tuple[int, frozenset[Point]]] = [(0, frozenset({(0,) * s.dim}))]
    while stack:
        start, sums = stack.pop()
        visited += 1
        t = _assemble(s, d, f, sums)
        key = t.canonical_key()
        if key not in found:
            problem = _verify(s, d, t)
            if problem is None:
                found[key] = t
            else:
                rejected += 1
                logger.warning(f"Discarding candidate cover with gaps {t.sorted_gaps()}: {problem}")
        for i in range(len(candidates) - 1, start - 1, -1):
            extended = _extend_sums(s, d, sums, candidates[i])
            if extended is not None:
                stack.append((i + 1, extended))

    semigroups = sort_covers(found.values())
    logger.info(f"D_{d}(S, {f}): {len(semigroups)} covers from {visited} admissible subsets of {len(candidates)} candidates")
    return CoverEnumeration(
        semigroups=tuple(semigroups),
        candidates=tuple(candidates),
        raw_subset_bound=2 ** len(candidates),
        admissible_subsets=visited,
        rejected=rejected,
    )


def enumerate_Dd(s: CSemigroup, d: int, f: Sequence[int]) -> list[CSemigroup]:
    return list(cover_enumeration(s, d, f).semigroups)


__all__ = [
    "CoverEnumeration",
    "compute_Mf",
    "combination_sums",
    "is_admissible",
    "build_T",
    "cover_enumeration",
    "sort_covers",
    "enumerate_Dd",
]
