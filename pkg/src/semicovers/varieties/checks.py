"""
Window-bounded refuters for the Arf, saturated and Cohen-Macaulay properties.

Each check scans the members of S inside box(0, window) in lexicographic order
and returns the first violation it meets, or None. None only means that no
violation lives inside the window.
"""
import itertools
import logging
from typing import Callable, Sequence

from pydantic import BaseModel, ConfigDict, Field

from semicovers.config import get_settings
from semicovers.core.cone import Cone
from semicovers.core.points import Point, add, box_points, degree, difference, leq, scale, subtract
from semicovers.errors import GuardCeilingError, PreconditionError
from semicovers.semigroup.models import CSemigroup, GeneratedSemigroup

logger = logging.getLogger("semicovers.varieties.checks")

Membership = Callable[[Point], bool]


class ArfCounterexample(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: tuple[int, ...]
    y: tuple[int, ...]
    z: tuple[int, ...]
    result: tuple[int, ...] = Field(description="x + y - z, missing from S.")


class SaturatedCounterexample(BaseModel):
    model_config = ConfigDict(frozen=True)

    s: tuple[int, ...]
    elements: tuple[tuple[int, ...], ...] = Field(description="Members s_i <= s.")
    coefficients: tuple[int, ...] = Field(description="Integer z_i with sum(z_i s_i) in N^p.")
    result: tuple[int, ...] = Field(description="s + sum(z_i s_i), missing from S.")


class CMCounterexample(BaseModel):
    model_config = ConfigDict(frozen=True)

    a: tuple[int, ...]
    b: tuple[int, ...]
    i: int
    j: int
    witness: tuple[int, ...] = Field(description="a - n_j = b - n_i in Z^p, missing from S.")


def as_membership(s: CSemigroup | GeneratedSemigroup | Membership) -> Membership:
    if isinstance(s, (CSemigroup, GeneratedSemigroup)):
        return lambda x: tuple(x) in s
    return s


def _members(member: Membership, window: Sequence[int]) -> list[Point]:
    if any(w <= 0 for w in window):
        raise PreconditionError(f"Window {tuple(window)} must be componentwise positive", window=list(window))
    return [x for x in box_points(window) if member(x)]


def arf_check(s: CSemigroup | GeneratedSemigroup | Membership, window: Sequence[int]) -> ArfCounterexample | None:
    """First x >= y >= z in S with x + y - z inside the window and outside S."""
    member = as_membership(s)
    window = tuple(window)
    members = _members(member, window)
    for x in members:
        for y in members:
            if not leq(y, x):
                continue
            for z in members:
                if not leq(z, y):
                    continue
                w = subtract(add(x, y), z)
                if leq(w, window) and not member(w):
                    return ArfCounterexample(x=x, y=y, z=z, result=w)
    return None


def saturated_check(
    s: CSemigroup | GeneratedSemigroup | Membership,
    window: Sequence[int],
    coeff_bound: int,
    max_terms: int = 2,
) -> SaturatedCounterexample | None:
    """
    First s, s_1..s_r in S with s_i <= s and non-zero z_i in [-coeff_bound, coeff_bound]
    such that sum(z_i s_i) is in N^p, s + sum(z_i s_i) is inside the window and outside S.
    """
    if coeff_bound <= 0:
        raise PreconditionError(f"Coefficient bound must be positive, got {coeff_bound}")
    member = as_membership(s)
    window = tuple(window)
    members = _members(member, window)
    coefficients = [z for z in range(-coeff_bound, coeff_bound + 1) if z != 0]
    for base in members:
        below = [m for m in members if any(m) and leq(m, base)]
        for r in range(1, max_terms + 1):
            for elements in itertools.combinations(below, r):
                for zs in itertools.product(coefficients, repeat=r):
                    shift = [sum(z * e[k] for z, e in zip(zs, elements)) for k in range(len(base))]
                    if any(v < 0 for v in shift):
                        continue
                    w = tuple(b + v for b, v in zip(base, shift))
                    if leq(w, window) and not member(w):
                        return SaturatedCounterexample(s=base, elements=elements, coefficients=zs, result=w)
    return None


def _cone_of(s: CSemigroup | GeneratedSemigroup) -> Cone:
    if isinstance(s, CSemigroup):
        return s.cone
    return Cone.from_generators(s.generators)


def default_ray_elements(s: CSemigroup | GeneratedSemigroup) -> list[Point]:
    """Smallest multiple of every extremal ray lying in S, in ray order."""
    ceiling = get_settings().degree_ceiling
    out = []
    for ray in _cone_of(s).rays:
        k = 1
        while scale(k, ray) not in s:
            k += 1
            if k * degree(ray) > ceiling:
                raise GuardCeilingError(f"No multiple of ray {ray} up to degree {ceiling} lies in S", ray=list(ray))
        out.append(scale(k, ray))
    return out


def cm_check(
    s: CSemigroup | GeneratedSemigroup,
    window: Sequence[int],
    ray_elements: Sequence[Sequence[int]] | None = None,
) -> CMCounterexample | None:
    """
    First a, b in S inside the window and i != j with a + n_i = b + n_j
    but a - n_j outside S.

    Raises:
        PreconditionError: if the cone is not simplicial or some n_i is not a member on its ray
    """
    cone = _cone_of(s)
    if not cone.is_simplicial:
        raise PreconditionError(
            f"Cohen-Macaulay check needs a simplicial cone, got {len(cone.rays)} rays in dimension {cone.dim}",
            rays=[list(r) for r in cone.rays],
        )
    ns = [tuple(n) for n in ray_elements] if ray_elements is not None else default_ray_elements(s)
    if len(ns) != len(cone.rays):
        raise PreconditionError(f"Expected {len(cone.rays)} ray elements, got {len(ns)}")
    for n, ray in zip(ns, cone.rays):
        on_ray = any(n) and Cone(rays=(ray,)).contains(n)
        if not on_ray or n not in s:
            raise PreconditionError(f"{n} is not a non-zero member of S on the ray {ray}", n=list(n), ray=list(ray))

    member = as_membership(s)
    window = tuple(window)
    for a in _members(member, window):
        for i, j in itertools.permutations(range(len(ns)), 2):
            b = subtract(add(a, ns[i]), ns[j])
            if b is None or not leq(b, window) or not member(b):
                continue
            rest = subtract(a, ns[j])
            if rest is None or not member(rest):
                return CMCounterexample(a=a, b=b, i=i, j=j, witness=difference(a, ns[j]))
    return None


__all__ = [
    "Membership",
    "ArfCounterexample",
    "SaturatedCounterexample",
    "CMCounterexample",
    "as_membership",
    "arf_check",
    "saturated_check",
    "default_ray_elements",
    "cm_check",
]
