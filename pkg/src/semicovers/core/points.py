"""
Lattice points of N^p and checked arithmetic on them.

A point is a plain tuple of non-negative ints. Arithmetic never wraps: any
coordinate whose absolute value exceeds the configured limit raises
CoordinateOverflowError.
"""
import itertools
from typing import Iterable, Iterator, Sequence

from semicovers.config import get_settings
from semicovers.errors import CoordinateOverflowError, DimensionMismatchError, PreconditionError, SchemaError

Point = tuple[int, ...]


def _checked(values: Iterable[int]) -> tuple[int, ...]:
    limit = get_settings().coord_limit
    out = tuple(values)
    for v in out:
        if v > limit or v < -limit:
            raise CoordinateOverflowError(f"Coordinate {v} exceeds limit {limit}", value=v, limit=limit)
    return out


def _same_dim(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(f"Dimension mismatch: {len(a)} vs {len(b)}", left=list(a), right=list(b))


def as_point(coords: Iterable[int], dim: int | None = None) -> Point:
    """Validate and normalise anything iterable into a Point."""
    try:
        values = tuple(int(c) for c in coords)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"Point coordinates must be integers: {coords!r}") from exc
    if any(v < 0 for v in values):
        raise SchemaError(f"Point {values} has a negative coordinate")
    if dim is not None and len(values) != dim:
        raise DimensionMismatchError(f"Point {values} is not in dimension {dim}", point=list(values), dim=dim)
    return _checked(values)


def parse_point(text: str, dim: int | None = None) -> Point:
    """Parse the command-line form ``"9,3"``."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise SchemaError(f"Empty point {text!r}")
    return as_point(parts, dim)


def zero(dim: int) -> Point:
    return (0,) * dim


def is_zero(a: Point) -> bool:
    return not any(a)


def degree(a: Sequence[int]) -> int:
    return sum(a)


def add(a: Point, b: Point) -> Point:
    _same_dim(a, b)
    return _checked(x + y for x, y in zip(a, b))


def difference(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """a - b in Z^p (coordinates may be negative)."""
    _same_dim(a, b)
    return _checked(x - y for x, y in zip(a, b))


def subtract(a: Point, b: Point) -> Point | None:
    """a - b when it stays in N^p, otherwise None."""
    _same_dim(a, b)
    out = tuple(x - y for x, y in zip(a, b))
    if any(v < 0 for v in out):
        return None
    return out


def scale(k: int, a: Sequence[int]) -> tuple[int, ...]:
    return _checked(k * x for x in a)


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise a <= b."""
    return all(x <= y for x, y in zip(a, b))


def divisible(a: Sequence[int], d: int) -> bool:
    """Every coordinate of a is divisible by d (a in dN^p)."""
    return all(x % d == 0 for x in a)


def divide(a: Sequence[int], d: int) -> Point:
    if not divisible(a, d):
        raise PreconditionError(f"{tuple(a)} is not divisible by {d}")
    return tuple(x // d for x in a)


def mod(a: Sequence[int], d: int) -> Point:
    return tuple(x % d for x in a)


def all_odd(a: Sequence[int]) -> bool:
    return all(x % 2 == 1 for x in a)


def is_nonnegative(a: Sequence[int]) -> bool:
    return all(x >= 0 for x in a)


def points_of_degree(dim: int, deg: int) -> Iterator[Point]:
    """All points of N^dim whose coordinates sum to deg, in lexicographic order."""
    if dim == 1:
        yield (deg,)
        return
    for first in range(deg + 1):
        for rest in points_of_degree(dim - 1, deg - first):
            yield (first,) + rest


def points_up_to_degree(dim: int, max_degree: int) -> Iterator[Point]:
    for deg in range(max_degree + 1):
        yield from points_of_degree(dim, deg)


def box_points(upper: Sequence[int]) -> Iterator[Point]:
    """All points 0 <= x <= upper componentwise, lexicographically."""
    return itertools.product(*(range(u + 1) for u in upper))


__all__ = [
    "Point",
    "as_point",
    "parse_point",
    "zero",
    "is_zero",
    "degree",
    "add",
    "difference",
    "subtract",
    "scale",
    "leq",
    "divisible",
    "divide",
    "mod",
    "all_odd",
    "is_nonnegative",
    "points_of_degree",
    "points_up_to_degree",
    "box_points",
]
