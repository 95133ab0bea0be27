from semicovers.semigroup.models import CSemigroup, GeneratedSemigroup, Violation
from semicovers.semigroup.operations import (
    apery,
    equals,
    frobenius,
    fundamental_gaps,
    gaps_from_generators,
    genus,
    intersect,
    member,
    minimal_generators,
    pseudo_frobenius,
    validate,
    window_degree,
)

__all__ = [
    "CSemigroup",
    "GeneratedSemigroup",
    "Violation",
    "apery",
    "equals",
    "frobenius",
    "fundamental_gaps",
    "gaps_from_generators",
    "genus",
    "intersect",
    "member",
    "minimal_generators",
    "pseudo_frobenius",
    "validate",
    "window_degree",
]
