"""
Quotients of affine and C-semigroups by positive integers, the covers that
undo them, and the irreducible covers among those.
"""
from semicovers.core import Cone, OrderKind, TotalOrderSpec
from semicovers.covers import CoverTree, build_tree, enumerate_Dd
from semicovers.errors import (
    CoordinateOverflowError,
    GuardCeilingError,
    PreconditionError,
    SchemaError,
    SemicoversError,
)
from semicovers.irreducible import Classification, classify, symmetric_double
from semicovers.quotient import Via, quotient
from semicovers.semigroup import CSemigroup, GeneratedSemigroup, gaps_from_generators, minimal_generators

__all__ = [
    "Cone",
    "OrderKind",
    "TotalOrderSpec",
    "CSemigroup",
    "GeneratedSemigroup",
    "gaps_from_generators",
    "minimal_generators",
    "Via",
    "quotient",
    "CoverTree",
    "build_tree",
    "enumerate_Dd",
    "Classification",
    "classify",
    "symmetric_double",
    "SemicoversError",
    "SchemaError",
    "PreconditionError",
    "CoordinateOverflowError",
    "GuardCeilingError",
]
