from semicovers.varieties.checks import (
    ArfCounterexample,
    CMCounterexample,
    SaturatedCounterexample,
    arf_check,
    cm_check,
    default_ray_elements,
    saturated_check,
)
from semicovers.varieties.convex import (
    QuotientMismatch,
    RationalPolytope,
    ScaleInterval,
    convex_member,
    convex_quotient_equal,
    convex_scale_interval,
)
from semicovers.varieties.modular import ModularSystem, pm_intersect, pm_member, pm_quotient
from semicovers.varieties.predicates import VarietyName, named_variety, semigroup_from_modular, semigroup_from_predicate

__all__ = [
    "ArfCounterexample",
    "CMCounterexample",
    "SaturatedCounterexample",
    "arf_check",
    "cm_check",
    "default_ray_elements",
    "saturated_check",
    "QuotientMismatch",
    "RationalPolytope",
    "ScaleInterval",
    "convex_member",
    "convex_quotient_equal",
    "convex_scale_interval",
    "ModularSystem",
    "pm_intersect",
    "pm_member",
    "pm_quotient",
    "VarietyName",
    "named_variety",
    "semigroup_from_modular",
    "semigroup_from_predicate",
]
