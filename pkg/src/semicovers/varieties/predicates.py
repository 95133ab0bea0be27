"""
Bridges between membership predicates and C-semigroups: materialising a
semigroup from a predicate, and the named varieties a cover tree can be
restricted to.
"""
import logging
from enum import Enum
from typing import Sequence

from semicovers.core.cone import Cone
from semicovers.core.orders import TotalOrderSpec
from semicovers.core.points import box_points
from semicovers.covers.tree import Variety, everything
from semicovers.errors import PreconditionError, SchemaError
from semicovers.semigroup.models import CSemigroup
from semicovers.semigroup.operations import validate
from semicovers.varieties.checks import Membership, arf_check, saturated_check
from semicovers.varieties.modular import ModularSystem, pm_member

logger = logging.getLogger("semicovers.varieties.predicates")


class VarietyName(str, Enum):
    ALL = "all"
    ARF = "arf"
    SATURATED = "saturated"


def semigroup_from_predicate(
    member: Membership,
    cone: Cone,
    window: Sequence[int],
    order: TotalOrderSpec | None = None,
) -> CSemigroup:
    """
    The C-semigroup whose gaps are the cone points of box(0, window) failing ``member``.

    Points outside the window are taken to be members, so the window has to
    cover every gap.

    Raises:
        PreconditionError: if the materialised set is not closed under addition
    """
    gaps = [x for x in box_points(window) if cone.contains(x) and not member(x)]
    violation = validate(cone, gaps)
    if violation is not None:
        raise PreconditionError(
            f"Predicate does not define a C-semigroup on the window: {violation.gap} = {violation.summand} + {violation.complement}",
            gap=list(violation.gap),
        )
    logger.debug(f"Materialised {len(gaps)} gaps from a predicate on window {tuple(window)}")
    return CSemigroup(cone=cone, gaps=frozenset(gaps), order=order or TotalOrderSpec())


def semigroup_from_modular(system: ModularSystem, cone: Cone, window: Sequence[int], order: TotalOrderSpec | None = None) -> CSemigroup:
    return semigroup_from_predicate(lambda x: pm_member(system, x), cone, window, order)


def named_variety(name: VarietyName | str, window: Sequence[int], coeff_bound: int = 2) -> Variety:
    """Tree predicate for a named variety, checked on box(0, window)."""
    try:
        name = VarietyName(name)
    except ValueError as exc:
        raise SchemaError(f"Unknown variety {name!r}; expected one of {[v.value for v in VarietyName]}") from exc
    window = tuple(window)
    match name:
        case VarietyName.ALL:
            return everything
        case VarietyName.ARF:
            return lambda t: arf_check(t, window) is None
        case VarietyName.SATURATED:
            return lambda t: saturated_check(t, window, coeff_bound) is None


__all__ = [
    "VarietyName",
    "semigroup_from_predicate",
    "semigroup_from_modular",
    "named_variety",
]
