from semicovers.core.cone import Cone, cone_contains, cone_hilbert_basis, primitive
from semicovers.core.orders import Comparison, OrderKind, TotalOrderSpec, order_cmp, order_from_name
from semicovers.core.points import (
    Point,
    add,
    all_odd,
    as_point,
    box_points,
    degree,
    difference,
    divide,
    divisible,
    is_zero,
    leq,
    mod,
    parse_point,
    points_up_to_degree,
    scale,
    subtract,
    zero,
)

__all__ = [
    "Cone",
    "cone_contains",
    "cone_hilbert_basis",
    "primitive",
    "Comparison",
    "OrderKind",
    "TotalOrderSpec",
    "order_cmp",
    "order_from_name",
    "Point",
    "add",
    "all_odd",
    "as_point",
    "box_points",
    "degree",
    "difference",
    "divide",
    "divisible",
    "is_zero",
    "leq",
    "mod",
    "parse_point",
    "points_up_to_degree",
    "scale",
    "subtract",
    "zero",
]
