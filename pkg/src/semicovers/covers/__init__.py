from semicovers.covers.dd import (
    CoverEnumeration,
    build_T,
    combination_sums,
    compute_Mf,
    cover_enumeration,
    enumerate_Dd,
    sort_covers,
    is_admissible,
)
from semicovers.covers.tree import (
    CoverTree,
    GraphFormat,
    Variety,
    build_tree,
    children,
    cover_tree_from_json,
    everything,
    export_graph,
    tree_to_document,
)

__all__ = [
    "CoverEnumeration",
    "build_T",
    "combination_sums",
    "compute_Mf",
    "cover_enumeration",
    "enumerate_Dd",
    "sort_covers",
    "is_admissible",
    "CoverTree",
    "GraphFormat",
    "Variety",
    "build_tree",
    "children",
    "cover_tree_from_json",
    "everything",
    "export_graph",
    "tree_to_document",
]
