"""
Cover trees: the C-semigroups of a variety with Frobenius element below f,
joined by T -> S whenever T/d = S. The root is the whole cone.
"""
import json
import logging
from collections import deque
from enum import Enum
from typing import Callable, Sequence

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from semicovers.core.cone import Cone
from semicovers.core.orders import TotalOrderSpec
from semicovers.core.points import scale
from semicovers.covers.dd import enumerate_Dd
from semicovers.errors import PreconditionError, SchemaError
from semicovers.semigroup.models import CSemigroup
from semicovers.semigroup.operations import equals, frobenius

logger = logging.getLogger("semicovers.covers.tree")

Variety = Callable[[CSemigroup], bool]


class GraphFormat(str, Enum):
    DOT = "dot"
    JSON = "json"


class CoverTree(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertices: tuple[CSemigroup, ...] = Field(description="Vertices in breadth-first order; vertex 0 is the root.")
    edges: tuple[tuple[int, int], ...] = Field(
        default=(),
        description="(parent, child) index pairs; the child's quotient by d is the parent.",
    )
    d: int = Field(description="Divisor linking children to parents.", gt=0)
    f: tuple[int, ...] = Field(description="Frobenius bound of every vertex.")
    root: int = Field(default=0, description="Index of the cone itself.")

    def children(self, index: int) -> list[int]:
        return [c for p, c in self.edges if p == index]

    def parent_of(self, index: int) -> int | None:
        for p, c in self.edges:
            if c == index:
                return p
        return None

    def path_to_root(self, index: int) -> list[int]:
        """Indices S = S_0, S_1 = S_0/d, ... ending at the root."""
        path = [index]
        while (parent := self.parent_of(path[-1])) is not None:
            if parent in path:
                raise SchemaError(f"Edges form a cycle through vertex {parent}")
            path.append(parent)
        return path

    def index_of(self, s: CSemigroup) -> int | None:
        for i, v in enumerate(self.vertices):
            if equals(v, s):
                return i
        return None

    def is_tree(self) -> bool:
        if len(self.edges) != len(self.vertices) - 1:
            return False
        if len({v.canonical_key() for v in self.vertices}) != len(self.vertices):
            return False
        return all(self.path_to_root(i)[-1] == self.root for i in range(len(self.vertices)))


def everything(_: CSemigroup) -> bool:
    return True


def children(s: CSemigroup, d: int, f: Sequence[int], variety: Variety = everything) -> list[CSemigroup]:
    """Covers T != S in D_d(S, f) that belong to the variety."""
    f = tuple(f)
    fb = frobenius(s)
    if fb is not None and s.order.less(f, scale(d, fb)):
        return []
    return [t for t in enumerate_Dd(s, d, f) if not equals(t, s) and variety(t)]


def build_tree(
    cone: Cone,
    order: TotalOrderSpec,
    d: int,
    f: Sequence[int],
    variety: Variety = everything,
) -> CoverTree:
    """
    Breadth-first construction from the cone.

    Raises:
        PreconditionError: if f is not a point of the cone
    """
    f = tuple(f)
    if len(f) != cone.dim or not cone.contains(f):
        raise PreconditionError(f"Bound {f} is not a point of the cone", f=list(f))

    root = CSemigroup(cone=cone, order=order)
    vertices = [root]
    index = {root.canonical_key(): 0}
    edges: list[tuple[int, int]] = []
    queue = deque([0])
    while queue:
        parent = queue.popleft()
        for child in children(vertices[parent], d, f, variety):
            key = child.canonical_key()
            if key in index:
                logger.warning(f"Cover with gaps {child.sorted_gaps()} reached twice; keeping the first")
                continue
            index[key] = len(vertices)
            vertices.append(child)
            edges.append((parent, index[key]))
            queue.append(index[key])
        logger.debug(f"Expanded vertex {parent}: {len(vertices)} vertices so far")

    logger.info(f"Cover tree for d={d}, f={f}: {len(vertices)} vertices, {len(edges)} edges")
    return CoverTree(vertices=tuple(vertices), edges=tuple(edges), d=d, f=f)


def _label(s: CSemigroup) -> str:
    if not s.gaps:
        return "C"
    return "C \\\\ {" + ", ".join("(" + ",".join(str(c) for c in h) + ")" for h in s.sorted_gaps()) + "}"


def export_graph(tree: CoverTree, fmt: GraphFormat = GraphFormat.DOT) -> str:
    """Deterministic DOT or JSON text for a cover tree."""
    if fmt == GraphFormat.JSON:
        return json.dumps(tree_to_document(tree), sort_keys=True, separators=(",", ":"))

    lines = ["digraph covers {", "\tgraph [rankdir=TB];"]
    depth = {tree.root: 0}
    for p, c in tree.edges:
        depth[c] = depth[p] + 1
    for level in sorted(set(depth.values())):
        lines.append("\t{")
        lines.append("\t\trank = same;")
        for i in sorted(v for v, k in depth.items() if k == level):
            lines.append(f'\t\t"S{i}" [label="S{i} = {_label(tree.vertices[i])}", shape = box];')
        lines.append("\t}")
    for p, c in tree.edges:
        lines.append(f'\t"S{p}" -> "S{c}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_document(tree: CoverTree) -> dict:
    return {
        "d": tree.d,
        "f": list(tree.f),
        "root": tree.root,
        "vertices": [v.canonical() for v in tree.vertices],
        "edges": [list(e) for e in tree.edges],
    }


def cover_tree_from_json(text: str) -> CoverTree:
    """
    Re-import a tree written by export_graph in JSON form.

    Raises:
        SchemaError: if the text is not a well-formed tree document
    """
    try:
        doc = json.loads(text)
        tree = CoverTree.model_validate(doc)
    except (json.JSONDecodeError, ValidationError) as exc:
        raise SchemaError(f"Invalid cover tree document: {exc}") from exc
    if not tree.is_tree():
        raise SchemaError("Document does not describe a tree rooted at vertex 0")
    return tree


__all__ = [
    "GraphFormat",
    "CoverTree",
    "Variety",
    "everything",
    "children",
    "build_tree",
    "export_graph",
    "tree_to_document",
    "cover_tree_from_json",
]
