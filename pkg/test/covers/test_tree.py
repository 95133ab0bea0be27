"""
Tests for cover trees and their export.
"""

import json

import pytest

from semicovers.covers.tree import GraphFormat, build_tree, cover_tree_from_json, export_graph, tree_to_document
from semicovers.errors import PreconditionError, SchemaError
from semicovers.quotient import quotient_gaps
from semicovers.semigroup.operations import equals

# Gap sets of the d=2, f=(4,2) tree over the running cone, keyed by their names in the picture
FIGURE = {
    "S0": [],
    "S1": [(2, 1)],
    "S2": [(3, 1)],
    "S3": [(4, 1)],
    "S4": [(2, 1), (3, 1)],
    "S5": [(2, 1), (4, 1)],
    "S6": [(3, 1), (4, 1)],
    "S7": [(2, 1), (4, 2)],
    "S8": [(2, 1), (3, 1), (4, 1)],
    "S9": [(2, 1), (3, 1), (4, 2)],
    "S10": [(2, 1), (4, 1), (4, 2)],
    "S11": [(2, 1), (3, 1), (4, 1), (4, 2)],
}


@pytest.fixture
def tree(star_cone, order):
    return build_tree(star_cone, order, 2, (4, 2))


def _names(tree):
    by_gaps = {tuple(g): name for name, g in FIGURE.items()}
    return [by_gaps[tuple(v.sorted_gaps())] for v in tree.vertices]


class TestBuildTree:
    """Breadth-first construction"""

    def test_vertices_match_figure(self, tree):
        assert sorted(_names(tree)) == sorted(FIGURE)
        assert tree.is_tree()

    def test_root_children(self, tree):
        names = _names(tree)
        assert names[tree.root] == "S0"
        assert {names[c] for c in tree.children(tree.root)} == {"S1", "S2", "S3", "S4", "S5", "S6", "S8"}

    def test_second_level(self, tree):
        names = _names(tree)
        s1 = names.index("S1")
        assert {names[c] for c in tree.children(s1)} == {"S7", "S9", "S10", "S11"}
        assert all(not tree.children(names.index(n)) for n in ("S2", "S3", "S4", "S5", "S6", "S8"))

    def test_breadth_first_order(self, tree):
        assert _names(tree) == ["S0", "S1", "S2", "S3", "S4", "S5", "S6", "S8", "S7", "S9", "S10", "S11"]

    def test_edges_are_quotients(self, tree):
        for p, c in tree.edges:
            assert equals(quotient_gaps(tree.vertices[c], 2), tree.vertices[p])

    def test_path_to_root(self, tree):
        s11 = _names(tree).index("S11")
        assert tree.path_to_root(s11) == [s11, 1, 0]

    def test_variety_restricts_tree(self, star_cone, order):
        small = build_tree(star_cone, order, 2, (4, 2), variety=lambda t: len(t.gaps) <= 1)
        assert [v.sorted_gaps() for v in small.vertices] == [[], [(2, 1)], [(3, 1)], [(4, 1)]]

    def test_divisor_one_is_a_single_vertex(self, star_cone, order):
        assert len(build_tree(star_cone, order, 1, (4, 2)).vertices) == 1

    def test_bound_outside_cone(self, star_cone, order):
        with pytest.raises(PreconditionError):
            build_tree(star_cone, order, 2, (4, 0))


class TestExport:
    """DOT and JSON output"""

    def test_dot(self, tree):
        dot = export_graph(tree, GraphFormat.DOT)
        assert dot.startswith("digraph covers {")
        assert '\t"S0" -> "S1";' in dot
        assert '"S11" [label="S11 = C \\\\ {(2,1), (3,1), (4,1), (4,2)}", shape = box];' in dot
        assert dot.count("->") == 11
        assert dot == export_graph(tree, GraphFormat.DOT)

    def test_json_round_trip(self, tree):
        text = export_graph(tree, GraphFormat.JSON)
        assert json.loads(text)["d"] == 2
        again = cover_tree_from_json(text)
        assert tree_to_document(again) == tree_to_document(tree)

    def test_malformed_json(self):
        with pytest.raises(SchemaError):
            cover_tree_from_json("{not json")

    def test_cycle_rejected(self, tree):
        doc = tree_to_document(tree)
        doc["edges"] = [[1, 2], [2, 1]] + doc["edges"][2:]
        with pytest.raises(SchemaError):
            cover_tree_from_json(json.dumps(doc))
