"""
Tests for the addition-compatible total orders.
"""

import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from semicovers.core.orders import Comparison, OrderKind, TotalOrderSpec, order_cmp, order_from_name
from semicovers.errors import SchemaError

ORDERS = [
    TotalOrderSpec(kind=OrderKind.GRADED_REVCOORDLEX),
    TotalOrderSpec(kind=OrderKind.GRADED_LEX),
    TotalOrderSpec(kind=OrderKind.LEX),
    TotalOrderSpec(kind=OrderKind.GRADED_LEX, perm=(1, 0)),
]

points = st.tuples(st.integers(0, 30), st.integers(0, 30))


class TestOrderKinds:
    """Tie-breaking of the three families"""

    def test_revcoordlex_prefers_last_coordinate(self):
        """Test that (8,4) is above (9,3) when the last coordinate breaks ties"""
        order = TotalOrderSpec(kind=OrderKind.GRADED_REVCOORDLEX)
        assert order_cmp(order, (8, 4), (9, 3)) == Comparison.GREATER

    def test_graded_lex_prefers_first_coordinate(self):
        order = TotalOrderSpec(kind=OrderKind.GRADED_LEX)
        assert order_cmp(order, (8, 4), (9, 3)) == Comparison.LESS

    def test_grading_dominates(self):
        order = TotalOrderSpec(kind=OrderKind.GRADED_LEX)
        assert order.less((9, 0), (0, 10))

    def test_lex_ignores_degree(self):
        order = TotalOrderSpec(kind=OrderKind.LEX)
        assert order.less((0, 10), (1, 0))

    def test_permutation(self):
        """Test that perm=(1,0) makes the second coordinate lead"""
        order = TotalOrderSpec(kind=OrderKind.LEX, perm=(1, 0))
        assert order.less((1, 1), (0, 2))
        assert order.leading_index(2) == 1

    def test_invalid_permutation(self):
        with pytest.raises(ValidationError):
            TotalOrderSpec(kind=OrderKind.LEX, perm=(0, 0))

    def test_order_from_name(self):
        assert order_from_name("lex").kind == OrderKind.LEX
        with pytest.raises(SchemaError):
            order_from_name("degrevlex")

    def test_maximum_and_sort(self):
        order = TotalOrderSpec()
        pts = [(3, 1), (2, 1), (4, 1), (4, 2)]
        assert order.maximum(pts) == (4, 2)
        assert order.sort(pts) == [(2, 1), (3, 1), (4, 1), (4, 2)]
        assert order.maximum([]) is None


class TestOrderProperties:
    """Laws every order must satisfy"""

    @pytest.mark.parametrize("order", ORDERS, ids=lambda o: f"{o.kind.value}{list(o.perm)}")
    @given(a=points, b=points, c=points)
    def test_compatible_with_addition(self, order, a, b, c):
        """Test that a < b implies a + c < b + c"""
        ac = tuple(x + z for x, z in zip(a, c))
        bc = tuple(y + z for y, z in zip(b, c))
        assert order.compare(a, b) == order.compare(ac, bc)

    @pytest.mark.parametrize("order", ORDERS, ids=lambda o: f"{o.kind.value}{list(o.perm)}")
    @given(a=points, b=points)
    def test_total_with_zero_minimum(self, order, a, b):
        assert (order.compare(a, b) == 0) == (a == b)
        assert order.leq((0, 0), a)
