"""
Tests for the semigroup models.
"""

import pytest
from pydantic import ValidationError

from semicovers.errors import DimensionMismatchError, GapOutsideConeError
from semicovers.semigroup.models import CSemigroup, GeneratedSemigroup


class TestCSemigroup:
    """Cone-and-gaps representation"""

    def test_membership(self, sstar):
        assert (4, 1) in sstar
        assert (2, 1) not in sstar
        assert (1, 0) not in sstar
        assert (0, 0) in sstar

    def test_gap_outside_cone(self, star_cone):
        with pytest.raises(GapOutsideConeError) as exc:
            CSemigroup(cone=star_cone, gaps=frozenset({(1, 0)}))
        assert exc.value.details == {"gap": [1, 0]}

    def test_gap_dimension(self, star_cone):
        with pytest.raises(DimensionMismatchError):
            CSemigroup(cone=star_cone, gaps=frozenset({(2, 1, 0)}))

    def test_canonical_form(self, sstar):
        assert sstar.canonical() == {
            "cone": {"rays": [[4, 1], [9, 5]]},
            "gaps": [[2, 1], [3, 1]],
            "order": {"kind": "graded-then-revcoordlex", "perm": []},
        }

    def test_with_gaps_keeps_cone_and_order(self, sstar):
        t = sstar.with_gaps([(2, 1)])
        assert t.cone == sstar.cone
        assert t.order == sstar.order
        assert t.sorted_gaps() == [(2, 1)]

    def test_equal_gap_sets_are_equal(self, sstar):
        assert sstar.with_gaps([(3, 1), (2, 1)]) == sstar
        assert sstar.with_gaps([(3, 1), (2, 1)]).canonical_key() == sstar.canonical_key()


class TestGeneratedSemigroup:
    """Generator-list representation"""

    def test_generators_deduplicated_and_sorted(self, generated):
        assert generated(5, 3, 3).generators == ((3,), (5,))

    def test_membership(self, generated):
        s = generated(3, 5)
        assert (8,) in s
        assert (7,) not in s

    def test_zero_generator_rejected(self):
        with pytest.raises(ValidationError):
            GeneratedSemigroup(generators=((0, 0), (1, 0)))

    def test_mixed_dimensions_rejected(self):
        with pytest.raises(ValidationError):
            GeneratedSemigroup(generators=((1, 0), (1,)))
