"""
Tests for the brute-force reference implementations.
"""

import pytest

from semicovers.config import get_settings
from semicovers.covers.dd import enumerate_Dd
from semicovers.errors import GuardCeilingError
from semicovers.hilbert import DiophantineSystem
from semicovers.oracle import brute_Dd, brute_hilbert, brute_member, extreme_solutions, hilbert_search_box


class TestBruteMember:
    """Multiplicity search"""

    def test_numerical(self):
        assert brute_member([(3,), (5,)], (8,))
        assert not brute_member([(3,), (5,)], (7,))

    def test_plane(self, star_generators):
        assert brute_member(star_generators, (13, 7))
        assert not brute_member(star_generators, (3, 1))


class TestBruteHilbert:
    """Exhaustive minimal solutions"""

    def test_box(self):
        system = DiophantineSystem(matrix=[[1, 1, -2]])
        assert brute_hilbert(system, (2, 2, 2)) == [(0, 2, 1), (1, 1, 1), (2, 0, 1)]

    def test_extremal_rays(self):
        system = DiophantineSystem(matrix=[[1, 1, -2]])
        assert extreme_solutions(system) == [(0, 2, 1), (2, 0, 1)]
        assert hilbert_search_box(system) == (2, 2, 2)
        assert brute_hilbert(system) == [(0, 2, 1), (1, 1, 1), (2, 0, 1)]

    def test_zero_column_is_a_ray(self):
        assert extreme_solutions(DiophantineSystem(matrix=[[0, 1, -1]])) == [(1, 0, 0), (0, 1, 1)]

    def test_no_solutions(self):
        system = DiophantineSystem(matrix=[[1, 2]])
        assert hilbert_search_box(system) == (0, 0)
        assert brute_hilbert(system) == []

    def test_default_box_reaches_past_a_truncated_one(self):
        """Test that x = 2y needs a box reaching (2, 1)"""
        system = DiophantineSystem(matrix=[[1, -2]])
        assert brute_hilbert(system, (1, 1)) == []
        assert brute_hilbert(system) == [(2, 1)]

    def test_two_equations(self):
        """Test x + y = z and y = w"""
        system = DiophantineSystem(matrix=[[1, 1, -1, 0], [0, 1, 0, -1]])
        assert brute_hilbert(system) == [(1, 0, 1, 0), (0, 1, 1, 1)]


class TestBruteDd:
    """Every gap subset below f"""

    def test_naturals_by_two(self, numerical):
        s = numerical([])
        assert [t.sorted_gaps() for t in brute_Dd(s, 2, (3,))] == [[], [(1,)], [(1,), (3,)]]

    @pytest.mark.parametrize("d,f", [(2, (7,)), (3, (10,)), (2, (9,))])
    def test_agrees_with_enumeration(self, numerical, d, f):
        s = numerical([1, 2])
        fast = [t.canonical_key() for t in enumerate_Dd(s, d, f)]
        assert fast == [t.canonical_key() for t in brute_Dd(s, d, f)]

    def test_agrees_in_the_plane(self, sstar):
        fast = [t.canonical_key() for t in enumerate_Dd(sstar, 2, (6, 2))]
        assert fast == [t.canonical_key() for t in brute_Dd(sstar, 2, (6, 2))]

    @pytest.mark.slow
    @pytest.mark.parametrize("d", [2, 3])
    def test_agrees_on_toy_numerical(self, numerical, d):
        """Test every bound up to 10 over small numerical semigroups"""
        for gaps in ([], [1], [1, 2], [1, 3], [1, 2, 3], [1, 2, 4]):
            s = numerical(gaps)
            for top in range(max(d * max(gaps, default=0), 1), 11):
                fast = [t.canonical_key() for t in enumerate_Dd(s, d, (top,))]
                assert fast == [t.canonical_key() for t in brute_Dd(s, d, (top,))], (gaps, top)

    @pytest.mark.slow
    @pytest.mark.parametrize("d", [2, 3])
    def test_agrees_on_fourteen_candidates(self, numerical, d):
        s = numerical([1, 2])
        fast = [t.canonical_key() for t in enumerate_Dd(s, d, (14,))]
        assert fast == [t.canonical_key() for t in brute_Dd(s, d, (14,))]

    def test_candidate_limit(self, monkeypatch, numerical):
        monkeypatch.setenv("SEMICOVERS_ORACLE_MAX_CANDIDATES", "3")
        get_settings.cache_clear()
        with pytest.raises(GuardCeilingError):
            brute_Dd(numerical([]), 2, (5,))
