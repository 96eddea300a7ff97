"""Unit tests for the local chromatic number and the KST checker."""

import random

import pytest

from starjoin.coloring import (
    ColoringStatus,
    KstVerdict,
    SearchBudget,
    kst_check,
    kst_size_threshold,
    local_chromatic,
)
from starjoin.errors import InputError
from starjoin.graph import TowerParams, complete_graph, cycle_graph, star_join_quotient, tower
from starjoin.graph.constructions import random_connected_graph

UNLIMITED = SearchBudget.unlimited()


class TestLocalChromatic:
    """Test cases for lchi_r."""

    @pytest.mark.parametrize("c", [3, 4, 5])
    def test_complete_graph(self, c: int) -> None:
        """Test that K_c is its own single ball."""
        result = local_chromatic(complete_graph(c), 1, UNLIMITED)
        assert result.status is ColoringStatus.EXACT
        assert result.value == c
        assert result.distinct_balls == 1

    @pytest.mark.parametrize("r", [1, 2])
    def test_odd_cycle_balls_are_paths(self, r: int) -> None:
        """Test that small balls of C7 are paths and 2-colorable."""
        result = local_chromatic(cycle_graph(7), r, UNLIMITED)
        assert result.value == 2
        assert result.distinct_balls == 7

    def test_ball_covering_odd_cycle(self) -> None:
        """Test that a ball covering C7 needs three colors."""
        result = local_chromatic(cycle_graph(7), 3, UNLIMITED)
        assert result.value == 3
        assert result.distinct_balls == 1

    def test_tower(self) -> None:
        """Test that balls of G_2 need only c = 3 colors."""
        result = local_chromatic(tower(TowerParams(n=2, c=3, r=1)), 1, UNLIMITED)
        assert result.status is ColoringStatus.EXACT
        assert result.value == 3
        assert result.worst_center is not None

    def test_star_join_of_cycle_and_triangle(self) -> None:
        """Test lchi_1 of C5 *_2 K3."""
        join = star_join_quotient(cycle_graph(5), complete_graph(3), 2)
        assert local_chromatic(join, 1, UNLIMITED).value == 3

    def test_radius_must_be_positive(self) -> None:
        """Test that r must be at least 1."""
        with pytest.raises(InputError):
            local_chromatic(complete_graph(3), 0, UNLIMITED)

    def test_budget_exhaustion_leaves_bounds(self) -> None:
        """Test that running out of budget keeps valid bounds."""
        result = local_chromatic(cycle_graph(7), 3, SearchBudget(max_nodes=1))
        assert result.status is ColoringStatus.EXHAUSTED
        assert result.value is None
        assert result.lower == 2
        assert result.upper == 3

    def test_to_dict(self) -> None:
        """Test the serialized form of a local result."""
        data = local_chromatic(complete_graph(3), 1, UNLIMITED).to_dict()
        assert data["status"] == "exact"
        assert data["worst_center"] == "0"
        assert data["radius"] == 1


class TestKstThreshold:
    """Test cases for the size premise."""

    @pytest.mark.parametrize(("r", "n", "expected"), [(6, 1, 3), (1, 2, 0), (2, 1, 1), (8, 2, 4), (12, 3, 8)])
    def test_threshold(self, r: int, n: int, expected: int) -> None:
        """Test floor(r/(2n))^n on a few values."""
        assert kst_size_threshold(r, n) == expected

    def test_invalid(self) -> None:
        """Test that nonpositive radii are rejected."""
        with pytest.raises(InputError):
            kst_size_threshold(0, 1)
        with pytest.raises(InputError):
            kst_size_threshold(1, 0)


class TestKstCheck:
    """Test cases for the KST consistency checker."""

    def test_triangle_consistent(self) -> None:
        """Test that K3 satisfies the implication with r = 6, n = 1, c = 3."""
        report = kst_check(complete_graph(3), 6, 1, 3, UNLIMITED)
        assert report.verdict is KstVerdict.CONSISTENT
        assert report.size_threshold == 3
        assert report.chromatic_bound == 3

    def test_tower_escapes_size_premise(self) -> None:
        """Test that G_2 is too large for the size premise."""
        report = kst_check(tower(TowerParams(n=2, c=3, r=1)), 1, 2, 3, UNLIMITED)
        assert report.verdict is KstVerdict.PREMISE_FAILS
        assert report.order == 24
        assert report.size_threshold == 0
        assert report.local is None

    def test_cycle_escapes_size_premise(self) -> None:
        """Test that C5 is too large for the size premise at r = 2."""
        assert kst_check(cycle_graph(5), 2, 1, 3, UNLIMITED).verdict is KstVerdict.PREMISE_FAILS

    def test_local_premise_fails(self) -> None:
        """Test that K4 fails the local premise with c = 3."""
        report = kst_check(complete_graph(4), 8, 1, 3, UNLIMITED)
        assert report.verdict is KstVerdict.PREMISE_FAILS
        assert report.local is not None
        assert report.local.lower == 4

    def test_to_dict(self) -> None:
        """Test the serialized form of a KST report."""
        data = kst_check(complete_graph(3), 6, 1, 3, UNLIMITED).to_dict()
        assert data["verdict"] == "consistent"
        assert data["local"]["lower"] == 3

    def test_invalid_palette(self) -> None:
        """Test that c must be at least 1."""
        with pytest.raises(InputError):
            kst_check(complete_graph(3), 6, 1, 0, UNLIMITED)

    def test_single_edge_consistent(self) -> None:
        """Test that K2 satisfies the implication with c = 2."""
        assert kst_check(complete_graph(2), 4, 1, 2, UNLIMITED).verdict is KstVerdict.CONSISTENT

    def test_never_violated_on_random_graphs(self) -> None:
        """Test that 100 seeded graphs with random (r, n, c) never contradict the bound."""
        rng = random.Random(8128)
        verdicts = set()
        for _ in range(100):
            graph = random_connected_graph(rng, rng.randint(2, 8), rng.random())
            r, n, c = rng.randint(2, 12), rng.randint(1, 3), rng.randint(1, 5)
            report = kst_check(graph, r, n, c, UNLIMITED)
            assert report.verdict is not KstVerdict.VIOLATION, (graph, r, n, c)
            verdicts.add(report.verdict)
        assert KstVerdict.CONSISTENT in verdicts
