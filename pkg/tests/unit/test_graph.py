"""Unit tests for the labeled graph type."""

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starjoin.errors import InputError
from starjoin.graph import INFINITE, Base, Graph, Named, Tagged, complete_graph, cycle_graph, path_graph
from starjoin.graph.constructions import random_connected_graph


def to_networkx(graph: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(graph.vertices)
    result.add_edges_from(graph.edges())
    return result


def two_disjoint_edges() -> Graph:
    vertices = [Base(i) for i in range(4)]
    return Graph(vertices, [(Base(0), Base(1)), (Base(2), Base(3))])


class TestGraphConstruction:
    """Test cases for building graphs."""

    def test_counts(self) -> None:
        """Test order, size, length and membership."""
        graph = complete_graph(4)
        assert graph.order == 4
        assert graph.size == 6
        assert len(graph) == 4
        assert Base(3) in graph
        assert Base(4) not in graph

    def test_duplicate_edges_merge(self) -> None:
        """Test that an edge given twice in either direction is stored once."""
        graph = Graph([Base(0), Base(1)], [(Base(0), Base(1)), (Base(1), Base(0))])
        assert graph.size == 1

    def test_duplicate_labels_rejected(self) -> None:
        """Test that vertex labels must be distinct."""
        with pytest.raises(InputError, match="Duplicate"):
            Graph([Base(0), Base(0)])

    def test_loop_rejected(self) -> None:
        """Test that loops are rejected."""
        with pytest.raises(InputError, match="Loop"):
            Graph([Base(0)], [(Base(0), Base(0))])

    def test_edge_to_unknown_vertex_rejected(self) -> None:
        """Test that edges may only join known vertices."""
        with pytest.raises(InputError):
            Graph([Base(0)], [(Base(0), Base(1))])

    def test_index_edges_out_of_range(self) -> None:
        """Test that index edges must stay within the vertex count."""
        with pytest.raises(InputError, match="outside"):
            Graph.from_index_edges([Base(0), Base(1)], [(0, 2)])

    def test_equality_is_labeled(self) -> None:
        """Equal structure under different labels is not equality."""
        assert complete_graph(3) == complete_graph(3)
        assert complete_graph(3) != complete_graph(3).relabel(lambda v: Tagged(0, v))

    def test_relabel_keeps_order_and_edges(self) -> None:
        """Test that relabeling keeps vertex order and adjacency."""
        graph = path_graph(3).relabel({Base(0): Named("a"), Base(1): Named("b"), Base(2): Named("c")})
        assert graph.vertices == (Named("a"), Named("b"), Named("c"))
        assert graph.has_edge(Named("a"), Named("b"))
        assert not graph.has_edge(Named("a"), Named("c"))


class TestDistances:
    """Test cases for distances and balls."""

    def test_path_distance(self) -> None:
        """Test the distance between the ends of P3."""
        assert path_graph(3).distance(Base(0), Base(2)) == 2

    def test_distance_to_self(self) -> None:
        """Test that every vertex is at distance 0 from itself."""
        graph = cycle_graph(5)
        for v in graph.vertices:
            assert graph.distance(v, v) == 0

    def test_distance_across_components(self) -> None:
        """Test that vertices in different components are infinitely far apart."""
        assert two_disjoint_edges().distance(Base(0), Base(2)) == INFINITE

    def test_distance_unknown_vertex(self) -> None:
        """Test that distances to unknown vertices are input errors."""
        with pytest.raises(InputError):
            path_graph(3).distance(Base(0), Base(9))

    def test_set_distance(self) -> None:
        """Test distances between vertex sets, including overlapping and disconnected ones."""
        graph = path_graph(6)
        assert graph.set_distance([Base(0), Base(1)], [Base(4), Base(5)]) == 3
        assert graph.set_distance([Base(2)], [Base(2), Base(3)]) == 0
        assert two_disjoint_edges().set_distance([Base(0)], [Base(3)]) == INFINITE

    def test_set_distance_needs_nonempty_sets(self) -> None:
        """Test that an empty vertex set is rejected."""
        with pytest.raises(InputError):
            path_graph(3).set_distance([], [Base(0)])

    def test_ball_in_complete_graph(self) -> None:
        """Test that the radius-1 ball of K5 is K5."""
        assert complete_graph(5).ball(Base(0), 1) == complete_graph(5)

    def test_ball_in_cycle_is_path(self) -> None:
        """Test that the radius-2 ball of C7 is P5."""
        ball = cycle_graph(7).ball(Base(0), 2)
        assert set(ball.vertices) == {Base(5), Base(6), Base(0), Base(1), Base(2)}
        assert ball.size == 4
        assert nx.is_isomorphic(to_networkx(ball), nx.path_graph(5))

    def test_ball_of_radius_zero(self) -> None:
        """Test that the radius-0 ball is the center alone."""
        ball = cycle_graph(7).ball(Base(3), 0)
        assert ball.vertices == (Base(3),)
        assert ball.size == 0

    def test_negative_radius(self) -> None:
        """Test that a negative radius is rejected."""
        with pytest.raises(InputError):
            cycle_graph(5).ball(Base(0), -1)

    def test_ball_unknown_vertex(self) -> None:
        """Test that a ball around a missing vertex is an input error."""
        with pytest.raises(InputError):
            cycle_graph(5).ball(Base(5), 1)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=2, max_value=12), st.integers(min_value=0, max_value=10**6))
    def test_distances_match_networkx(self, n: int, seed: int) -> None:
        """Test BFS distances against networkx on random graphs."""
        graph = random_connected_graph(random.Random(seed), n, 0.2)
        lengths = dict(nx.all_pairs_shortest_path_length(to_networkx(graph)))
        for u in graph.vertices:
            for v in graph.vertices:
                assert graph.distance(u, v) == lengths[u][v]


class TestNeighborhoods:
    """Test cases for neighborhoods and induced subgraphs."""

    def test_neighbor_set_complete(self) -> None:
        """Test a neighborhood in K4."""
        assert complete_graph(4).neighbor_set(Base(0)) == {Base(1), Base(2), Base(3)}

    def test_neighbor_set_cycle(self) -> None:
        """Test a neighborhood in C5."""
        assert cycle_graph(5).neighbor_set(Base(0)) == {Base(1), Base(4)}

    def test_neighbor_set_isolated(self) -> None:
        """Test that an isolated vertex has an empty neighborhood."""
        assert Graph([Base(0)]).neighbor_set(Base(0)) == frozenset()

    def test_neighbor_set_unknown_vertex(self) -> None:
        """Test that unknown vertices are input errors."""
        with pytest.raises(InputError):
            complete_graph(3).neighbor_set(Base(3))

    def test_degree(self) -> None:
        """Test degrees of the middle and an end of P3."""
        assert path_graph(3).degree(Base(1)) == 2
        assert path_graph(3).degree(Base(0)) == 1

    def test_induced_on_everything(self) -> None:
        """Test that inducing on every vertex gives the graph back."""
        graph = cycle_graph(6)
        assert graph.induced_subgraph(graph.vertices) == graph

    def test_induced_triangle_of_k4(self) -> None:
        """Test that three vertices of K4 induce K3."""
        assert complete_graph(4).induced_subgraph([Base(0), Base(1), Base(2)]) == complete_graph(3)

    def test_induced_alternating_cycle_vertices(self) -> None:
        """Test that alternate vertices of C6 induce no edges."""
        sub = cycle_graph(6).induced_subgraph([Base(0), Base(2), Base(4)])
        assert sub.order == 3
        assert sub.size == 0

    def test_induced_subset_must_be_inside(self) -> None:
        """Test that an induced subgraph needs known vertices."""
        with pytest.raises(InputError):
            cycle_graph(6).induced_subgraph([Base(0), Base(6)])

    def test_components(self) -> None:
        """Test the components of two disjoint edges."""
        components = two_disjoint_edges().components()
        assert components == [frozenset({Base(0), Base(1)}), frozenset({Base(2), Base(3)})]


class TestStructure:
    """Test cases for odd girth and isolated vertices."""

    @pytest.mark.parametrize(
        ("graph", "expected"),
        [(cycle_graph(5), 5), (cycle_graph(6), INFINITE), (complete_graph(4), 3), (cycle_graph(9), 9)],
    )
    def test_odd_girth(self, graph: Graph, expected: float) -> None:
        """Test the odd girth of cycles and a clique."""
        assert graph.odd_girth() == expected

    def test_has_isolated_vertices(self) -> None:
        """Test detecting and listing isolated vertices."""
        assert complete_graph(1).has_isolated_vertices()
        assert not complete_graph(2).has_isolated_vertices()
        edge_plus_vertex = Graph([Base(0), Base(1), Base(2)], [(Base(0), Base(1))])
        assert edge_plus_vertex.has_isolated_vertices()
        assert edge_plus_vertex.isolated_vertices() == [Base(2)]

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=2, max_value=10), st.integers(min_value=0, max_value=10**6))
    def test_odd_girth_detects_bipartite(self, n: int, seed: int) -> None:
        """Test that infinite odd girth matches networkx bipartiteness."""
        graph = random_connected_graph(random.Random(seed), n, 0.15)
        assert (graph.odd_girth() == INFINITE) == nx.is_bipartite(to_networkx(graph))
