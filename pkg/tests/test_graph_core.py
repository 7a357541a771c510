import networkx as nx
import pytest

from unit_dimension.errors import GraphStructureError
from unit_dimension.families import complete_graph, cycle_graph, path_graph
from unit_dimension.graph_core import (
    Bipartition,
    Graph,
    Walk,
    bipartition_or_odd_walk,
    connected_components,
    contains_cycle,
    find_cycle,
    induced_subgraph,
    is_triangle_free,
    shortest_path,
)


class TestGraph:
    def test_from_edges_sorts_adjacency(self):
        g = Graph.from_edges(["a", "b", "c"], [(2, 0), (1, 0)])
        assert g.adjacency == ((1, 2), (0,), (0,))
        assert g.num_edges == 2
        assert g.edges() == [(0, 1), (0, 2)]

    def test_self_loop_is_rejected(self):
        with pytest.raises(GraphStructureError, match="self-loop"):
            Graph.from_edges(["a", "b"], [(0, 0)])

    def test_duplicate_edge_is_rejected(self):
        with pytest.raises(GraphStructureError, match="duplicate"):
            Graph.from_edges(["a", "b"], [(0, 1), (1, 0)])

    def test_asymmetric_adjacency_is_rejected(self):
        with pytest.raises(GraphStructureError, match="symmetric"):
            Graph(("a", "b"), ((1,), ()))

    def test_repeated_labels_are_rejected(self):
        with pytest.raises(GraphStructureError, match="unique"):
            Graph(("a", "a"), ((), ()))

    def test_from_labelled_edges_keeps_isolated_vertices(self):
        g = Graph.from_labelled_edges([("x", "y")], vertices=["z"])
        assert g.labels == ("z", "x", "y")
        assert g.degree(g.index_of("z")) == 0
        assert g.has_edge(g.index_of("x"), g.index_of("y"))

    def test_unknown_label(self, triangle):
        with pytest.raises(GraphStructureError, match="unknown vertex"):
            triangle.index_of("q")

    def test_has_edge_out_of_range(self, triangle):
        assert not triangle.has_edge(7, 0)

    def test_empty_graph_is_valid(self):
        g = Graph((), ())
        assert g.num_vertices == 0
        assert g.num_edges == 0


class TestBipartition:
    @pytest.mark.parametrize("n", [4, 6, 10])
    def test_even_cycle_is_two_coloured(self, n):
        g = cycle_graph(n)
        result = bipartition_or_odd_walk(g)
        assert isinstance(result, Bipartition)
        assert all(result.color[u] != result.color[v] for u, v in g.edges())
        assert result.num_components == 1

    @pytest.mark.parametrize("n", [3, 5, 9])
    def test_odd_cycle_gives_odd_closed_walk(self, n):
        g = cycle_graph(n)
        result = bipartition_or_odd_walk(g)
        assert isinstance(result, Walk)
        assert result.is_closed
        assert result.length % 2 == 1
        assert result.is_walk_in(g)

    def test_components_are_labelled_separately(self):
        g = Graph.from_edges(["a", "b", "c", "d"], [(0, 1), (2, 3)])
        result = bipartition_or_odd_walk(g)
        assert isinstance(result, Bipartition)
        assert result.component == (0, 0, 1, 1)
        assert connected_components(g) == (0, 0, 1, 1)

    def test_agrees_with_networkx(self, to_networkx, k4, mc10):
        for g in [k4, mc10, cycle_graph(8), path_graph(5)]:
            is_bipartite = isinstance(bipartition_or_odd_walk(g), Bipartition)
            assert is_bipartite == nx.is_bipartite(to_networkx(g))


class TestCycles:
    def test_forest_has_no_cycle(self):
        assert find_cycle(path_graph(6)) is None
        assert not contains_cycle(path_graph(6))

    def test_square_cycle(self, square):
        cycle = find_cycle(square)
        assert cycle == Walk((3, 0, 1, 2, 3))
        assert cycle.is_walk_in(square)

    @pytest.mark.parametrize("g", [complete_graph(5), cycle_graph(7)])
    def test_found_cycle_is_simple(self, g):
        cycle = find_cycle(g)
        assert cycle.is_closed and cycle.is_walk_in(g)
        assert len(set(cycle.vertices)) == cycle.length >= 3


class TestTraversals:
    def test_shortest_path(self):
        g = cycle_graph(6)
        path = shortest_path(g, 0, 3)
        assert path.length == 3
        assert path.vertices[0] == 0 and path.vertices[-1] == 3
        assert path.is_walk_in(g)

    def test_shortest_path_between_components(self):
        g = Graph.from_edges(["a", "b", "c"], [(0, 1)])
        assert shortest_path(g, 0, 2) is None

    def test_triangle_free(self, triangle, square):
        assert not is_triangle_free(triangle)
        assert is_triangle_free(square)

    def test_induced_subgraph(self, k4):
        sub = induced_subgraph(k4, [3, 1, 0])
        assert sub.labels == ("3", "1", "0")
        assert sub.num_edges == 3
