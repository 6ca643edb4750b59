import pytest
from hypothesis import given, settings

from app.core.decomposition import (
    PathDecomposition,
    TreeDecomposition,
    goodness,
    is_outerplanar,
    outerplanar_dual_decomposition,
    rooted_tree_decomposition,
    verify_tree_decomposition,
)
from app.core.errors import InvalidDecompositionError, InvalidParameterError
from app.core.generators import complete, cycle, grid, outerplanar_triangulation, path
from app.core.graph import Graph
from strategies import trees


class TestGoodness:
    def test_single_vertex(self):
        g = Graph.from_edges(1, [])
        report = goodness(g, rooted_tree_decomposition(g))
        assert (report.width, report.subtree_pathwidth, report.witness_vertex) == (0, 0, 0)

    def test_empty_graph(self):
        g = Graph.from_edges(0, [])
        report = goodness(g, TreeDecomposition.from_bags(Graph.from_edges(0, []), []))
        assert report.witness_vertex is None
        assert report.to_dict() == {"width": -1, "subtree_pathwidth": 0, "witness_vertex": None}

    def test_path_decomposition_of_cycle(self):
        g = cycle(6)
        td = PathDecomposition.from_bags([0, i, i + 1] for i in range(1, 5)).as_tree_decomposition()
        report = goodness(g, td)
        assert report.width == 2
        # Vertex 0 lies in every bag, whose nodes form a path.
        assert report.subtree_pathwidth == 1
        assert report.witness_vertex == 0

    def test_star_index_tree(self):
        g = complete(3)
        tree = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        td = TreeDecomposition.from_bags(tree, [[0, 1, 2], [0], [1], [2]])
        report = goodness(g, td)
        assert (report.width, report.subtree_pathwidth) == (2, 1)

    def test_invalid_decomposition(self):
        td = rooted_tree_decomposition(path(3))
        with pytest.raises(InvalidDecompositionError, match="edge 0-2"):
            goodness(cycle(3), td)


class TestRootedTreeDecomposition:
    def test_bags_hold_vertex_and_parent(self):
        td = rooted_tree_decomposition(path(4), root=1)
        assert td.bags == ((0, 1), (1,), (1, 2), (2, 3))

    def test_rejects_non_tree(self):
        with pytest.raises(InvalidParameterError, match="needs a tree"):
            rooted_tree_decomposition(cycle(4))

    def test_rejects_bad_root(self):
        with pytest.raises(InvalidParameterError, match="root"):
            rooted_tree_decomposition(path(3), root=3)


class TestOuterplanarDual:
    @pytest.mark.parametrize("seed", range(8))
    def test_triangulation_is_two_one_good(self, seed):
        g = outerplanar_triangulation(12, seed=seed)
        td = outerplanar_dual_decomposition(g)
        assert verify_tree_decomposition(g, td)
        assert td.tree.n == g.n - 2
        report = goodness(g, td)
        assert (report.width, report.subtree_pathwidth) == (2, 1)

    def test_triangle(self):
        td = outerplanar_dual_decomposition(complete(3))
        assert td.bags == ((0, 1, 2),)
        assert goodness(complete(3), td).subtree_pathwidth == 0

    @pytest.mark.parametrize("g", [complete(4), cycle(5), grid(2, 3)])
    def test_rejects_non_triangulations(self, g):
        with pytest.raises(InvalidParameterError, match="Not a polygon triangulation"):
            outerplanar_dual_decomposition(g)

    def test_is_outerplanar(self):
        assert is_outerplanar(cycle(7))
        assert not is_outerplanar(complete(4))
        assert not is_outerplanar(Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]))


class TestGoodnessProperties:
    @given(trees(min_nodes=2, max_nodes=25))
    @settings(max_examples=100, deadline=None)
    def test_trees_are_one_one_good(self, t):
        report = goodness(t, rooted_tree_decomposition(t))
        assert (report.width, report.subtree_pathwidth) == (1, 1)
