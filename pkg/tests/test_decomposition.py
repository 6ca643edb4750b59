import pytest

from app.core.decomposition import (
    PathDecomposition,
    TreeDecomposition,
    layered_width,
    subtree_of,
    union_of_bags,
    verify_path_decomposition,
    verify_tree_decomposition,
    width,
)
from app.core.errors import InvalidDecompositionError, InvalidParameterError
from app.core.generators import cycle, grid, path
from app.core.graph import Graph, Layering, bfs_layering


def _cycle_pd(n):
    return PathDecomposition.from_bags([0, i, i + 1] for i in range(1, n - 1))


class TestVerifyTreeDecomposition:
    def test_star_tree_decomposition_of_cycle(self):
        tree = Graph.from_edges(3, [(0, 1), (0, 2)])
        td = TreeDecomposition.from_bags(tree, [[0, 2], [0, 1, 2], [0, 2, 3]])
        assert verify_tree_decomposition(cycle(4), td)
        assert width(td) == 2

    def test_uncovered_edge_is_named(self):
        tree = Graph.from_edges(2, [(0, 1)])
        td = TreeDecomposition.from_bags(tree, [[0, 1], [1, 2]])
        result = verify_tree_decomposition(cycle(3), td)
        assert result.diagnostic == "edge 0-2 is not covered by any bag"

    def test_disconnected_occurrences(self):
        tree = Graph.from_edges(3, [(0, 1), (1, 2)])
        td = TreeDecomposition.from_bags(tree, [[0, 1], [1, 2], [0, 2]])
        result = verify_tree_decomposition(cycle(3), td)
        assert "vertex 0 do not induce a connected subtree" in result.diagnostic

    def test_non_tree_index(self):
        tree = Graph.from_edges(3, [(0, 1)])
        td = TreeDecomposition.from_bags(tree, [[0, 1], [1], [1]])
        assert verify_tree_decomposition(path(2), td).diagnostic == "decomposition tree is not a tree"

    def test_edge_to_vertex_in_no_bag(self):
        td = TreeDecomposition.from_bags(Graph.from_edges(1, []), [[0, 1]])
        assert verify_tree_decomposition(path(3), td).diagnostic == "edge 1-2 is not covered by any bag"

    def test_bag_count_mismatch(self):
        with pytest.raises(InvalidDecompositionError):
            TreeDecomposition.from_bags(Graph.from_edges(2, [(0, 1)]), [[0]])

    def test_mapping_bags(self):
        td = TreeDecomposition.from_bags(Graph.from_edges(2, [(0, 1)]), {1: [2, 1], 0: [0, 1]})
        assert td.bags == ((0, 1), (1, 2))
        assert td.occurrences() == {0: [0], 1: [0, 1], 2: [1]}


class TestVerifyPathDecomposition:
    @pytest.mark.parametrize("n", [3, 4, 9])
    def test_cycle_sweep(self, n):
        assert verify_path_decomposition(cycle(n), _cycle_pd(n))
        assert width(_cycle_pd(n)) == 2

    def test_non_contiguous_occurrence(self):
        pd = PathDecomposition.from_bags([[0, 1], [1, 2], [0, 3], [2, 3]])
        result = verify_path_decomposition(path(4), pd)
        assert not result
        assert result.diagnostic == "bags containing vertex 0 are not contiguous (first 0, last 2)"

    def test_empty_bag_breaks_contiguity(self):
        pd = PathDecomposition.from_bags([[0, 1], [], [1, 2]])
        assert not verify_path_decomposition(path(3), pd)

    def test_outer_empty_bags_are_ignored(self):
        pd = PathDecomposition.from_bags([[], [0, 1], [1, 2], []])
        assert verify_path_decomposition(path(3), pd)

    def test_unknown_vertex(self):
        pd = PathDecomposition.from_bags([[0, 1, 5]])
        assert "unknown vertex 5" in verify_path_decomposition(path(2), pd).diagnostic

    def test_as_tree_decomposition(self):
        td = _cycle_pd(5).as_tree_decomposition()
        assert td.tree.sorted_edges() == [(0, 1), (1, 2)]
        assert verify_tree_decomposition(cycle(5), td)

    def test_relabel_and_restrict(self):
        pd = PathDecomposition.from_bags([[0, 1], [1, 2]])
        assert pd.relabel({0: 5, 1: 3, 2: 4}).bags == ((3, 5), (3, 4))
        assert pd.restrict([1]).bags == ((1,), (1,))


class TestWidths:
    def test_width_of_empty_decomposition(self):
        assert width(PathDecomposition(())) == -1

    def test_grid_column_sweep_has_layered_width_two(self):
        r, c = 4, 5
        g = grid(r, c)
        bags = []
        for j in range(c - 1):
            for i in range(r):
                # Advance one row at a time from column j to column j+1.
                bags.append(
                    [k * c + j for k in range(i, r)] + [k * c + j + 1 for k in range(0, i + 1)]
                )
        pd = PathDecomposition.from_bags(bags)
        assert verify_path_decomposition(g, pd)
        rows = Layering.from_layers([[i * c + j for j in range(c)] for i in range(r)])
        assert layered_width(pd, rows) == 2

    def test_cycle_sweep_from_bfs_root_has_layered_width_one(self):
        g = cycle(6)
        layering = bfs_layering(g, 0)
        assert layered_width(_cycle_pd(6), layering) == 1

    def test_layered_width_missing_vertex(self):
        with pytest.raises(InvalidDecompositionError):
            layered_width(PathDecomposition.from_bags([[0, 1]]), Layering.from_layers([[0]]))


class TestSubtrees:
    def test_subtree_of_keeps_node_labels(self):
        tree = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        td = TreeDecomposition.from_bags(tree, [[0], [0, 1], [1, 2], [2]])
        sub = subtree_of(td, 1)
        assert sub.labels == (1, 2)
        assert sub.is_tree()

    def test_subtree_of_absent_vertex(self):
        td = TreeDecomposition.from_bags(Graph.from_edges(1, []), [[0]])
        with pytest.raises(InvalidParameterError):
            subtree_of(td, 3)

    def test_union_of_bags(self):
        td = _cycle_pd(5).as_tree_decomposition()
        assert union_of_bags(td, [0, 2]) == {0, 1, 2, 3, 4}
