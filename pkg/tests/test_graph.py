import networkx as nx
import pytest
from hypothesis import given, settings

from app.core.errors import GraphFormatError, InvalidParameterError, NotConnectedError
from app.core.generators import cycle, grid, path
from app.core.graph import Graph, Layering, bfs_layering, blocks, component_layering, is_layering
from strategies import graphs


class TestGraph:
    def test_from_edges_normalizes_orientation(self):
        g = Graph.from_edges(3, [(1, 0), (2, 1)])
        assert g.sorted_edges() == [(0, 1), (1, 2)]
        assert g.neighbors(1) == (0, 2)
        assert g.m == 2

    @pytest.mark.parametrize(
        "edges, message",
        [
            ([(0, 0)], "Self-loop"),
            ([(0, 1), (1, 0)], "Parallel edge"),
            ([(0, 3)], "outside"),
        ],
    )
    def test_from_edges_rejects_bad_edges(self, edges, message):
        with pytest.raises(GraphFormatError, match=message):
            Graph.from_edges(3, edges)

    def test_induced_keeps_parent_labels(self):
        g = cycle(6)
        sub = g.induced([5, 0, 1])
        assert sub.n == 3
        assert sub.labels == (0, 1, 5)
        assert sub.sorted_edges() == [(0, 1), (0, 2)]
        assert sub.index() == {0: 0, 1: 1, 5: 2}

    def test_induced_rejects_unknown_vertex(self):
        with pytest.raises(InvalidParameterError):
            path(3).induced([0, 7])

    def test_with_edges_adds_pairs(self):
        g = path(4).with_edges([(3, 0), (1, 1)])
        assert g.has_edge(0, 3)
        assert g.m == 4

    def test_networkx_roundtrip_keeps_labels(self):
        graph = nx.Graph([(10, 20), (20, 30)])
        g = Graph.from_networkx(graph)
        assert g.labels == (10, 20, 30)
        assert sorted(g.to_networkx().edges) == [(0, 1), (1, 2)]

    def test_components_and_shape_predicates(self):
        g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4)])
        assert g.components() == [(0, 1, 2), (3, 4), (5,)]
        assert g.is_forest()
        assert not g.is_tree()
        assert not g.is_connected()
        assert path(5).is_tree()
        assert not cycle(5).is_forest()


class TestLayering:
    def test_bfs_layering_of_path_from_middle(self):
        layering = bfs_layering(path(5), 2)
        assert layering.as_lists() == [[2], [1, 3], [0, 4]]
        assert layering.index(4) == 2

    def test_bfs_layering_of_grid_follows_distance(self):
        layering = bfs_layering(grid(3, 3), 0)
        assert layering.as_lists() == [[0], [1, 3], [2, 4, 6], [5, 7], [8]]

    def test_bfs_layering_rejects_disconnected_graph(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(NotConnectedError) as excinfo:
            bfs_layering(g, 0)
        assert excinfo.value.vertex == 2

    def test_bfs_layering_rejects_bad_root(self):
        with pytest.raises(InvalidParameterError):
            bfs_layering(path(3), 5)

    def test_component_layering_starts_every_component_at_zero(self):
        g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4)])
        layering = component_layering(g)
        assert layering.as_lists() == [[0, 3, 5], [1, 4], [2]]
        assert is_layering(g, layering.layers)

    def test_component_layering_uses_given_root(self):
        g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4)])
        layering = component_layering(g, [2])
        assert layering.as_lists()[0] == [2, 3, 5]

    def test_component_layering_rejects_two_roots_in_one_component(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(InvalidParameterError, match="same component"):
            component_layering(g, [0, 1])

    def test_from_assignment_shifts_to_zero(self):
        layering = Layering.from_assignment({0: 3, 1: 4, 2: 3})
        assert layering.as_lists() == [[0, 2], [1]]

    def test_is_layering_accepts_empty_layers(self):
        assert is_layering(path(3), [[0], [1, 2], []])

    @pytest.mark.parametrize(
        "partition, diagnostic",
        [
            ([[0], [1]], "vertex 2 is in no layer"),
            ([[0, 1], [1, 2]], "vertex 1 appears in layers 0 and 1"),
            ([[0], [1], [], [2]], "edge 1-2 spans layers 1 and 3"),
            ([[0, 1, 2, 9]], "unknown vertex 9"),
        ],
    )
    def test_is_layering_failures(self, partition, diagnostic):
        result = is_layering(path(3), partition)
        assert not result
        assert diagnostic in result.diagnostic


class TestBlocks:
    def test_bowtie_has_one_cut_vertex(self):
        g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        forest = blocks(g)
        assert [sorted(b) for b in forest.blocks] == [[0, 1, 2], [2, 3, 4]]
        assert forest.cut_vertices == frozenset([2])
        assert forest.blocks_of(2) == [0, 1]

    def test_tree_blocks_are_bridges(self):
        forest = blocks(path(4))
        assert [sorted(b) for b in forest.blocks] == [[0, 1], [1, 2], [2, 3]]
        assert forest.cut_vertices == frozenset([1, 2])

    def test_isolated_vertices_are_blocks(self):
        forest = blocks(Graph.from_edges(3, [(0, 1)]))
        assert [sorted(b) for b in forest.blocks] == [[0, 1], [2]]
        assert forest.isolated == frozenset([2])


class TestGraphProperties:
    @given(graphs(max_nodes=10, connected=True))
    @settings(max_examples=60, deadline=None)
    def test_bfs_layering_is_a_layering(self, g):
        layering = bfs_layering(g, 0)
        assert is_layering(g, layering.layers)
        assert layering.layers[0] == frozenset([0])

    @given(graphs(max_nodes=10))
    @settings(max_examples=60, deadline=None)
    def test_component_layering_is_a_layering(self, g):
        assert is_layering(g, component_layering(g).layers)

    @given(graphs(max_nodes=9))
    @settings(max_examples=60, deadline=None)
    def test_blocks_cover_every_edge_once(self, g):
        forest = blocks(g)
        for u, v in g.sorted_edges():
            owners = [b for b in forest.blocks if u in b and v in b]
            assert len(owners) == 1
        assert set().union(*forest.blocks) == set(g.vertices)
