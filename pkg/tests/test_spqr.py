from dataclasses import replace

import pytest

from app.core.errors import InvalidParameterError, NotTwoConnectedError
from app.core.generators import (
    complete,
    cycle,
    halin,
    outerplanar_triangulation,
    path,
    random_outerplanar,
    random_series_parallel,
)
from app.core.graph import Graph
from app.core.spqr import build_spqr, induced_subtree, realize, to_dot, verify_spqr


def _k4_minus_edge():
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def _theta():
    return Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])


class TestBuildSpqr:
    @pytest.mark.parametrize("n", [3, 4, 10])
    def test_cycle_is_one_s_node(self, n):
        s = build_spqr(cycle(n))
        assert s.kinds() == "S"
        assert s.skeletons[0].vertices == tuple(range(n))
        assert verify_spqr(cycle(n), s)

    def test_k4_is_one_r_node(self):
        s = build_spqr(complete(4))
        assert s.kinds() == "R"
        assert len(s.skeletons[0].real_edges) == 6
        assert verify_spqr(complete(4), s)

    def test_k4_minus_edge(self):
        g = _k4_minus_edge()
        s = build_spqr(g)
        assert sorted(s.kinds()) == ["P", "S", "S"]
        (p,) = s.nodes_of_kind("P")
        assert s.skeletons[p].vertices == (0, 1)
        assert s.skeletons[p].real_edges == ((0, 1),)
        assert verify_spqr(g, s)

    def test_theta_graph_has_one_p_node_of_degree_three(self):
        g = _theta()
        s = build_spqr(g)
        assert sorted(s.kinds()) == ["P", "S", "S", "S"]
        (p,) = s.nodes_of_kind("P")
        assert s.tree.degree(p) == 3
        assert not s.skeletons[p].real_edges
        assert verify_spqr(g, s)

    def test_construction_is_deterministic(self):
        g = outerplanar_triangulation(12, seed=4)
        assert build_spqr(g) == build_spqr(g)

    @pytest.mark.parametrize("seed", range(6))
    @pytest.mark.parametrize(
        "make",
        [random_outerplanar, outerplanar_triangulation, random_series_parallel, halin],
    )
    def test_random_families(self, make, seed):
        g = make(14, seed=seed)
        s = build_spqr(g)
        result = verify_spqr(g, s)
        assert result, result.diagnostic

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(250))
    @pytest.mark.parametrize("make", [random_outerplanar, random_series_parallel])
    def test_seeded_sweep_up_to_sixty_vertices(self, make, seed):
        n = 5 + (seed * 7) % 56
        g = make(n, seed=seed)
        result = verify_spqr(g, build_spqr(g))
        assert result, f"{make.__name__}({n}, seed={seed}): {result.diagnostic}"

    def test_halin_is_a_single_r_node(self):
        g = halin(12, seed=2)
        assert build_spqr(g).kinds() == "R"

    def test_too_small(self):
        with pytest.raises(InvalidParameterError):
            build_spqr(path(2))

    def test_cut_vertex(self):
        with pytest.raises(NotTwoConnectedError) as excinfo:
            build_spqr(path(3))
        assert excinfo.value.cut_vertex == 1

    def test_disconnected(self):
        with pytest.raises(NotTwoConnectedError, match="disconnected"):
            build_spqr(Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))


class TestSubtreesAndRealize:
    def test_induced_subtree(self):
        s = build_spqr(_k4_minus_edge())
        assert induced_subtree(s, 0) == frozenset(range(3))
        assert len(induced_subtree(s, 2)) == 1

    def test_induced_subtree_unknown_vertex(self):
        with pytest.raises(InvalidParameterError):
            induced_subtree(build_spqr(cycle(4)), 4)

    def test_realize_whole_tree(self):
        g = _theta()
        s = build_spqr(g)
        assert realize(s, range(s.tree.n)) == g

    def test_realize_single_s_node(self):
        s = build_spqr(_k4_minus_edge())
        (a,) = induced_subtree(s, 2)
        part = realize(s, [a])
        assert part.labels == (0, 1, 2)
        # Only the real edges of the triangle survive.
        assert part.m == 2

    def test_realize_rejects_disconnected_nodes(self):
        s = build_spqr(_theta())
        leaves = [a for a in range(s.tree.n) if s.tree.degree(a) == 1]
        with pytest.raises(InvalidParameterError, match="connected subtree"):
            realize(s, leaves[:2])


class TestVerifySpqr:
    def test_wrong_kind(self):
        g = _k4_minus_edge()
        s = build_spqr(g)
        a = s.nodes_of_kind("S")[0]
        skeletons = list(s.skeletons)
        skeletons[a] = replace(skeletons[a], kind="R")
        result = verify_spqr(g, replace(s, skeletons=tuple(skeletons)))
        assert result.diagnostic == f"R-node {a} is not 3-connected"

    def test_missing_virtual_edge(self):
        g = _k4_minus_edge()
        s = build_spqr(g)
        (p,) = s.nodes_of_kind("P")
        skeletons = list(s.skeletons)
        skeletons[p] = replace(skeletons[p], virtual_edges=skeletons[p].virtual_edges[:1])
        assert not verify_spqr(g, replace(s, skeletons=tuple(skeletons)))

    def test_dropped_real_edge(self):
        g = complete(4)
        s = build_spqr(g)
        skeleton = s.skeletons[0]
        tampered = replace(
            skeleton,
            real_edges=skeleton.real_edges[1:],
            virtual_edges=((skeleton.real_edges[0], 0),),
        )
        assert not verify_spqr(g, replace(s, skeletons=(tampered,)))

    def test_wrong_graph(self):
        s = build_spqr(cycle(5))
        assert verify_spqr(cycle(6), s).diagnostic == "tree is for 5 vertices, graph has 6"


class TestDot:
    def test_clusters_and_virtual_edges(self):
        text = to_dot(build_spqr(_k4_minus_edge()))
        assert text.startswith("graph spqr {")
        assert text.count("subgraph cluster_") == 3
        assert "style=dashed" in text
        assert "penwidth=2" in text
