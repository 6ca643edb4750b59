import math

import pytest

from app.core.decomposition import layered_width, verify_path_decomposition, width
from app.core.errors import NotConnectedError, OracleLimitError
from app.core.generators import (
    complete,
    complete_binary_tree,
    cycle,
    grid,
    path,
    q_graph,
    random_outerplanar,
    random_series_parallel,
    random_tree,
    t_plus,
)
from app.core.graph import Graph, is_layering
from app.core.minors import verify_minor_model
from app.core.oracles import (
    check_limit,
    enumerate_layerings,
    exact_layered_pathwidth,
    exact_pathwidth,
    minor_contains,
)
from app.core.pipeline import run_pipeline
from app.core.serialization import read_edge_list
from config.schema import OracleLimits


class TestExactPathwidth:
    @pytest.mark.parametrize(
        "g, expected",
        [
            (Graph.from_edges(1, []), 0),
            (path(6), 1),
            (cycle(7), 2),
            (complete(5), 4),
            (grid(3, 4), 3),
            (complete_binary_tree(3), 2),
            (Graph.from_edges(4, []), 0),
        ],
    )
    def test_known_values(self, g, expected):
        value, pd = exact_pathwidth(g)
        assert value == expected
        assert width(pd) == expected
        assert verify_path_decomposition(g, pd)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_q_graph(self, k):
        value, pd = exact_pathwidth(q_graph(k))
        assert value == math.ceil(k / 2) + 1
        assert verify_path_decomposition(q_graph(k), pd)

    def test_empty_graph(self):
        value, pd = exact_pathwidth(Graph.from_edges(0, []))
        assert value == 0
        assert pd.bags == ()

    def test_witness_follows_smallest_ordering(self):
        _, pd = exact_pathwidth(path(3))
        assert pd.bags == ((0,), (0, 1), (1, 2))

    def test_limit(self):
        with pytest.raises(OracleLimitError) as excinfo:
            exact_pathwidth(path(4), OracleLimits(max_pw_vertices=3))
        assert (excinfo.value.limit, excinfo.value.value, excinfo.value.size) == ("max_pw_vertices", 3, 4)

    def test_default_limit(self):
        with pytest.raises(OracleLimitError, match="max_pw_vertices=18"):
            exact_pathwidth(path(19))


class TestExactLayeredPathwidth:
    @pytest.mark.parametrize(
        "g, expected",
        [
            (path(5), 1),
            (cycle(4), 1),
            (cycle(6), 1),
            (complete(4), 2),
            (complete_binary_tree(2), 1),
        ],
    )
    def test_known_values(self, g, expected):
        value, pd, layering = exact_layered_pathwidth(g)
        assert value == expected
        assert verify_path_decomposition(g, pd)
        assert is_layering(g, layering.layers)
        assert layered_width(pd, layering) == expected

    def test_q_graph_is_at_least_one(self):
        value, _, _ = exact_layered_pathwidth(q_graph(1))
        assert value >= 1

    def test_empty_graph(self):
        value, pd, layering = exact_layered_pathwidth(Graph.from_edges(0, []))
        assert value == 0
        assert len(layering) == 0

    def test_disconnected(self):
        with pytest.raises(NotConnectedError) as excinfo:
            exact_layered_pathwidth(Graph.from_edges(3, [(0, 1)]))
        assert excinfo.value.vertex == 2

    def test_limit(self):
        with pytest.raises(OracleLimitError, match="max_lpw_vertices"):
            exact_layered_pathwidth(path(8), OracleLimits(max_lpw_vertices=7))

    def test_layerings_of_an_edge(self):
        assert sorted(enumerate_layerings(path(2))) == [(0, 0), (0, 1)]

    def test_layerings_are_valid_and_start_at_zero(self):
        g = cycle(5)
        for values in enumerate_layerings(g):
            assert min(values) == 0
            assert all(abs(values[u] - values[v]) <= 1 for u, v in g.edges)


SMALL_FIXTURES = ["bowtie.txt", "hexagon_fan.txt", "k23.txt", "k4.txt", "k4_minus_edge.txt"]


class TestLayeredPathwidthAgainstPipeline:
    @pytest.mark.parametrize("name", SMALL_FIXTURES)
    def test_small_fixtures(self, name, fixtures_dir):
        g = read_edge_list(fixtures_dir / name)
        value, _, _ = exact_layered_pathwidth(g)
        assert value <= run_pipeline(g).layered.ell

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(10))
    @pytest.mark.parametrize("make", [random_tree, random_series_parallel, random_outerplanar])
    def test_seeded_graphs_on_seven_vertices(self, make, seed):
        g = make(7, seed=seed)
        value, pd, layering = exact_layered_pathwidth(g)
        assert layered_width(pd, layering) == value
        assert value <= run_pipeline(g).layered.ell


class TestMinorContains:
    def test_q_graph_in_t_plus(self):
        result = minor_contains(t_plus(2), q_graph(1))
        assert result
        assert verify_minor_model(t_plus(2), q_graph(1), result.model)

    def test_triangle_in_cycle(self):
        result = minor_contains(cycle(6), complete(3))
        assert result.found
        assert verify_minor_model(cycle(6), complete(3), result.model)

    def test_k4_not_in_cycle(self):
        result = minor_contains(cycle(6), complete(4))
        assert not result
        assert result.model is None

    def test_k5_not_in_planar_grid(self):
        assert not minor_contains(grid(3, 3), complete(5))

    def test_pattern_larger_than_host(self):
        assert not minor_contains(path(3), path(4))

    def test_empty_pattern(self):
        assert minor_contains(path(2), Graph.from_edges(0, []))

    @pytest.mark.parametrize(
        "host, pattern, limit",
        [(path(15), path(2), "max_minor_host"), (path(10), path(7), "max_minor_pattern")],
    )
    def test_limits(self, host, pattern, limit):
        with pytest.raises(OracleLimitError, match=limit):
            minor_contains(host, pattern)


class TestCheckLimit:
    def test_within_limit(self):
        check_limit(OracleLimits(), "max_minor_pattern", 6)

    def test_over_limit(self):
        with pytest.raises(OracleLimitError):
            check_limit(OracleLimits(), "max_minor_pattern", 7)
