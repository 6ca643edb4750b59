"""Exact pathwidth by dynamic programming over vertex subsets.

Pathwidth equals vertex separation number: the least, over vertex orderings,
of the largest number of already placed vertices that still have an unplaced
neighbour. ``cost[S]`` is the best value any completion of the prefix set ``S``
can reach, so ``cost[0]`` is the pathwidth. The tables are numpy arrays
indexed by bitmask and filled one popcount level at a time.
"""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config.schema import OracleLimits

from ..graph import Graph
from ..decomposition.base import PathDecomposition
from .limits import check_limit, resolve_limits

logger = logging.getLogger(__name__)


def neighbour_masks(g: Graph) -> List[int]:
    return [sum(1 << w for w in g.neighbors(v)) for v in g.vertices]


def boundary_sizes(n: int, masks: Sequence[int]) -> np.ndarray:
    """``|{u in S : u has a neighbour outside S}|`` for every subset ``S``."""
    states = np.arange(1 << n, dtype=np.int64)
    sizes = np.zeros(1 << n, dtype=np.int64)
    for u in range(n):
        inside = (states >> u) & 1
        leaves = (np.int64(masks[u]) & ~states) != 0
        sizes += inside * leaves
    return sizes


def popcounts(n: int) -> np.ndarray:
    states = np.arange(1 << n, dtype=np.int64)
    counts = np.zeros(1 << n, dtype=np.int64)
    for u in range(n):
        counts += (states >> u) & 1
    return counts


def completion_costs(n: int, boundary: np.ndarray) -> np.ndarray:
    """``cost[S] = max(boundary[S], min over v outside S of cost[S | v])``."""
    full = (1 << n) - 1
    counts = popcounts(n)
    infinity = np.int64(n + 1)
    cost = np.zeros(1 << n, dtype=np.int64)
    cost[full] = boundary[full]
    for level in range(n - 1, -1, -1):
        states = np.nonzero(counts == level)[0].astype(np.int64)
        best = np.full(states.shape, infinity, dtype=np.int64)
        for v in range(n):
            bit = np.int64(1 << v)
            outside = (states & bit) == 0
            best = np.where(outside, np.minimum(best, cost[states | bit]), best)
        cost[states] = np.maximum(boundary[states], best)
    return cost


def boundary_bags(n: int, masks: Sequence[int], ordering: Sequence[int]) -> List[List[int]]:
    """Bag ``i`` is ``v_i`` plus the placed vertices that still see unplaced ones."""
    bags = []
    placed = 0
    for v in ordering:
        boundary = [u for u in range(n) if placed >> u & 1 and masks[u] & ~placed]
        bags.append(sorted(boundary + [v]))
        placed |= 1 << v
    return bags


def exact_pathwidth(
    g: Graph, limits: Optional[OracleLimits] = None
) -> Tuple[int, PathDecomposition]:
    """Exact pathwidth with a witness built from the lexicographically smallest optimal ordering.

    Args:
        g: Any graph
        limits: Oracle limits; ``max_pw_vertices`` bounds ``g.n``

    Returns:
        The pathwidth and a path decomposition of that width

    Raises:
        OracleLimitError: If g has more than ``max_pw_vertices`` vertices
    """
    limits = resolve_limits(limits)
    check_limit(limits, "max_pw_vertices", g.n)
    n = g.n
    if n == 0:
        return 0, PathDecomposition(())
    masks = neighbour_masks(g)
    cost = completion_costs(n, boundary_sizes(n, masks))
    value = int(cost[0])
    ordering = []
    placed = 0
    for _ in range(n):
        v = next(
            v for v in range(n)
            if not placed >> v & 1 and cost[placed | 1 << v] <= value
        )
        ordering.append(v)
        placed |= 1 << v
    logger.debug(f"Exact pathwidth {value} with ordering {ordering}")
    return value, PathDecomposition.from_bags(boundary_bags(n, masks, ordering))
