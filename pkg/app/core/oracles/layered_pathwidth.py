"""Exact layered pathwidth by enumerating layerings.

For a fixed layering, every path decomposition can be replaced by the one
whose bag for ``v`` is ``v`` plus the placed vertices that still have an
unplaced neighbour, ordering vertices by their first bag. That bag is a subset
of the original first bag of ``v``, so the replacement never has larger
layered width and a dynamic program over placed sets is exact.
"""
import logging
from typing import Dict, Iterator, List, Optional, Tuple

from config.schema import OracleLimits

from ..errors import NotConnectedError
from ..graph import Graph, Layering
from ..decomposition.base import PathDecomposition
from .limits import check_limit, resolve_limits
from .pathwidth import boundary_bags, neighbour_masks

logger = logging.getLogger(__name__)


def _bfs_order(g: Graph) -> List[int]:
    order = [0]
    seen = {0}
    for v in order:
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                order.append(w)
    return order


def enumerate_layerings(g: Graph) -> Iterator[Tuple[int, ...]]:
    """Layer assignments of a connected graph with minimum 0, one per mirror pair.

    An assignment and its reversal ``t - f`` have the same layered pathwidth,
    so only the lexicographically smaller of the two is produced.
    """
    n = g.n
    order = _bfs_order(g)
    assignment: Dict[int, int] = {}

    def extend(i: int) -> Iterator[Tuple[int, ...]]:
        if i == n:
            values = tuple(assignment[v] for v in range(n))
            if min(values) != 0:
                return
            top = max(values)
            if tuple(top - x for x in values) < values:
                return
            yield values
            return
        v = order[i]
        placed = [assignment[w] for w in g.neighbors(v) if w in assignment]
        if placed:
            low, high = max(placed) - 1, min(placed) + 1
        else:
            low, high = 0, n - 1
        for layer in range(max(low, 0), min(high, n - 1) + 1):
            assignment[v] = layer
            yield from extend(i + 1)
            del assignment[v]

    yield from extend(0)


def _layered_cost(n: int, masks: List[int], layers: Tuple[int, ...]) -> Tuple[int, List[int]]:
    """Best layered width for one layering and an ordering that attains it."""
    full = (1 << n) - 1
    depth = max(layers) + 1

    def bag_cost(placed: int, v: int) -> int:
        counts = [0] * depth
        counts[layers[v]] += 1
        for u in range(n):
            if placed >> u & 1 and masks[u] & ~placed:
                counts[layers[u]] += 1
        return max(counts)

    best = [0] * (1 << n)
    choice = [-1] * (1 << n)
    for state in range(1, full + 1):
        value = n + 1
        for v in range(n):
            if state >> v & 1:
                rest = state & ~(1 << v)
                candidate = max(best[rest], bag_cost(rest, v))
                if candidate < value:
                    value, choice[state] = candidate, v
        best[state] = value
    ordering = []
    state = full
    while state:
        v = choice[state]
        ordering.append(v)
        state &= ~(1 << v)
    return best[full], ordering[::-1]


def exact_layered_pathwidth(
    g: Graph, limits: Optional[OracleLimits] = None
) -> Tuple[int, PathDecomposition, Layering]:
    """Exact layered pathwidth of a small connected graph, with witnesses.

    Args:
        g: Connected graph
        limits: Oracle limits; ``max_lpw_vertices`` bounds ``g.n``

    Returns:
        The layered pathwidth, a path decomposition and a layering attaining it

    Raises:
        OracleLimitError: If g is over the size limit
        NotConnectedError: If g is disconnected
    """
    limits = resolve_limits(limits)
    check_limit(limits, "max_lpw_vertices", g.n)
    if g.n == 0:
        return 0, PathDecomposition(()), Layering.from_layers([])
    if not g.is_connected():
        missing = g.components()[1][0]
        raise NotConnectedError(
            f"Graph is disconnected: vertex {missing} is unreachable from 0", vertex=missing
        )
    n = g.n
    masks = neighbour_masks(g)
    best: Optional[Tuple[int, List[int], Tuple[int, ...]]] = None
    count = 0
    for layers in enumerate_layerings(g):
        count += 1
        value, ordering = _layered_cost(n, masks, layers)
        if best is None or value < best[0]:
            best = (value, ordering, layers)
            if value == 1:
                break
    value, ordering, layers = best
    logger.debug(f"Layered pathwidth {value} after {count} layerings")
    pd = PathDecomposition.from_bags(boundary_bags(n, masks, ordering))
    layering = Layering.from_assignment({v: layers[v] for v in range(n)})
    return value, pd, layering
