"""Minor containment by backtracking over connected branch sets."""
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional

from config.schema import OracleLimits

from ..graph import Graph
from ..minors import MinorModel
from .limits import check_limit, resolve_limits
from .pathwidth import neighbour_masks

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinorSearchResult:
    """Outcome of a minor search; truthy iff a model was found."""

    found: bool
    model: Optional[MinorModel] = None

    def __bool__(self) -> bool:
        return self.found


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _neighbourhood(masks: List[int], subset: int) -> int:
    result = 0
    for v in _bits(subset):
        result |= masks[v]
    return result


def _components(masks: List[int], free: int) -> List[int]:
    result = []
    while free:
        seed = free & -free
        part = seed
        frontier = seed
        while frontier:
            frontier = _neighbourhood(masks, frontier) & free & ~part
            part |= frontier
        result.append(part)
        free &= ~part
    return result


def _connected_subsets(masks: List[int], free: int, limit: int) -> Iterator[int]:
    """Every connected subset of ``free`` with at most ``limit`` vertices, each once.

    Subsets are grown from their smallest vertex and only extended through
    exclusive neighbours, so no subset is produced twice.
    """

    def extend(subset: int, extension: int, closed: int, allowed: int, size: int) -> Iterator[int]:
        yield subset
        if size == limit:
            return
        while extension:
            low = extension & -extension
            extension ^= low
            w = low.bit_length() - 1
            fresh = masks[w] & allowed & ~closed
            yield from extend(subset | low, extension | fresh, closed | masks[w] | low, allowed, size + 1)

    for s in _bits(free):
        allowed = free & ~((1 << (s + 1)) - 1)
        yield from extend(1 << s, masks[s] & allowed, (1 << s) | masks[s], allowed, 1)


def _pattern_order(h: Graph) -> List[int]:
    """Bfs order from a maximum-degree vertex, component by component."""
    order: List[int] = []
    seen = set()
    while len(order) < h.n:
        start = max((v for v in h.vertices if v not in seen), key=lambda v: (h.degree(v), -v))
        seen.add(start)
        queue = [start]
        for v in queue:
            order.append(v)
            for w in sorted(h.neighbors(v), key=lambda w: (-h.degree(w), w)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def minor_contains(
    g: Graph, h: Graph, limits: Optional[OracleLimits] = None
) -> MinorSearchResult:
    """Decide whether ``h`` is a minor of ``g``.

    Pattern vertices are placed in bfs order; each receives a connected set of
    unused host vertices touching the sets of its placed neighbours. A partial
    assignment is abandoned as soon as some unplaced pattern vertex has no
    free host component adjacent to all of its placed neighbours.

    Args:
        g: Host graph
        h: Pattern graph
        limits: Oracle limits on host and pattern size

    Returns:
        The search result, carrying a verified-shape model when found

    Raises:
        OracleLimitError: If an input is over its limit
    """
    limits = resolve_limits(limits)
    check_limit(limits, "max_minor_host", g.n)
    check_limit(limits, "max_minor_pattern", h.n)
    if h.n == 0:
        return MinorSearchResult(True, MinorModel({}))
    if h.n > g.n or h.m > g.m:
        return MinorSearchResult(False)

    masks = neighbour_masks(g)
    order = _pattern_order(h)
    position = {x: i for i, x in enumerate(order)}
    earlier = [[y for y in h.neighbors(x) if position[y] < i] for i, x in enumerate(order)]
    sets: Dict[int, int] = {}
    reach: Dict[int, int] = {}

    def feasible(i: int, free: int) -> bool:
        remaining = h.n - i
        if bin(free).count("1") < remaining:
            return False
        components = _components(masks, free)
        for j in range(i, h.n):
            anchors = [reach[y] for y in earlier[j] if y in sets]
            if not anchors:
                continue
            if not any(all(c & a for a in anchors) for c in components):
                return False
        return True

    def place(i: int, free: int) -> bool:
        if i == h.n:
            return True
        x = order[i]
        anchors = [reach[y] for y in earlier[i]]
        limit = bin(free).count("1") - (h.n - i - 1)
        for subset in _connected_subsets(masks, free, limit):
            if not all(subset & a for a in anchors):
                continue
            sets[x] = subset
            reach[x] = _neighbourhood(masks, subset)
            rest = free & ~subset
            if feasible(i + 1, rest) and place(i + 1, rest):
                return True
            del sets[x]
            del reach[x]
        return False

    if not place(0, (1 << g.n) - 1):
        logger.debug(f"No minor model of a {h.n}-vertex pattern in a {g.n}-vertex host")
        return MinorSearchResult(False)
    model = MinorModel({x: frozenset(_bits(mask)) for x, mask in sets.items()})
    return MinorSearchResult(True, model)
