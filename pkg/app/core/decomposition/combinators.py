"""Combinators that build path decompositions out of smaller ones."""
import logging
from collections import deque
from typing import Dict, List, Optional, Sequence, Set, Tuple

from ..errors import InvalidDecompositionError, InvalidParameterError
from ..graph import Graph, Layering, is_layering
from .base import (
    PathDecomposition,
    TreeDecomposition,
    union_of_bags,
    verify_path_decomposition,
    verify_tree_decomposition,
    width,
)

logger = logging.getLogger(__name__)


def blowup(
    td: TreeDecomposition, pd_t: PathDecomposition, graph: Optional[Graph] = None
) -> PathDecomposition:
    """Path decomposition of a graph from a path decomposition of its decomposition tree.

    Bag ``i`` of the result is the union of the bags of the tree nodes in bag
    ``i`` of ``pd_t``; its width is at most ``(p+1)(k+1)-1``.

    Args:
        td: Tree decomposition of width k
        pd_t: Path decomposition of ``td.tree`` of width p
        graph: The decomposed graph; when given, ``td`` is verified against it

    Returns:
        Path decomposition of the decomposed graph

    Raises:
        InvalidDecompositionError: If an input decomposition is invalid
    """
    check = verify_path_decomposition(td.tree, pd_t)
    if not check:
        logger.error(f"blowup received an invalid tree path decomposition: {check.diagnostic}")
        raise InvalidDecompositionError(f"Invalid path decomposition of the tree: {check.diagnostic}")
    if graph is not None:
        check = verify_tree_decomposition(graph, td)
        if not check:
            raise InvalidDecompositionError(f"Invalid tree decomposition: {check.diagnostic}")
    return PathDecomposition.from_bags(union_of_bags(td, nodes) for nodes in pd_t.bags)


def _components(t: Graph, vertices: Set[int]) -> List[Set[int]]:
    remaining = set(vertices)
    result = []
    while remaining:
        start = min(remaining)
        part = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in t.neighbors(x):
                if y in remaining and y not in part:
                    part.add(y)
                    queue.append(y)
        remaining -= part
        result.append(part)
    return result


def _part_nodes(t: Graph, subtree: Graph, pd: PathDecomposition, i: int) -> Tuple[Set[int], List[List[int]]]:
    check = verify_path_decomposition(subtree, pd)
    if not check:
        raise InvalidDecompositionError(f"Part {i} has an invalid path decomposition: {check.diagnostic}")
    nodes = {subtree.label(x) for x in subtree.vertices}
    for x in nodes:
        if not 0 <= x < t.n:
            raise InvalidParameterError(f"Part {i} refers to unknown tree node {x}")
    if len(_components(t, nodes)) != 1:
        raise InvalidParameterError(f"Part {i} is not a connected subtree")
    bags = [[subtree.label(x) for x in bag] for bag in pd.bags]
    return nodes, bags


def combine_subtrees(
    t: Graph, parts: Sequence[Tuple[Graph, PathDecomposition]]
) -> PathDecomposition:
    """Path decomposition of a tree covered by subtrees with known decompositions.

    Parts are merged one at a time in input order, skipping ahead only when
    the next part does not yet touch the merged region. Each component ``J``
    of the new part outside the merged region attaches at a single merged
    node ``v``; the first bag containing ``v`` is replaced by itself united
    with each bag of the part's decomposition restricted to ``J``. Several
    components attaching at one bag are spliced consecutively, ordered by
    their smallest node. Bag sizes stay within ``sum(width_i + 1)``.

    Args:
        t: The tree
        parts: Pairs of an induced subtree (with ``labels`` into ``t``) and
            a path decomposition of it

    Returns:
        Path decomposition of t

    Raises:
        InvalidParameterError: If the parts do not cover t
    """
    if not parts:
        raise InvalidParameterError("combine_subtrees needs at least one part")
    resolved = [_part_nodes(t, sub, pd, i) for i, (sub, pd) in enumerate(parts)]
    covered_all = set().union(*(nodes for nodes, _ in resolved))
    missing = [x for x in t.vertices if x not in covered_all]
    if missing:
        raise InvalidParameterError(f"Parts do not cover tree node {missing[0]}")

    covered, first_bags = resolved[0]
    covered = set(covered)
    bags: List[Set[int]] = [set(b) for b in first_bags]
    pending = list(range(1, len(resolved)))
    while pending:
        pick = None
        for i in pending:
            nodes = resolved[i][0]
            if nodes & covered or any(y in covered for x in nodes for y in t.neighbors(x)):
                pick = i
                break
        if pick is None:
            raise InvalidParameterError("Parts do not form a connected cover of the tree")
        pending.remove(pick)
        nodes, part_bags = resolved[pick]
        fresh = nodes - covered
        if not fresh:
            continue
        splices: Dict[int, List[List[Set[int]]]] = {}
        for component in _components(t, fresh):
            anchors = {y for x in component for y in t.neighbors(x) if y in covered}
            if len(anchors) != 1:
                raise InvalidParameterError(
                    f"Component at node {min(component)} attaches at {len(anchors)} nodes"
                )
            v = anchors.pop()
            restricted = [set(b) & component for b in part_bags]
            restricted = [b for b in restricted if b]
            position = next(i for i, bag in enumerate(bags) if v in bag)
            splices.setdefault(position, []).append(restricted)
            logger.debug(f"Component {sorted(component)} attaches at node {v}, bag {position}")
        merged: List[Set[int]] = []
        for position, bag in enumerate(bags):
            if position not in splices:
                merged.append(bag)
                continue
            for restricted in splices[position]:
                merged.extend(bag | d for d in restricted)
        bags = merged
        covered |= fresh
    return PathDecomposition.from_bags(bags)


def ball(g: Graph, v: int, r: int) -> Set[int]:
    """Vertices at distance at most ``r`` from ``v``."""
    if not 0 <= v < g.n:
        raise InvalidParameterError(f"Invalid vertex: {v}")
    distance = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        if distance[u] == r:
            continue
        for w in g.neighbors(u):
            if w not in distance:
                distance[w] = distance[u] + 1
                queue.append(w)
    return set(distance)


def ball_restriction(
    g: Graph, pd: PathDecomposition, layering: Layering, v: int, r: int
) -> PathDecomposition:
    """Restrict ``pd`` to the radius-``r`` ball around ``v``.

    The ball meets at most ``2r+1`` layers, so the result has width at most
    ``(2r+1)k - 1`` where k is the layered width of ``pd``. Bags are in the
    vertex ids of ``g``; empty bags are dropped.

    Raises:
        InvalidParameterError: If layering is not a layering of g, v is not a
            vertex or r is negative
    """
    _check_layering(g, layering)
    return _restrict(g, pd, v, r)


def local_pathwidth(g: Graph, pd: PathDecomposition, layering: Layering, r: int) -> int:
    """Largest width of ``ball_restriction`` over all centres."""
    _check_layering(g, layering)
    return max((width(_restrict(g, pd, v, r)) for v in g.vertices), default=0)


def _check_layering(g: Graph, layering: Layering) -> None:
    check = is_layering(g, layering.layers)
    if not check:
        logger.error(f"Ball restriction got a bad layering: {check.diagnostic}")
        raise InvalidParameterError(f"Not a layering of the graph: {check.diagnostic}")


def _restrict(g: Graph, pd: PathDecomposition, v: int, r: int) -> PathDecomposition:
    if r < 0:
        raise InvalidParameterError(f"Radius must be non-negative, got {r}")
    region = ball(g, v, r)
    bags = [b for b in pd.restrict(region).bags if b]
    return PathDecomposition(tuple(bags))
