"""Layered path decompositions from good tree decompositions.

The decomposed graph is first filled so every bag is a clique, which makes it
chordal, and then layered by bfs distance. The path decomposition is grown one
layer at a time: each component ``H`` of layer ``i`` has a parent clique
``C_H`` in layer ``i-1``. The union ``T_H`` of the subtrees ``T[u]``,
``u in C_H``, indexes a tree decomposition of ``G[H + C_H]``; a path
decomposition of ``T_H`` blown up through it is spliced in at the first bag
holding ``C_H``.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from ..base import Edge
from ..decomposition.base import (
    PathDecomposition,
    TreeDecomposition,
    layered_width,
    verify_path_decomposition,
    verify_tree_decomposition,
    width,
)
from ..decomposition.combinators import blowup, combine_subtrees
from ..decomposition.tree_pathwidth import tree_pathwidth
from ..errors import BoundViolationError, InvalidDecompositionError, InvalidParameterError, ParentCliqueError
from ..graph import Graph, Layering, bfs_layering, component_layering
from .good_tree import GoodDecomposition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LayeredPD:
    """A path decomposition, a layering, and the layered width they give."""

    pd: PathDecomposition
    layering: Layering
    ell: int


def layered_bound(w: int, p: int) -> int:
    """``w(p+1)(w+1)``, at least 1 so that edgeless graphs are covered."""
    return max(1, w * (p + 1) * (w + 1))


def chordal_fill(g: Graph, td: TreeDecomposition) -> Graph:
    """Add every missing edge between two vertices sharing a bag.

    Raises:
        InvalidDecompositionError: If td is not a tree decomposition of g
    """
    check = verify_tree_decomposition(g, td)
    if not check:
        raise InvalidDecompositionError(check.diagnostic)
    extra: Set[Edge] = set()
    for bag in td.bags:
        for u, v in combinations(bag, 2):
            if not g.has_edge(u, v):
                extra.add((u, v))
    logger.debug(f"Chordal fill adds {len(extra)} edges")
    return g.with_edges(extra) if extra else g


def parent_clique(
    gf: Graph, layering: Layering, component: Iterable[int], limit: Optional[int] = None
) -> FrozenSet[int]:
    """Vertices of the previous layer adjacent to a layer component.

    Args:
        gf: Chordal graph
        layering: bfs layering of gf
        component: Vertex set of a component of one layer ``i >= 1``
        limit: Largest allowed clique size, usually the decomposition width

    Returns:
        The parent clique

    Raises:
        InvalidParameterError: If the component is empty, spans layers or sits in layer 0
        ParentCliqueError: If the result is not a clique or is too large
    """
    members = set(component)
    if not members:
        raise InvalidParameterError("Empty layer component")
    layers = {layering.index(v) for v in members}
    if len(layers) != 1:
        raise InvalidParameterError(f"Component spans layers {sorted(layers)}")
    i = layers.pop()
    if i == 0:
        raise InvalidParameterError("Layer-0 components have no parent clique")
    clique = frozenset(
        u for v in members for u in gf.neighbors(v) if layering.index(u) == i - 1
    )
    for u, v in combinations(sorted(clique), 2):
        if not gf.has_edge(u, v):
            logger.error(f"Parent clique of {sorted(members)} misses edge {u}-{v}")
            raise ParentCliqueError(f"Parent clique {sorted(clique)} misses edge {u}-{v}")
    if limit is not None and len(clique) > limit:
        logger.error(f"Parent clique {sorted(clique)} is larger than {limit}")
        raise ParentCliqueError(f"Parent clique {sorted(clique)} has more than {limit} vertices")
    return clique


def _layer_components(gf: Graph, layer: FrozenSet[int]) -> List[Tuple[int, ...]]:
    sub = gf.induced(layer)
    return [tuple(sub.label(v) for v in comp) for comp in sub.components()]


def _component_sequence(
    gf: Graph, td: TreeDecomposition, component: Tuple[int, ...], clique: FrozenSet[int], part_bound: int
) -> List[Set[int]]:
    """Bags ``D_1..D_s`` of a path decomposition of ``G[H + C_H]``."""
    occurrences = td.occurrences()
    region = set()
    for u in clique:
        region.update(occurrences[u])
    t_h = td.tree.induced(region)
    index = t_h.index()
    parts = []
    for u in sorted(clique):
        part = t_h.induced(index[x] for x in occurrences[u])
        _, pd = tree_pathwidth(part)
        parts.append((part, pd))
    pd_t = combine_subtrees(t_h, parts)
    if width(pd_t) + 1 > part_bound:
        logger.error(f"Path decomposition of T_H has bag size {width(pd_t) + 1} > {part_bound}")
        raise BoundViolationError(
            f"T_H for component at {component[0]} has bag size {width(pd_t) + 1}, bound {part_bound}"
        )
    hat = gf.induced(set(component) | clique)
    local = hat.index()
    local_bags = [
        [local[v] for v in td.bags[t_h.label(x)] if v in local] for x in t_h.vertices
    ]
    td_h = TreeDecomposition.from_bags(t_h, local_bags)
    pd_hat = blowup(td_h, pd_t, graph=hat)
    return [{hat.label(v) for v in bag} for bag in pd_hat.bags if bag]


def layered_path_decomposition(
    g: Graph, gd: GoodDecomposition, root: Optional[int] = None
) -> LayeredPD:
    """Layered path decomposition with layered width at most ``w(p+1)(w+1)``.

    Args:
        g: The decomposed graph; disconnected graphs get one bfs root per component
        gd: Good tree decomposition of g with measured ``(w, p)``
        root: bfs root, smallest vertex by default

    Returns:
        The path decomposition, the bfs layering of the filled graph, and their layered width

    Raises:
        InvalidDecompositionError: If gd.td is not a tree decomposition of g
        BoundViolationError: If a width bound fails on this instance
    """
    if g.n == 0:
        raise InvalidParameterError("Cannot decompose the empty graph")
    w, p = gd.report.width, gd.report.subtree_pathwidth
    bound = layered_bound(w, p)
    gf = chordal_fill(g, gd.td)
    if gf.is_connected():
        layering = bfs_layering(gf, 0 if root is None else root)
    else:
        layering = component_layering(gf, [] if root is None else [root])
    bags: List[Set[int]] = [{r} for r in sorted(layering.layers[0])]
    for i in range(1, len(layering)):
        splices: Dict[int, List[List[Set[int]]]] = {}
        for component in _layer_components(gf, layering.layers[i]):
            clique = parent_clique(gf, layering, component, limit=max(w, 1))
            sequence = _component_sequence(gf, gd.td, component, clique, max(w, 1) * (p + 1))
            position = next(j for j, bag in enumerate(bags) if clique <= bag)
            splices.setdefault(position, []).append(sequence)
            logger.debug(f"Layer {i}: component at {component[0]} splices at bag {position}")
        grown: List[Set[int]] = []
        for j, bag in enumerate(bags):
            if j not in splices:
                grown.append(bag)
                continue
            for sequence in splices[j]:
                grown.extend(bag | d for d in sequence)
        bags = grown
    pd = PathDecomposition.from_bags(bags)
    check = verify_path_decomposition(g, pd)
    if not check:
        raise InvalidDecompositionError(f"Layered construction produced an invalid decomposition: {check.diagnostic}")
    ell = layered_width(pd, layering)
    if ell > bound:
        logger.error(f"Layered width {ell} exceeds w(p+1)(w+1) = {bound}")
        raise BoundViolationError(f"Layered width {ell} exceeds the bound {bound} for (w, p) = ({w}, {p})")
    logger.info(f"Layered path decomposition: {len(bags)} bags, layered width {ell}, bound {bound}")
    return LayeredPD(pd, layering, ell)
