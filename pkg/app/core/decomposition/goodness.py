"""Goodness of tree decompositions and the two standard good decompositions."""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Set, Tuple

import networkx as nx

from ..base import normalize_edge
from ..errors import InvalidDecompositionError, InvalidParameterError
from ..graph import Graph
from .base import TreeDecomposition, subtree_of, verify_tree_decomposition, width
from .tree_pathwidth import tree_pathwidth_value

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GoodnessReport:
    """``td`` is ``(width, subtree_pathwidth)``-good.

    ``witness_vertex`` is the smallest vertex whose subtree ``T[v]`` attains
    the subtree pathwidth; it is ``None`` for the empty graph.
    """

    width: int
    subtree_pathwidth: int
    witness_vertex: Optional[int]

    def to_dict(self) -> Dict[str, Optional[int]]:
        return {
            "width": self.width,
            "subtree_pathwidth": self.subtree_pathwidth,
            "witness_vertex": self.witness_vertex,
        }


def goodness(g: Graph, td: TreeDecomposition) -> GoodnessReport:
    """Measure the width and the largest pathwidth of any ``T[v]``.

    Raises:
        InvalidDecompositionError: If td is not a tree decomposition of g
    """
    check = verify_tree_decomposition(g, td)
    if not check:
        logger.error(f"goodness received an invalid decomposition: {check.diagnostic}")
        raise InvalidDecompositionError(check.diagnostic)
    best, witness = 0, None
    for v in g.vertices:
        value = tree_pathwidth_value(subtree_of(td, v))
        if witness is None or value > best:
            best, witness = value, v
    return GoodnessReport(width(td), best, witness)


def rooted_tree_decomposition(t: Graph, root: int = 0) -> TreeDecomposition:
    """The (1,1)-good decomposition of a tree: node ``x`` holds ``{x, parent(x)}``.

    Raises:
        InvalidParameterError: If t is not a tree or root is not a vertex
    """
    if not t.is_tree():
        raise InvalidParameterError("rooted_tree_decomposition needs a tree")
    if not 0 <= root < t.n:
        raise InvalidParameterError(f"Invalid root vertex: {root}")
    bags = {root: (root,)}
    stack = [root]
    while stack:
        x = stack.pop()
        for y in t.neighbors(x):
            if y not in bags:
                bags[y] = (y, x)
                stack.append(y)
    return TreeDecomposition.from_bags(t, bags)


def is_outerplanar(g: Graph) -> bool:
    """A graph is outerplanar iff adding a vertex adjacent to all others keeps it planar."""
    graph = g.to_networkx()
    apex = g.n
    graph.add_edges_from((apex, v) for v in g.vertices)
    planar, _ = nx.check_planarity(graph)
    return planar


def _triangles(g: Graph) -> Set[Tuple[int, int, int]]:
    found = set()
    for u, v in g.edges:
        for w in set(g.neighbors(u)) & set(g.neighbors(v)):
            found.add(tuple(sorted((u, v, w))))
    return found


def outerplanar_dual_decomposition(g: Graph) -> TreeDecomposition:
    """Decomposition of a polygon triangulation indexed by its weak dual.

    Each inner face becomes a node with the face's three vertices as its bag;
    faces sharing a chord are adjacent. Every ``T[v]`` is a path, so the
    result is (2,1)-good.

    Raises:
        InvalidParameterError: If g is not a maximal outerplanar graph
    """
    if g.n < 3 or g.m != 2 * g.n - 3:
        raise InvalidParameterError(
            f"Not a polygon triangulation: n={g.n}, m={g.m}, expected m={2 * g.n - 3}"
        )
    if not g.is_connected() or not is_outerplanar(g):
        raise InvalidParameterError("Not a polygon triangulation: graph is not outerplanar")
    # A maximal outerplanar graph has no separating triangles, so every
    # triangle is an inner face.
    faces = sorted(_triangles(g))
    if len(faces) != g.n - 2:
        raise InvalidParameterError(f"Expected {g.n - 2} inner faces, found {len(faces)}")
    by_edge: Dict[Tuple[int, int], list] = {}
    for i, (a, b, c) in enumerate(faces):
        for edge in (normalize_edge(a, b), normalize_edge(a, c), normalize_edge(b, c)):
            by_edge.setdefault(edge, []).append(i)
    tree_edges = [tuple(nodes) for nodes in by_edge.values() if len(nodes) == 2]
    tree = Graph.from_edges(len(faces), tree_edges)
    logger.debug(f"Dual tree with {len(faces)} faces and {len(tree_edges)} chords")
    return TreeDecomposition.from_bags(tree, faces)
