"""Good tree decompositions from SPQR trees, and their composition over blocks."""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

from config.schema import OracleLimits

from ..base import Edge, normalize_edge
from ..decomposition.base import TreeDecomposition, verify_tree_decomposition
from ..decomposition.goodness import GoodnessReport, goodness
from ..errors import InvalidDecompositionError, InvalidParameterError
from ..graph import Graph, blocks
from ..oracles.limits import resolve_limits
from ..oracles.pathwidth import boundary_bags, exact_pathwidth, neighbour_masks
from ..spqr.builder import build_spqr
from ..spqr.skeleton import Skeleton

logger = logging.getLogger(__name__)

INEXACT_SKELETON = "inexact-skeleton"
DISCONNECTED = "disconnected"


@dataclass(frozen=True)
class GoodDecomposition:
    """A tree decomposition with its measured goodness.

    ``provenance[x]`` names what generated tree node ``x``: an SPQR node
    (``"S3"``, ``"P1"``, ``"R0"``), a cut vertex (``"cut 4"``), a bridge or an
    isolated vertex.
    """

    td: TreeDecomposition
    report: GoodnessReport
    provenance: Tuple[str, ...]
    flags: FrozenSet[str] = field(default_factory=frozenset)


def cycle_sweep(skeleton: Skeleton) -> List[List[int]]:
    """Width-2 path decomposition of a cycle: ``{v0, v_i, v_i+1}`` for each i."""
    neighbours: Dict[int, List[int]] = {v: [] for v in skeleton.vertices}
    for u, v in skeleton.all_edges():
        neighbours[u].append(v)
        neighbours[v].append(u)
    start = skeleton.vertices[0]
    walk = [start, min(neighbours[start])]
    while len(walk) < len(skeleton.vertices):
        a, b = neighbours[walk[-1]]
        walk.append(a if a != walk[-2] else b)
    return [[start, walk[i], walk[i + 1]] for i in range(1, len(walk) - 1)]


def greedy_ordering(g: Graph) -> List[int]:
    """Vertex ordering that keeps the placed boundary small, ties by id."""
    masks = neighbour_masks(g)
    placed = 0
    ordering = []
    for _ in range(g.n):
        best, best_key = -1, None
        for v in g.vertices:
            if placed >> v & 1:
                continue
            after = placed | 1 << v
            size = sum(1 for u in range(g.n) if after >> u & 1 and masks[u] & ~after)
            key = (size, g.degree(v), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        ordering.append(best)
        placed |= 1 << best
    return ordering


def skeleton_path(skeleton: Skeleton, limits: OracleLimits) -> Tuple[List[List[int]], bool]:
    """Path decomposition of an S- or R-skeleton, virtual edges included.

    Returns:
        Bags in host ids and whether the decomposition is exact
    """
    if skeleton.kind == "S":
        return cycle_sweep(skeleton), True
    vertices = list(skeleton.vertices)
    local = {v: i for i, v in enumerate(vertices)}
    edges = {normalize_edge(local[u], local[v]) for u, v in skeleton.all_edges()}
    graph = Graph.from_edges(len(vertices), edges)
    if graph.n <= limits.max_pw_vertices:
        _, pd = exact_pathwidth(graph, limits)
        bags = [list(b) for b in pd.bags]
        exact = True
    else:
        logger.warning(
            f"R-skeleton with {graph.n} vertices exceeds max_pw_vertices="
            f"{limits.max_pw_vertices}; using a greedy decomposition"
        )
        bags = boundary_bags(graph.n, neighbour_masks(graph), greedy_ordering(graph))
        exact = False
    return [[vertices[i] for i in bag] for bag in bags], exact


def good_decomposition_2conn(
    g: Graph, limits: Optional[OracleLimits] = None
) -> GoodDecomposition:
    """Good tree decomposition of a 2-connected graph from its SPQR tree.

    Every S- and R-node contributes a path of bags; every P-node contributes
    one bag ``{x, y}`` attached to the first bag of each neighbouring path that
    holds both ``x`` and ``y``.

    Raises:
        NotTwoConnectedError: If g is not 2-connected
    """
    limits = resolve_limits(limits)
    spqr = build_spqr(g)
    bags: List[List[int]] = []
    provenance: List[str] = []
    first_node: Dict[int, int] = {}
    path_nodes: Dict[int, List[int]] = {}
    tree_edges: List[Edge] = []
    flags = set()
    for a, skeleton in enumerate(spqr.skeletons):
        label = f"{skeleton.kind}{a}"
        if skeleton.kind == "P":
            first_node[a] = len(bags)
            bags.append(list(skeleton.vertices))
            provenance.append(label)
            continue
        path, exact = skeleton_path(skeleton, limits)
        if not exact:
            flags.add(INEXACT_SKELETON)
        start = len(bags)
        path_nodes[a] = list(range(start, start + len(path)))
        bags.extend(path)
        provenance.extend([label] * len(path))
        tree_edges.extend((x, x + 1) for x in range(start, start + len(path) - 1))
    for b in spqr.nodes_of_kind("P"):
        x, y = spqr.skeletons[b].vertices
        for a in spqr.tree.neighbors(b):
            c = next(c for c in path_nodes[a] if x in bags[c] and y in bags[c])
            tree_edges.append((first_node[b], c))
            logger.debug(f"P{b} attaches to bag {c} of {provenance[c]}")
    tree = Graph.from_edges(len(bags), tree_edges)
    td = TreeDecomposition.from_bags(tree, bags)
    report = goodness(g, td)
    return GoodDecomposition(td, report, tuple(provenance), frozenset(flags))


def trivial_decomposition(g: Graph) -> GoodDecomposition:
    """One bag holding every vertex; used for bridges and isolated vertices."""
    tree = Graph.from_edges(1, [])
    td = TreeDecomposition.from_bags(tree, [list(g.vertices)])
    what = "bridge" if g.n == 2 else "vertex"
    return GoodDecomposition(td, goodness(g, td), (what,))


def compose_blocks(
    g: Graph, per_block: Mapping[FrozenSet[int], GoodDecomposition]
) -> GoodDecomposition:
    """Glue block decompositions along cut vertices.

    Each block decomposition is given in the ids of
    ``g.induced(sorted(block))``. Every cut vertex ``v`` gets a new node with
    bag ``{v}`` joined to the first node containing ``v`` in each block
    containing ``v``. Components are linked through their first nodes.

    Raises:
        InvalidParameterError: If a block has no decomposition
        InvalidDecompositionError: If a block decomposition is invalid
    """
    forest = blocks(g)
    bags: List[List[int]] = []
    provenance: List[str] = []
    tree_edges: List[Edge] = []
    flags = set()
    block_nodes: List[List[int]] = []
    for block in forest.blocks:
        if block not in per_block:
            raise InvalidParameterError(f"No decomposition for block {sorted(block)}")
        decomposition = per_block[block]
        members = sorted(block)
        local = g.induced(members)
        check = verify_tree_decomposition(local, decomposition.td)
        if not check:
            raise InvalidDecompositionError(
                f"Decomposition of block {members} is invalid: {check.diagnostic}"
            )
        offset = len(bags)
        bags.extend([members[v] for v in bag] for bag in decomposition.td.bags)
        provenance.extend(decomposition.provenance)
        tree_edges.extend((offset + x, offset + y) for x, y in decomposition.td.tree.sorted_edges())
        block_nodes.append(list(range(offset, len(bags))))
        flags |= decomposition.flags
    for v in sorted(forest.cut_vertices):
        node = len(bags)
        bags.append([v])
        provenance.append(f"cut {v}")
        for i in forest.blocks_of(v):
            first = next(x for x in block_nodes[i] if v in bags[x])
            tree_edges.append((node, first))
    partial = Graph.from_edges(len(bags), tree_edges)
    parts = partial.components()
    if len(parts) > 1:
        flags.add(DISCONNECTED)
        tree_edges.extend((parts[i][0], parts[i + 1][0]) for i in range(len(parts) - 1))
    tree = Graph.from_edges(len(bags), tree_edges)
    td = TreeDecomposition.from_bags(tree, bags)
    logger.debug(f"Composed {len(forest.blocks)} blocks into {len(bags)} nodes")
    return GoodDecomposition(td, goodness(g, td), tuple(provenance), frozenset(flags))
