"""Recursive SPQR-tree construction on split pairs.

Pieces are networkx graphs whose edges carry a ``tag``: ``None`` for an edge
of the input graph, otherwise the id of the P-node the edge stands for. A
piece is a cycle (S-node), 3-connected (R-node), or is split at the
lexicographically smallest pair ``{x, y}`` of vertices of degree at least 3
whose removal disconnects it. Each split creates a P-node and one piece per
component of ``piece - {x, y}``, closed by a tagged edge ``xy``.

Tagged edges become virtual edges once every piece is placed. Two clean-up
rules then run until neither applies: adjacent P-nodes are merged, and a
P-node with two virtual edges, no real edge and two S-node neighbours is
dissolved by joining the two cycles.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from ..base import Edge, normalize_edge
from ..errors import InvalidParameterError, NotTwoConnectedError, SpqrConstructionError
from ..graph import Graph
from .skeleton import Skeleton, SpqrTree

logger = logging.getLogger(__name__)


@dataclass
class _Node:
    kind: str
    vertices: Set[int]
    real: Set[Edge]
    virtual: List[Tuple[Edge, int]] = field(default_factory=list)


def _is_cycle(piece: nx.Graph) -> bool:
    return piece.number_of_nodes() >= 3 and all(d == 2 for _, d in piece.degree()) and nx.is_connected(piece)


def _split_pair(piece: nx.Graph) -> Optional[Tuple[int, int]]:
    """Smallest ``(x, y)`` with both degrees at least 3 separating the piece."""
    heavy = sorted(v for v, d in piece.degree() if d >= 3)
    heavy_set = set(heavy)
    for x in heavy:
        rest = piece.subgraph(v for v in piece.nodes if v != x)
        candidates = sorted(y for y in nx.articulation_points(rest) if y > x and y in heavy_set)
        if candidates:
            return x, candidates[0]
    return None


class _Builder:
    def __init__(self, g: Graph):
        self.g = g
        self.nodes: Dict[int, _Node] = {}
        self.links: List[Tuple[int, Edge, int]] = []

    def allocate(self, kind: str, vertices: Set[int]) -> int:
        node_id = len(self.nodes)
        self.nodes[node_id] = _Node(kind, set(vertices), set())
        return node_id

    def take_edges(self, node_id: int, piece: nx.Graph) -> None:
        node = self.nodes[node_id]
        for u, v, tag in piece.edges(data="tag"):
            edge = normalize_edge(u, v)
            if tag is None:
                node.real.add(edge)
            else:
                self.links.append((node_id, edge, tag))

    def split(self, piece: nx.Graph, pair: Tuple[int, int]) -> List[nx.Graph]:
        x, y = pair
        p = self.allocate("P", {x, y})
        if piece.has_edge(x, y):
            tag = piece[x][y].get("tag")
            if tag is None:
                self.nodes[p].real.add((x, y))
            else:
                self.links.append((p, (x, y), tag))
        rest = piece.subgraph(v for v in piece.nodes if v not in pair)
        components = sorted((sorted(c) for c in nx.connected_components(rest)), key=lambda c: c[0])
        if len(components) < 2:
            raise SpqrConstructionError(f"Split pair {x},{y} does not separate the piece")
        pieces = []
        for component in components:
            sub = nx.Graph(piece.subgraph(component + [x, y]))
            if sub.has_edge(x, y):
                sub.remove_edge(x, y)
            sub.add_edge(x, y, tag=p)
            pieces.append(sub)
        logger.debug(f"P{p}: split pair {x},{y} with {len(components)} components")
        return pieces

    def run(self) -> None:
        root = self.g.to_networkx()
        nx.set_edge_attributes(root, None, "tag")
        work = deque([root])
        while work:
            piece = work.popleft()
            if _is_cycle(piece):
                node_id = self.allocate("S", set(piece.nodes))
                self.take_edges(node_id, piece)
                continue
            if piece.number_of_nodes() >= 4 and nx.node_connectivity(piece) >= 3:
                node_id = self.allocate("R", set(piece.nodes))
                self.take_edges(node_id, piece)
                continue
            pair = _split_pair(piece)
            if pair is None:
                logger.error(f"No split pair in a piece on {sorted(piece.nodes)}")
                raise SpqrConstructionError(
                    f"Piece on {sorted(piece.nodes)} is neither a cycle nor 3-connected "
                    "and has no split pair of degree-3 vertices"
                )
            work.extend(self.split(piece, pair))
        for a, edge, b in self.links:
            self.nodes[a].virtual.append((edge, b))
            self.nodes[b].virtual.append((edge, a))

    def absorb(self, keep: int, gone: int, via: int) -> None:
        """Move the contents of ``gone`` into ``keep``, dropping the twins through ``via``."""
        target, source = self.nodes[keep], self.nodes[gone]
        target.virtual = [(e, b) for e, b in target.virtual if b != via]
        target.vertices |= source.vertices
        target.real |= source.real
        for edge, b in source.virtual:
            if b == via:
                continue
            target.virtual.append((edge, b))
            other = self.nodes[b]
            other.virtual = [(e, keep if c == gone else c) for e, c in other.virtual]
        del self.nodes[gone]

    def merge_p_nodes(self) -> bool:
        for a in sorted(self.nodes):
            node = self.nodes[a]
            if node.kind != "P":
                continue
            for _, b in node.virtual:
                if self.nodes[b].kind == "P":
                    logger.debug(f"Merging adjacent P-nodes {a} and {b}")
                    self.nodes[a].virtual = [(e, c) for e, c in node.virtual if c != b]
                    source = self.nodes.pop(b)
                    node.real |= source.real
                    for edge, c in source.virtual:
                        if c == a:
                            continue
                        node.virtual.append((edge, c))
                        other = self.nodes[c]
                        other.virtual = [(e, a if d == b else d) for e, d in other.virtual]
                    return True
        return False

    def merge_cycles(self) -> bool:
        for p in sorted(self.nodes):
            node = self.nodes[p]
            if node.kind != "P" or node.real or len(node.virtual) != 2:
                continue
            s1, s2 = sorted(b for _, b in node.virtual)
            if self.nodes[s1].kind == "S" and self.nodes[s2].kind == "S":
                logger.debug(f"Dissolving P{p}: joining cycles {s1} and {s2}")
                self.absorb(s1, s2, p)
                del self.nodes[p]
                return True
        return False

    def finish(self) -> SpqrTree:
        while self.merge_p_nodes() or self.merge_cycles():
            pass
        order = sorted(self.nodes)
        new_id = {old: i for i, old in enumerate(order)}
        skeletons = []
        tree_edges = set()
        for old in order:
            node = self.nodes[old]
            virtual = tuple(sorted((edge, new_id[b]) for edge, b in node.virtual))
            for _, b in virtual:
                tree_edges.add(normalize_edge(new_id[old], b))
            skeletons.append(
                Skeleton(node.kind, tuple(sorted(node.vertices)), tuple(sorted(node.real)), virtual)
            )
        tree = Graph.from_edges(len(order), tree_edges)
        return SpqrTree(self.g.n, tree, tuple(skeletons))


def build_spqr(g: Graph) -> SpqrTree:
    """SPQR tree of a 2-connected graph.

    Args:
        g: 2-connected graph with at least 3 vertices

    Returns:
        The SPQR tree; construction is deterministic

    Raises:
        InvalidParameterError: If g has fewer than 3 vertices
        NotTwoConnectedError: If g is not 2-connected
        SpqrConstructionError: If a piece admits none of the three cases
    """
    if g.n < 3:
        raise InvalidParameterError(f"build_spqr needs at least 3 vertices, got {g.n}")
    graph = g.to_networkx()
    if not nx.is_connected(graph):
        missing = g.components()[1][0]
        raise NotTwoConnectedError(f"Graph is disconnected: vertex {missing} is unreachable from 0")
    cut_vertices = sorted(nx.articulation_points(graph))
    if cut_vertices:
        logger.error(f"build_spqr input has cut vertex {cut_vertices[0]}")
        raise NotTwoConnectedError(
            f"Graph is not 2-connected: {cut_vertices[0]} is a cut vertex",
            cut_vertex=cut_vertices[0],
        )
    builder = _Builder(g)
    builder.run()
    tree = builder.finish()
    logger.debug(f"SPQR tree with node kinds {tree.kinds()}")
    return tree
