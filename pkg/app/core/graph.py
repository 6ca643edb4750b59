"""Graph representation, layerings and block structure.

Every graph in the toolkit is a :class:`Graph`: simple, undirected, with
dense vertex ids ``0..n-1``. Subgraphs are relabelled densely as well and keep
a ``labels`` tuple mapping each local id back to the parent id, which lets
decompositions move between a host graph and its pieces.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from .base import Edge, VerificationResult, normalize_edge
from .errors import GraphFormatError, InvalidParameterError, NotConnectedError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: FrozenSet[Edge]
    adjacency: Tuple[Tuple[int, ...], ...] = field(compare=False, repr=False)
    labels: Optional[Tuple[int, ...]] = field(default=None, compare=False, repr=False)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[int]] = None,
    ) -> "Graph":
        """Build a graph, rejecting self-loops, parallel edges and bad ids.

        Args:
            n: Number of vertices
            edges: Vertex pairs in any orientation
            labels: Optional parent id for every vertex

        Returns:
            The validated graph

        Raises:
            GraphFormatError: If an edge is a loop, a duplicate or out of range
        """
        if n < 0:
            raise GraphFormatError(f"Invalid vertex count: {n}")
        edge_set = set()
        neighbours: List[List[int]] = [[] for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"Edge {u}-{v} uses a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphFormatError(f"Self-loop at vertex {u}")
            edge = normalize_edge(u, v)
            if edge in edge_set:
                raise GraphFormatError(f"Parallel edge {edge[0]}-{edge[1]}")
            edge_set.add(edge)
            neighbours[u].append(v)
            neighbours[v].append(u)
        if labels is not None:
            labels = tuple(int(x) for x in labels)
            if len(labels) != n:
                raise InvalidParameterError(f"Expected {n} labels, got {len(labels)}")
        adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbours)
        return cls(n, frozenset(edge_set), adjacency, labels)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Convert an integer-labelled networkx graph.

        Nodes are relabelled in ascending order; when they were not already
        ``0..n-1`` the original ids are kept as ``labels``.
        """
        nodes = sorted(int(v) for v in graph.nodes)
        index = {v: i for i, v in enumerate(nodes)}
        labels = None if nodes == list(range(len(nodes))) else nodes
        return cls.from_edges(
            len(nodes), ((index[u], index[v]) for u, v in graph.edges), labels
        )

    def to_networkx(self) -> nx.Graph:
        """Return a fresh networkx copy on the same vertex ids."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def label(self, v: int) -> int:
        """Parent id of ``v`` (``v`` itself for a root graph)."""
        return v if self.labels is None else self.labels[v]

    def index(self) -> Dict[int, int]:
        """Map from parent id to local id."""
        return {self.label(v): v for v in range(self.n)}

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph relabelled densely in ascending vertex order."""
        chosen = sorted(set(vertices))
        for v in chosen:
            if not 0 <= v < self.n:
                raise InvalidParameterError(f"Invalid vertex: {v}")
        local = {v: i for i, v in enumerate(chosen)}
        edges = [
            (local[u], local[w])
            for u in chosen
            for w in self.adjacency[u]
            if u < w and w in local
        ]
        return Graph.from_edges(len(chosen), edges, chosen)

    def with_edges(self, extra: Iterable[Tuple[int, int]]) -> "Graph":
        """Supergraph on the same vertices with the extra pairs added."""
        edges = set(self.edges)
        for u, v in extra:
            if u != v:
                edges.add(normalize_edge(u, v))
        return Graph.from_edges(self.n, edges, self.labels)

    def components(self) -> List[Tuple[int, ...]]:
        """Connected components as sorted tuples, ordered by smallest vertex."""
        seen = [False] * self.n
        result = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            queue = deque([start])
            members = []
            while queue:
                u = queue.popleft()
                members.append(u)
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            result.append(tuple(sorted(members)))
        return result

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def is_tree(self) -> bool:
        return self.n > 0 and self.m == self.n - 1 and self.is_connected()


@dataclass(frozen=True)
class Layering:
    """Ordered partition ``V_0..V_t`` of the vertices."""

    layers: Tuple[FrozenSet[int], ...]
    layer_of: Mapping[int, int] = field(compare=False, hash=False, repr=False)

    @classmethod
    def from_layers(cls, layers: Iterable[Iterable[int]]) -> "Layering":
        frozen = tuple(frozenset(layer) for layer in layers)
        layer_of = {v: i for i, layer in enumerate(frozen) for v in layer}
        return cls(frozen, layer_of)

    @classmethod
    def from_assignment(cls, assignment: Mapping[int, int]) -> "Layering":
        """Build from a vertex → layer index map; indices are shifted to start at 0."""
        if not assignment:
            return cls.from_layers([])
        low = min(assignment.values())
        depth = max(assignment.values()) - low + 1
        layers: List[set] = [set() for _ in range(depth)]
        for v, i in assignment.items():
            layers[i - low].add(v)
        return cls.from_layers(layers)

    def __len__(self) -> int:
        return len(self.layers)

    def index(self, v: int) -> int:
        return self.layer_of[v]

    def as_lists(self) -> List[List[int]]:
        return [sorted(layer) for layer in self.layers]


def _check_root(g: Graph, root: int) -> None:
    if not isinstance(root, int) or not 0 <= root < g.n:
        raise InvalidParameterError(f"Invalid root vertex: {root}")


def _bfs_distances(g: Graph, sources: Iterable[int]) -> Dict[int, int]:
    distance = {}
    queue = deque()
    for s in sources:
        distance[s] = 0
        queue.append(s)
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in distance:
                distance[w] = distance[u] + 1
                queue.append(w)
    return distance


def bfs_layering(g: Graph, root: int) -> Layering:
    """Layer the vertices of a connected graph by their distance from ``root``.

    Args:
        g: Connected graph
        root: Vertex placed alone in layer 0

    Returns:
        The bfs layering

    Raises:
        InvalidParameterError: If root is not a vertex of g
        NotConnectedError: If some vertex is unreachable from root
    """
    _check_root(g, root)
    distance = _bfs_distances(g, [root])
    if len(distance) < g.n:
        missing = min(v for v in g.vertices if v not in distance)
        logger.error(f"bfs layering from {root} cannot reach vertex {missing}")
        raise NotConnectedError(
            f"Graph is disconnected: vertex {missing} is unreachable from {root}",
            vertex=missing,
        )
    return Layering.from_assignment(distance)


def component_layering(g: Graph, roots: Iterable[int] = ()) -> Layering:
    """Bfs-layer every component from its own root, all starting at layer 0.

    Components without a root in ``roots`` are layered from their smallest
    vertex. Layering components side by side is valid because no edge joins
    two components.
    """
    components = g.components()
    owner = {v: i for i, comp in enumerate(components) for v in comp}
    chosen: Dict[int, int] = {}
    for r in roots:
        _check_root(g, r)
        comp = owner[r]
        if comp in chosen and chosen[comp] != r:
            raise InvalidParameterError(
                f"Roots {chosen[comp]} and {r} lie in the same component"
            )
        chosen[comp] = r
    sources = [chosen.get(i, comp[0]) for i, comp in enumerate(components)]
    return Layering.from_assignment(_bfs_distances(g, sources))


def is_layering(g: Graph, partition: Sequence[Iterable[int]]) -> VerificationResult:
    """Check that ``partition`` is a layering of ``g``.

    Empty layers are accepted anywhere; they only relax the edge condition.
    """
    layer_of: Dict[int, int] = {}
    for i, part in enumerate(partition):
        for v in sorted(part):
            if not 0 <= v < g.n:
                return VerificationResult.failed(f"layer {i} holds unknown vertex {v}")
            if v in layer_of:
                return VerificationResult.failed(
                    f"vertex {v} appears in layers {layer_of[v]} and {i}"
                )
            layer_of[v] = i
    for v in g.vertices:
        if v not in layer_of:
            return VerificationResult.failed(f"vertex {v} is in no layer")
    for u, v in g.sorted_edges():
        if abs(layer_of[u] - layer_of[v]) > 1:
            return VerificationResult.failed(
                f"edge {u}-{v} spans layers {layer_of[u]} and {layer_of[v]}"
            )
    return VerificationResult.passed()


@dataclass(frozen=True)
class BlockForest:
    """Blocks and cut vertices of a graph.

    Bridges are two-vertex blocks and every isolated vertex is a block of
    its own.
    """

    blocks: Tuple[FrozenSet[int], ...]
    cut_vertices: FrozenSet[int]
    isolated: FrozenSet[int]

    def blocks_of(self, v: int) -> List[int]:
        """Indices of the blocks containing ``v``."""
        return [i for i, block in enumerate(self.blocks) if v in block]


def blocks(g: Graph) -> BlockForest:
    """Block/cut-vertex decomposition, blocks ordered by their sorted vertex lists."""
    graph = g.to_networkx()
    found = [frozenset(comp) for comp in nx.biconnected_components(graph)]
    isolated = frozenset(v for v in g.vertices if g.degree(v) == 0)
    found.extend(frozenset([v]) for v in isolated)
    found.sort(key=lambda block: sorted(block))
    cut_vertices = frozenset(nx.articulation_points(graph))
    logger.debug(f"{len(found)} blocks, {len(cut_vertices)} cut vertices")
    return BlockForest(tuple(found), cut_vertices, isolated)
