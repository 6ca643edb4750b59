"""SPQR-tree value types, induced subtrees, realized subgraphs and DOT export."""
import logging
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Literal, Set, Tuple

from ..base import Edge
from ..errors import InvalidParameterError
from ..graph import Graph

logger = logging.getLogger(__name__)

NodeKind = Literal["S", "P", "R"]


@dataclass(frozen=True)
class Skeleton:
    """The graph ``H_a`` attached to one SPQR node.

    ``virtual_edges`` lists ``(edge, neighbour)`` pairs: each virtual edge is
    paired with the tree neighbour holding its twin.
    """

    kind: NodeKind
    vertices: Tuple[int, ...]
    real_edges: Tuple[Edge, ...]
    virtual_edges: Tuple[Tuple[Edge, int], ...]

    def all_edges(self) -> List[Edge]:
        """Real and virtual edges as a multiset."""
        return list(self.real_edges) + [edge for edge, _ in self.virtual_edges]

    def neighbours(self) -> List[int]:
        return [b for _, b in self.virtual_edges]


@dataclass(frozen=True)
class SpqrTree:
    """SPQR tree of a 2-connected graph on ``n`` vertices."""

    n: int
    tree: Graph
    skeletons: Tuple[Skeleton, ...]

    def kinds(self) -> str:
        return "".join(s.kind for s in self.skeletons)

    def nodes_of_kind(self, kind: NodeKind) -> List[int]:
        return [a for a, s in enumerate(self.skeletons) if s.kind == kind]


def _check_vertex(s: SpqrTree, v: int) -> None:
    if not 0 <= v < s.n:
        raise InvalidParameterError(f"Unknown vertex: {v}")


def induced_subtree(s: SpqrTree, v: int) -> FrozenSet[int]:
    """Nodes whose skeletons contain ``v``."""
    _check_vertex(s, v)
    return frozenset(a for a, skeleton in enumerate(s.skeletons) if v in skeleton.vertices)


def is_connected_subtree(tree: Graph, nodes: Iterable[int]) -> bool:
    members = set(nodes)
    if not members:
        return False
    start = min(members)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in tree.neighbors(x):
            if y in members and y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(members)


def realize(s: SpqrTree, nodes: Iterable[int]) -> Graph:
    """The subgraph spanned by the skeleton vertices and real edges of ``nodes``.

    The result is relabelled densely; ``labels`` holds the host vertex ids.
    Over the whole tree it equals the host graph.

    Raises:
        InvalidParameterError: If nodes is empty, unknown or not connected in the tree
    """
    members = set(nodes)
    for a in members:
        if not 0 <= a < s.tree.n:
            raise InvalidParameterError(f"Unknown SPQR node: {a}")
    if not is_connected_subtree(s.tree, members):
        raise InvalidParameterError("Node set does not induce a connected subtree")
    vertices: Set[int] = set()
    edges: Set[Edge] = set()
    for a in members:
        vertices.update(s.skeletons[a].vertices)
        edges.update(s.skeletons[a].real_edges)
    ordered = sorted(vertices)
    local = {v: i for i, v in enumerate(ordered)}
    return Graph.from_edges(len(ordered), [(local[u], local[v]) for u, v in edges], ordered)


def to_dot(s: SpqrTree, name: str = "spqr") -> str:
    """DOT rendering: one cluster per node, virtual edges dashed.

    Skeleton vertices are drawn as ``n<node>_<vertex>``; tree edges join the
    first vertex of each cluster.
    """
    lines = [f"graph {name} {{", "  compound=true;", "  node [shape=circle];"]
    for a, skeleton in enumerate(s.skeletons):
        lines.append(f"  subgraph cluster_{a} {{")
        lines.append(f'    label="{skeleton.kind}{a}";')
        for v in skeleton.vertices:
            lines.append(f'    n{a}_{v} [label="{v}"];')
        for u, v in skeleton.real_edges:
            lines.append(f"    n{a}_{u} -- n{a}_{v};")
        for (u, v), b in skeleton.virtual_edges:
            lines.append(f'    n{a}_{u} -- n{a}_{v} [style=dashed, label="{b}"];')
        lines.append("  }")
    for a, b in s.tree.sorted_edges():
        head = s.skeletons[a].vertices[0]
        tail = s.skeletons[b].vertices[0]
        lines.append(
            f"  n{a}_{head} -- n{b}_{tail} [ltail=cluster_{a}, lhead=cluster_{b}, penwidth=2];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
