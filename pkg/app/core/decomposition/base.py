"""Tree and path decompositions, their verifiers and width measures."""
import logging
from collections import Counter, deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Sequence, Set, Tuple, Union

from ..base import VerificationResult, sorted_bag
from ..errors import InvalidDecompositionError, InvalidParameterError
from ..graph import Graph, Layering

logger = logging.getLogger(__name__)

Bag = Tuple[int, ...]


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed by the nodes ``0..s-1`` of a tree."""

    tree: Graph
    bags: Tuple[Bag, ...]

    @classmethod
    def from_bags(
        cls, tree: Graph, bags: Union[Sequence[Iterable[int]], Mapping[int, Iterable[int]]]
    ) -> "TreeDecomposition":
        if isinstance(bags, Mapping):
            missing = [x for x in tree.vertices if x not in bags]
            if missing:
                raise InvalidDecompositionError(f"Tree node {missing[0]} has no bag")
            bags = [bags[x] for x in tree.vertices]
        bags = tuple(sorted_bag(b) for b in bags)
        if len(bags) != tree.n:
            raise InvalidDecompositionError(
                f"{len(bags)} bags for a tree with {tree.n} nodes"
            )
        return cls(tree, bags)

    def bag(self, x: int) -> Bag:
        return self.bags[x]

    def occurrences(self) -> Dict[int, List[int]]:
        """Map from vertex to the sorted list of nodes whose bag contains it."""
        occ: Dict[int, List[int]] = {}
        for x, bag in enumerate(self.bags):
            for v in bag:
                occ.setdefault(v, []).append(x)
        return occ

    def nodes_containing(self, v: int) -> List[int]:
        return [x for x, bag in enumerate(self.bags) if v in bag]

    def relabel(self, mapping: Mapping[int, int]) -> "TreeDecomposition":
        return TreeDecomposition(self.tree, tuple(sorted_bag(mapping[v] for v in b) for b in self.bags))


@dataclass(frozen=True)
class PathDecomposition:
    """Bags ``B_1..B_s`` along a path; empty bags are allowed."""

    bags: Tuple[Bag, ...]

    @classmethod
    def from_bags(cls, bags: Iterable[Iterable[int]]) -> "PathDecomposition":
        return cls(tuple(sorted_bag(b) for b in bags))

    def __len__(self) -> int:
        return len(self.bags)

    def as_tree_decomposition(self) -> TreeDecomposition:
        s = len(self.bags)
        tree = Graph.from_edges(s, ((i, i + 1) for i in range(s - 1)))
        return TreeDecomposition(tree, self.bags)

    def relabel(self, mapping: Mapping[int, int]) -> "PathDecomposition":
        return PathDecomposition(tuple(sorted_bag(mapping[v] for v in b) for b in self.bags))

    def restrict(self, vertices: Iterable[int]) -> "PathDecomposition":
        keep = set(vertices)
        return PathDecomposition(tuple(tuple(v for v in b if v in keep) for b in self.bags))


Decomposition = Union[TreeDecomposition, PathDecomposition]


def _check_bag_vertices(g: Graph, bags: Sequence[Bag], what: str) -> VerificationResult:
    for x, bag in enumerate(bags):
        for v in bag:
            if not 0 <= v < g.n:
                return VerificationResult.failed(f"{what} {x} holds unknown vertex {v}")
    return VerificationResult.passed()


def _check_edge_cover(g: Graph, occ: Mapping[int, Sequence[int]]) -> VerificationResult:
    for u, v in g.sorted_edges():
        if not set(occ.get(u, ())) & set(occ.get(v, ())):
            return VerificationResult.failed(f"edge {u}-{v} is not covered by any bag")
    return VerificationResult.passed()


def verify_tree_decomposition(g: Graph, td: TreeDecomposition) -> VerificationResult:
    """Check bag contents, edge coverage and per-vertex subtree connectivity."""
    if len(td.bags) != td.tree.n:
        return VerificationResult.failed(
            f"{len(td.bags)} bags for a tree with {td.tree.n} nodes"
        )
    if g.n > 0 and not td.tree.is_tree():
        return VerificationResult.failed("decomposition tree is not a tree")
    result = _check_bag_vertices(g, td.bags, "bag")
    if not result:
        return result
    occ = td.occurrences()
    result = _check_edge_cover(g, occ)
    if not result:
        return result
    for v in g.vertices:
        nodes = occ.get(v)
        if not nodes:
            return VerificationResult.failed(f"vertex {v} is in no bag")
        members = set(nodes)
        seen = {nodes[0]}
        queue = deque([nodes[0]])
        while queue:
            x = queue.popleft()
            for y in td.tree.neighbors(x):
                if y in members and y not in seen:
                    seen.add(y)
                    queue.append(y)
        if len(seen) != len(members):
            return VerificationResult.failed(
                f"bags containing vertex {v} do not induce a connected subtree"
            )
    return VerificationResult.passed()


def verify_path_decomposition(g: Graph, pd: PathDecomposition) -> VerificationResult:
    """Check a path decomposition; empty bags are ignored."""
    result = _check_bag_vertices(g, pd.bags, "bag")
    if not result:
        return result
    occ: Dict[int, List[int]] = {}
    for i, bag in enumerate(pd.bags):
        for v in bag:
            occ.setdefault(v, []).append(i)
    result = _check_edge_cover(g, occ)
    if not result:
        return result
    for v in g.vertices:
        indices = occ.get(v)
        if not indices:
            return VerificationResult.failed(f"vertex {v} is in no bag")
        if indices[-1] - indices[0] + 1 != len(indices):
            return VerificationResult.failed(
                f"bags containing vertex {v} are not contiguous "
                f"(first {indices[0]}, last {indices[-1]})"
            )
    return VerificationResult.passed()


def width(decomposition: Decomposition) -> int:
    """Largest bag size minus one."""
    return max((len(b) for b in decomposition.bags), default=0) - 1


def layered_width(pd: PathDecomposition, layering: Layering) -> int:
    """Largest number of vertices any bag has in a single layer.

    Raises:
        InvalidDecompositionError: If a bag holds a vertex missing from the layering
    """
    best = 0
    for i, bag in enumerate(pd.bags):
        counts: Counter = Counter()
        for v in bag:
            if v not in layering.layer_of:
                raise InvalidDecompositionError(
                    f"bag {i} holds vertex {v}, which is missing from the layering"
                )
            counts[layering.layer_of[v]] += 1
        if counts:
            best = max(best, max(counts.values()))
    return best


def subtree_of(td: TreeDecomposition, v: int) -> Graph:
    """The subtree ``T[v]`` of nodes whose bags contain ``v``.

    The returned tree is relabelled densely; its ``labels`` are node ids of
    ``td.tree``.

    Raises:
        InvalidParameterError: If no bag contains v
    """
    nodes = td.nodes_containing(v)
    if not nodes:
        raise InvalidParameterError(f"Vertex {v} is in no bag")
    return td.tree.induced(nodes)


def union_of_bags(td: TreeDecomposition, nodes: Iterable[int]) -> Set[int]:
    result: Set[int] = set()
    for x in nodes:
        result.update(td.bags[x])
    return result
