"""Exact pathwidth of trees.

The value comes from a bottom-up labelling of rooted subtrees built on the
classic characterisation of vertex separation on trees: a tree has pathwidth
at least ``k+1`` (``k >= 1``) iff some vertex has three branches of
pathwidth at least ``k``.

A label is a strictly decreasing sequence of ``(value, critical)`` pairs.
The head value is the pathwidth of the rooted subtree. The head is critical
when some vertex ``x`` has two children whose subtrees reach that value; the
tail is then the label of the subtree with ``T[x]`` cut away (empty when ``x``
is the root).

The witness decomposition follows the spine construction: with ``k`` the
pathwidth, pick a path ``P`` such that every component of ``T - P`` has
pathwidth at most ``k - 1``, decompose those recursively and thread them
along ``P``.
"""
import logging
from typing import Dict, List, Mapping, Sequence, Set, Tuple

from ..errors import InvalidParameterError, TreePathwidthError
from ..graph import Graph
from .base import PathDecomposition, width

logger = logging.getLogger(__name__)

Label = Tuple[Tuple[int, bool], ...]

_SINGLE: Label = ((0, False),)


def _combine(children: Sequence[Label]) -> Label:
    """Label of a root whose child subtrees carry ``children``."""
    if not children:
        return _SINGLE
    top = max(label[0][0] for label in children)
    if top == 0:
        return ((1, False),)
    heavy = [i for i, label in enumerate(children) if label[0][0] == top]
    if len(heavy) >= 3:
        return ((top + 1, False),)
    if len(heavy) == 2:
        if children[heavy[0]][0][1] or children[heavy[1]][0][1]:
            return ((top + 1, False),)
        return ((top, True),)
    only = heavy[0]
    if not children[only][0][1]:
        return ((top, False),)
    # The critical vertex sits inside the single heaviest child; what is left
    # once its subtree is removed decides between top and top + 1.
    rest = [label for i, label in enumerate(children) if i != only]
    tail = children[only][1:]
    if tail:
        rest.append(tail)
    remainder = _combine(rest)
    if remainder[0][0] >= top:
        return ((top + 1, False),)
    return ((top, True),) + remainder


class _TreeView:
    """A vertex subset of a tree with parent pointers from a fixed root."""

    def __init__(self, adjacency: Mapping[int, Sequence[int]], members: Set[int]):
        self.adjacency = adjacency
        self.members = members
        self.root = min(members)
        self.parent: Dict[int, int] = {self.root: -1}
        self.order: List[int] = [self.root]
        for v in self.order:
            for w in self.neighbours(v):
                if w not in self.parent:
                    self.parent[w] = v
                    self.order.append(w)
        self.children: Dict[int, List[int]] = {v: [] for v in self.order}
        for v in self.order[1:]:
            self.children[self.parent[v]].append(v)

    def neighbours(self, v: int) -> List[int]:
        return [w for w in self.adjacency[v] if w in self.members]

    def down_labels(self) -> Dict[int, Label]:
        down: Dict[int, Label] = {}
        for v in reversed(self.order):
            down[v] = _combine([down[c] for c in self.children[v]])
        return down

    def up_labels(self, down: Mapping[int, Label]) -> Dict[int, Label]:
        """``up[c]``: label of the branch at ``c`` that contains its parent."""
        up: Dict[int, Label] = {}
        for p in self.order:
            kids = self.children[p]
            outside = [up[p]] if p != self.root else []
            for c in kids:
                up[c] = _combine([down[s] for s in kids if s != c] + outside)
        return up

    def branch(self, p: int, c: int) -> Set[int]:
        """Vertex set of the component of ``members - p`` containing ``c``."""
        seen = {p, c}
        stack = [c]
        while stack:
            v = stack.pop()
            for w in self.neighbours(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        seen.discard(p)
        return seen


def _pathwidth(adjacency: Mapping[int, Sequence[int]], members: Set[int]) -> int:
    view = _TreeView(adjacency, members)
    return view.down_labels()[view.root][0][0]


def _spine(view: _TreeView, k: int) -> List[int]:
    down = view.down_labels()
    up = view.up_labels(down)

    def branch_width(p: int, c: int) -> int:
        if view.parent.get(c) == p:
            return down[c][0][0]
        return up[p][0][0]

    heavy = {
        v: [c for c in view.neighbours(v) if branch_width(v, c) >= k]
        for v in sorted(view.members)
    }

    def walk(previous: int, current: int) -> List[int]:
        path = []
        while True:
            path.append(current)
            ahead = [c for c in heavy[current] if c != previous]
            if not ahead:
                return path
            if len(ahead) > 1:
                raise TreePathwidthError(f"Vertex {current} has two heavy branches ahead")
            previous, current = current, ahead[0]

    for v, branches in heavy.items():
        if not branches:
            return [v]
    for v, branches in heavy.items():
        if len(branches) == 2:
            left = walk(v, branches[0])
            right = walk(v, branches[1])
            return left[::-1] + [v] + right
    for v, branches in heavy.items():
        c = branches[0]
        if v in heavy[c]:
            return walk(c, v)[::-1] + walk(v, c)
    raise TreePathwidthError("No spine found for a tree")


def _decompose(adjacency: Mapping[int, Sequence[int]], members: Set[int]) -> List[List[int]]:
    if len(members) == 1:
        return [sorted(members)]
    view = _TreeView(adjacency, members)
    k = view.down_labels()[view.root][0][0]
    spine = _spine(view, k)
    on_spine = set(spine)
    bags: List[List[int]] = []
    for j, p in enumerate(spine):
        hanging = sorted(c for c in view.neighbours(p) if c not in on_spine)
        for c in hanging:
            for bag in _decompose(adjacency, view.branch(p, c)):
                bags.append(bag + [p])
        if j + 1 < len(spine):
            bags.append([p, spine[j + 1]])
    return bags


def _adjacency(t: Graph) -> Dict[int, Tuple[int, ...]]:
    return {v: t.neighbors(v) for v in t.vertices}


def tree_pathwidth(t: Graph) -> Tuple[int, PathDecomposition]:
    """Exact pathwidth of a tree or forest, with an optimal path decomposition.

    Args:
        t: Tree or forest

    Returns:
        The pathwidth and a path decomposition attaining it

    Raises:
        InvalidParameterError: If t contains a cycle
    """
    if not t.is_forest():
        raise InvalidParameterError("tree_pathwidth input has a cycle")
    if t.n == 0:
        return 0, PathDecomposition(())
    adjacency = _adjacency(t)
    value = 0
    bags: List[List[int]] = []
    for component in t.components():
        members = set(component)
        value = max(value, _pathwidth(adjacency, members))
        bags.extend(_decompose(adjacency, members))
    pd = PathDecomposition.from_bags(bags)
    if width(pd) != value:
        logger.error(f"Tree pathwidth witness has width {width(pd)}, labels give {value}")
        raise TreePathwidthError(
            f"Tree decomposition witness has width {width(pd)}, expected {value}"
        )
    return value, pd


def tree_pathwidth_value(t: Graph) -> int:
    """Pathwidth of a tree or forest without building a witness."""
    if not t.is_forest():
        raise InvalidParameterError("tree_pathwidth input has a cycle")
    adjacency = _adjacency(t)
    return max((_pathwidth(adjacency, set(c)) for c in t.components()), default=0)
