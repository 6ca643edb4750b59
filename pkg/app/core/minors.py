"""Minor models and the constructive ``Q_k`` model inside ``T_{2k}^+``."""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Mapping

from .base import VerificationResult
from .errors import InvalidParameterError
from .graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinorModel:
    """Branch sets witnessing a pattern ``H`` as a minor of a host ``G``."""

    branch_sets: Mapping[int, FrozenSet[int]]

    @classmethod
    def from_sets(cls, sets: Mapping[int, Iterable[int]]) -> "MinorModel":
        return cls({int(h): frozenset(int(v) for v in vs) for h, vs in sets.items()})

    def __hash__(self) -> int:
        return hash(tuple(sorted((h, tuple(sorted(s))) for h, s in self.branch_sets.items())))

    def as_lists(self) -> Dict[int, list]:
        return {h: sorted(s) for h, s in sorted(self.branch_sets.items())}


def _is_connected_set(g: Graph, vertices: FrozenSet[int]) -> bool:
    start = next(iter(vertices))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w in vertices and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(vertices)


def verify_minor_model(g: Graph, h: Graph, m: MinorModel) -> VerificationResult:
    """Check disjointness, connectivity and edge coverage of a minor model."""
    owner: Dict[int, int] = {}
    for x in h.vertices:
        branch = m.branch_sets.get(x)
        if not branch:
            return VerificationResult.failed(f"pattern vertex {x} has no branch set")
        for v in sorted(branch):
            if not 0 <= v < g.n:
                return VerificationResult.failed(
                    f"branch set of {x} holds unknown host vertex {v}"
                )
            if v in owner:
                return VerificationResult.failed(
                    f"host vertex {v} lies in the branch sets of {owner[v]} and {x}"
                )
            owner[v] = x
    extra = sorted(set(m.branch_sets) - set(h.vertices))
    if extra:
        return VerificationResult.failed(f"branch set for unknown pattern vertex {extra[0]}")
    for x in h.vertices:
        if not _is_connected_set(g, m.branch_sets[x]):
            return VerificationResult.failed(f"branch set of {x} is not connected")
    for x, y in h.sorted_edges():
        target = m.branch_sets[y]
        if not any(w in target for v in m.branch_sets[x] for w in g.neighbors(v)):
            return VerificationResult.failed(
                f"no host edge joins the branch sets of pattern edge {x}-{y}"
            )
    return VerificationResult.passed()


def _subtree(root: int, size: int) -> FrozenSet[int]:
    """Heap-ordered vertices of the binary subtree below ``root``."""
    members = []
    frontier = [root]
    while frontier:
        members.extend(frontier)
        frontier = [c for v in frontier for c in (2 * v + 1, 2 * v + 2) if c < size]
    return frozenset(members)


def find_qk_in_tplus(k: int) -> MinorModel:
    """Model of ``q_graph(k)`` in ``t_plus(2k)``.

    The root of a height-``2j`` subtree, its two children and the subtrees of
    the two middle grandchildren form the branch set of a height-``j`` root of
    ``Q_k``; the outer grandchildren carry the two recursive halves. Leaves of
    ``T_{2k}`` map to leaves of ``T_k`` and the apex maps to the apex.
    """
    if k < 0:
        raise InvalidParameterError(f"find_qk_in_tplus needs k >= 0, got {k}")
    host_size = 2 ** (2 * k + 1) - 1
    sets: Dict[int, FrozenSet[int]] = {}
    # (host root, remaining Q height, pattern vertex)
    work = [(0, k, 0)]
    while work:
        root, j, q = work.pop()
        if j == 0:
            sets[q] = frozenset([root])
            continue
        c1, c2 = 2 * root + 1, 2 * root + 2
        a1, a2 = 2 * c1 + 1, 2 * c1 + 2
        a3, a4 = 2 * c2 + 1, 2 * c2 + 2
        sets[q] = frozenset([root, c1, c2]) | _subtree(a2, host_size) | _subtree(a3, host_size)
        work.append((a1, j - 1, 2 * q + 1))
        work.append((a4, j - 1, 2 * q + 2))
    sets[2 ** (k + 1) - 1] = frozenset([host_size])
    logger.debug(f"Built Q_{k} model with {len(sets)} branch sets")
    return MinorModel(sets)
