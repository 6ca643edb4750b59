"""Structural checks for SPQR trees."""
import logging
from collections import Counter
from typing import List

import networkx as nx

from ..base import VerificationResult, normalize_edge
from ..graph import Graph
from .skeleton import Skeleton, SpqrTree, is_connected_subtree, realize

logger = logging.getLogger(__name__)


def _check_skeleton(a: int, skeleton: Skeleton) -> VerificationResult:
    vertices = set(skeleton.vertices)
    edges = skeleton.all_edges()
    for u, v in edges:
        if u not in vertices or v not in vertices:
            return VerificationResult.failed(f"node {a}: edge {u}-{v} leaves the skeleton")
    if skeleton.kind == "P":
        if len(vertices) != 2:
            return VerificationResult.failed(f"P-node {a} has {len(vertices)} vertices")
        if len(skeleton.virtual_edges) < 2:
            return VerificationResult.failed(f"P-node {a} has fewer than two virtual edges")
        if len(skeleton.real_edges) > 1:
            return VerificationResult.failed(f"P-node {a} has more than one real edge")
        return VerificationResult.passed()
    counts = Counter(normalize_edge(u, v) for u, v in edges)
    parallel = sorted(e for e, c in counts.items() if c > 1)
    if parallel:
        u, v = parallel[0]
        return VerificationResult.failed(f"node {a}: parallel edges {u}-{v} in an {skeleton.kind}-skeleton")
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(counts)
    if skeleton.kind == "S":
        if len(vertices) < 3 or any(d != 2 for _, d in graph.degree()) or not nx.is_connected(graph):
            return VerificationResult.failed(f"S-node {a} is not a cycle")
    elif skeleton.kind == "R":
        if len(vertices) < 4 or nx.node_connectivity(graph) < 3:
            return VerificationResult.failed(f"R-node {a} is not 3-connected")
    else:
        return VerificationResult.failed(f"node {a} has unknown kind {skeleton.kind!r}")
    return VerificationResult.passed()


def _check_pairing(s: SpqrTree) -> VerificationResult:
    for a, skeleton in enumerate(s.skeletons):
        partners = [b for _, b in skeleton.virtual_edges]
        if sorted(partners) != sorted(s.tree.neighbors(a)):
            return VerificationResult.failed(
                f"node {a}: degree {s.tree.degree(a)} but {len(partners)} virtual edges "
                "paired with its neighbours"
            )
        for edge, b in skeleton.virtual_edges:
            twins = [e for e, c in s.skeletons[b].virtual_edges if c == a]
            if twins != [edge]:
                return VerificationResult.failed(
                    f"virtual edge {edge[0]}-{edge[1]} of node {a} has no twin in node {b}"
                )
    return VerificationResult.passed()


def verify_spqr(g: Graph, s: SpqrTree) -> VerificationResult:
    """Check skeleton kinds, virtual-edge pairing, the seven SPQR-tree properties
    and that the whole tree realizes ``g``.
    """
    if s.n != g.n:
        return VerificationResult.failed(f"tree is for {s.n} vertices, graph has {g.n}")
    if len(s.skeletons) != s.tree.n or not s.tree.is_tree():
        return VerificationResult.failed("SPQR nodes do not form a tree")
    for a, skeleton in enumerate(s.skeletons):
        for v in skeleton.vertices:
            if not 0 <= v < g.n:
                return VerificationResult.failed(f"node {a} holds unknown vertex {v}")
        result = _check_skeleton(a, skeleton)
        if not result:
            return result
    result = _check_pairing(s)
    if not result:
        return result

    kinds = [skeleton.kind for skeleton in s.skeletons]
    for a, b in s.tree.sorted_edges():
        if (kinds[a] == "P") == (kinds[b] == "P"):
            return VerificationResult.failed(
                f"nodes {a} ({kinds[a]}) and {b} ({kinds[b]}) are adjacent"
            )

    for v in g.vertices:
        nodes = [a for a, skeleton in enumerate(s.skeletons) if v in skeleton.vertices]
        if not is_connected_subtree(s.tree, nodes):
            return VerificationResult.failed(f"nodes containing vertex {v} are not connected")

    for a, skeleton in enumerate(s.skeletons):
        if skeleton.kind != "P" or skeleton.real_edges or len(skeleton.virtual_edges) != 2:
            continue
        if all(kinds[b] == "S" for b in s.tree.neighbors(a)):
            return VerificationResult.failed(
                f"P-node {a} joins two S-nodes without a real edge"
            )

    for a in range(s.tree.n):
        rest = s.tree.induced(x for x in range(s.tree.n) if x != a)
        for component in rest.components():
            part = realize(s, [rest.label(x) for x in component])
            if not part.is_connected():
                return VerificationResult.failed(
                    f"removing node {a} leaves a part whose realized graph is disconnected"
                )

    owners: Counter = Counter()
    for skeleton in s.skeletons:
        owners.update(skeleton.real_edges)
    for edge, count in sorted(owners.items()):
        if not g.has_edge(*edge):
            return VerificationResult.failed(f"real edge {edge[0]}-{edge[1]} is not in the graph")
        if count > 1:
            return VerificationResult.failed(f"edge {edge[0]}-{edge[1]} is real in {count} nodes")
    missing: List = [e for e in g.sorted_edges() if e not in owners]
    if missing:
        u, v = missing[0]
        return VerificationResult.failed(f"edge {u}-{v} is real in no node")

    whole = realize(s, range(s.tree.n))
    if whole.n != g.n or whole != g:
        return VerificationResult.failed("realized graph differs from the input")
    return VerificationResult.passed()
