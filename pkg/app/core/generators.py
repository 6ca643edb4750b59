"""Generators for the named graph families.

Vertex-id conventions (fixed so fixtures are byte-stable):

* ``path(n)``: ``0-1-...-(n-1)``.
* ``cycle(n)``: the path plus ``(n-1)-0``.
* ``complete_binary_tree(h)``: heap order; root ``0``, children of ``i`` are
  ``2i+1`` and ``2i+2``; the leaves are the last ``2^h`` ids.
* ``q_graph(k)`` / ``t_plus(k)``: the binary tree above plus the apex, which
  takes the last id ``2^(k+1)-1``.
* ``grid(r, c)``: vertex ``(i, j)`` has id ``i*c + j``.
* ``random_tree(n, seed)``: vertex ``i > 0`` hangs below a uniformly chosen
  earlier vertex.
* ``outerplanar_triangulation`` / ``random_outerplanar``: the outer cycle is
  ``0-1-...-(n-1)-0``.
* ``random_series_parallel``: starts from the triangle ``0,1,2``; vertex ``i``
  is created by the ``(i-2)``-th series or parallel step.
* ``halin(n, seed)``: tree vertices in creation order, root ``0``; the leaf
  cycle follows the planar left-to-right leaf order.
"""
import logging
from typing import Callable, Dict, List, Optional, Set, Tuple

import numpy as np

from .base import Edge, normalize_edge
from .errors import InvalidParameterError
from .graph import Graph

logger = logging.getLogger(__name__)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidParameterError(message)


def _rng(seed: Optional[int]) -> np.random.Generator:
    _require(seed is not None, "A seed is required for randomized families")
    return np.random.default_rng(seed)


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def _binary_tree_edges(h: int) -> List[Edge]:
    size = 2 ** (h + 1) - 1
    return [((i - 1) // 2, i) for i in range(1, size)]


def complete_binary_tree(h: int) -> Graph:
    """Complete binary tree of height ``h`` with ``2^(h+1)-1`` vertices."""
    _require(h >= 0, f"complete_binary_tree needs h >= 0, got {h}")
    return Graph.from_edges(2 ** (h + 1) - 1, _binary_tree_edges(h))


def q_graph(k: int) -> Graph:
    """``T_k`` plus a dominant vertex."""
    _require(k >= 0, f"q_graph needs k >= 0, got {k}")
    size = 2 ** (k + 1) - 1
    edges = _binary_tree_edges(k) + [(v, size) for v in range(size)]
    return Graph.from_edges(size + 1, edges)


def t_plus(k: int) -> Graph:
    """``T_k`` plus a vertex adjacent to exactly its ``2^k`` leaves."""
    _require(k >= 0, f"t_plus needs k >= 0, got {k}")
    size = 2 ** (k + 1) - 1
    first_leaf = 2 ** k - 1
    edges = _binary_tree_edges(k) + [(v, size) for v in range(first_leaf, size)]
    return Graph.from_edges(size + 1, edges)


def grid(r: int, c: int) -> Graph:
    _require(r >= 1 and c >= 1, f"grid needs r, c >= 1, got {r}x{c}")
    edges = []
    for i in range(r):
        for j in range(c):
            v = i * c + j
            if j + 1 < c:
                edges.append((v, v + 1))
            if i + 1 < r:
                edges.append((v, v + c))
    return Graph.from_edges(r * c, edges)


def random_tree(n: int, seed: Optional[int] = None) -> Graph:
    _require(n >= 1, f"random_tree needs n >= 1, got {n}")
    rng = _rng(seed)
    return Graph.from_edges(n, ((int(rng.integers(0, i)), i) for i in range(1, n)))


def _triangulation_chords(n: int, rng: np.random.Generator) -> List[Edge]:
    chords = []
    stack = [(0, n - 1)]
    while stack:
        i, j = stack.pop()
        if j - i < 2:
            continue
        k = int(rng.integers(i + 1, j))
        for a, b in ((i, k), (k, j)):
            if b - a >= 2:
                chords.append((a, b))
        stack.append((k, j))
        stack.append((i, k))
    return chords


def outerplanar_triangulation(n: int, seed: Optional[int] = None) -> Graph:
    """Random triangulation of the convex polygon ``0..n-1``."""
    _require(n >= 3, f"outerplanar_triangulation needs n >= 3, got {n}")
    rng = _rng(seed)
    boundary = [(i, (i + 1) % n) for i in range(n)]
    return Graph.from_edges(n, boundary + _triangulation_chords(n, rng))


def random_outerplanar(n: int, seed: Optional[int] = None, keep: float = 0.5) -> Graph:
    """Polygon triangulation with each chord kept with probability ``keep``.

    The outer cycle is never deleted, so the result stays 2-connected.
    """
    _require(n >= 3, f"random_outerplanar needs n >= 3, got {n}")
    _require(0.0 <= keep <= 1.0, f"keep must lie in [0, 1], got {keep}")
    rng = _rng(seed)
    boundary = [(i, (i + 1) % n) for i in range(n)]
    chords = _triangulation_chords(n, rng)
    kept = [chord for chord in chords if rng.random() < keep]
    return Graph.from_edges(n, boundary + kept)


def random_series_parallel(n: int, seed: Optional[int] = None) -> Graph:
    """2-connected series-parallel graph grown from a triangle.

    Each step picks an edge ``uv`` and either subdivides it or adds a new
    vertex adjacent to both ends.
    """
    _require(n >= 3, f"random_series_parallel needs n >= 3, got {n}")
    rng = _rng(seed)
    edges: Set[Edge] = {(0, 1), (1, 2), (0, 2)}
    for w in range(3, n):
        u, v = sorted(edges)[int(rng.integers(0, len(edges)))]
        if rng.random() < 0.5:
            edges.discard((u, v))
        edges.add((u, w))
        edges.add((v, w))
    return Graph.from_edges(n, edges)


def halin(n: int, seed: Optional[int] = None) -> Graph:
    """Random Halin graph on ``n`` vertices.

    A plane tree without degree-2 vertices is grown from the star
    ``K_{1,3}``; its leaves are then joined in a cycle in planar order.
    """
    _require(n >= 4, f"halin needs n >= 4, got {n}")
    rng = _rng(seed)
    children: Dict[int, List[int]] = {0: [1, 2, 3], 1: [], 2: [], 3: []}
    size = 4
    while size < n:
        remaining = n - size
        if remaining == 1:
            internal = sorted(v for v, kids in children.items() if kids)
            parent = internal[int(rng.integers(0, len(internal)))]
            count = 1
        else:
            leaves = sorted(v for v, kids in children.items() if not kids)
            parent = leaves[int(rng.integers(0, len(leaves)))]
            count = 3 if remaining == 3 else 2
        for _ in range(count):
            children[parent].append(size)
            children[size] = []
            size += 1
    order: List[int] = []
    stack = [0]
    while stack:
        v = stack.pop()
        if not children[v]:
            order.append(v)
        stack.extend(reversed(children[v]))
    edges = [(p, c) for p, kids in children.items() for c in kids]
    edges += [normalize_edge(order[i], order[(i + 1) % len(order)]) for i in range(len(order))]
    return Graph.from_edges(n, edges)


class GraphFactory:
    """Registry of the named families, keyed by CLI name."""

    # name -> (builder, number of integer parameters, randomized)
    _families: Dict[str, Tuple[Callable[..., Graph], int, bool]] = {
        "path": (path, 1, False),
        "cycle": (cycle, 1, False),
        "complete": (complete, 1, False),
        "cbt": (complete_binary_tree, 1, False),
        "qk": (q_graph, 1, False),
        "tplus": (t_plus, 1, False),
        "grid": (grid, 2, False),
        "tree": (random_tree, 1, True),
        "outerplanar": (random_outerplanar, 1, True),
        "triangulation": (outerplanar_triangulation, 1, True),
        "sp": (random_series_parallel, 1, True),
        "halin": (halin, 1, True),
    }
    _aliases: Dict[str, str] = {
        "complete_binary_tree": "cbt",
        "q_graph": "qk",
        "t_plus": "tplus",
        "random_tree": "tree",
        "random_outerplanar": "outerplanar",
        "outerplanar_triangulation": "triangulation",
        "random_series_parallel": "sp",
    }

    @classmethod
    def resolve(cls, family: str) -> str:
        """Canonical family name.

        Raises:
            InvalidParameterError: If the family is unknown
        """
        name = family.lower()
        name = cls._aliases.get(name, name)
        if name not in cls._families:
            raise InvalidParameterError(f"Unknown graph family: {family}")
        return name

    @classmethod
    def families(cls) -> List[str]:
        return sorted(cls._families)

    @classmethod
    def is_randomized(cls, family: str) -> bool:
        return cls._families[cls.resolve(family)][2]

    @classmethod
    def arity(cls, family: str) -> int:
        return cls._families[cls.resolve(family)][1]

    @classmethod
    def build(cls, family: str, params: Tuple[int, ...], seed: Optional[int] = None) -> Graph:
        name = cls.resolve(family)
        builder, arity, randomized = cls._families[name]
        if len(params) != arity:
            raise InvalidParameterError(
                f"{name} takes {arity} parameter(s), got {len(params)}"
            )
        logger.debug(f"Generating {name}{tuple(params)} seed={seed}")
        if randomized:
            return builder(*params, seed=seed)
        return builder(*params)


def gen(family: str, *params: int, seed: Optional[int] = None) -> Graph:
    """Generate a member of a named family.

    Args:
        family: Family name, e.g. ``"qk"`` or ``"q_graph"``
        params: Integer parameters of the family
        seed: Seed for randomized families

    Returns:
        The generated graph
    """
    return GraphFactory.build(family, tuple(int(p) for p in params), seed)
