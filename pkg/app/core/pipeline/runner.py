"""End-to-end pipeline: blocks, good decompositions, layered path decomposition."""
import logging
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterator, Optional, Union

from config.schema import OracleLimits

from ..base import VerificationResult
from ..decomposition.base import layered_width, verify_path_decomposition, verify_tree_decomposition
from ..decomposition.goodness import goodness
from ..errors import InvalidParameterError
from ..graph import Graph, blocks, is_layering
from .good_tree import (
    DISCONNECTED,
    GoodDecomposition,
    compose_blocks,
    good_decomposition_2conn,
    trivial_decomposition,
)
from .layered import LayeredPD, layered_bound, layered_path_decomposition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PipelineResult:
    """Both pipeline outputs for one graph.

    Iterating yields ``(good, layered)`` so the result unpacks like a pair.
    """

    good: GoodDecomposition
    layered: LayeredPD
    graph: Graph

    def __iter__(self) -> Iterator[Union[GoodDecomposition, LayeredPD]]:
        return iter((self.good, self.layered))

    @property
    def flags(self) -> FrozenSet[str]:
        return self.good.flags

    @property
    def bound(self) -> int:
        return layered_bound(self.good.report.width, self.good.report.subtree_pathwidth)

    def report(self) -> Dict[str, Any]:
        """The ``report/v1`` mapping."""
        return {
            "n": self.graph.n,
            "m": self.graph.m,
            "w": self.good.report.width,
            "p": self.good.report.subtree_pathwidth,
            "ell": self.layered.ell,
            "bound": self.bound,
            "flags": sorted(self.flags),
        }


def run_pipeline(
    g: Graph, root: Optional[int] = None, limits: Optional[OracleLimits] = None
) -> PipelineResult:
    """Good tree decomposition and layered path decomposition of ``g``.

    Args:
        g: Any non-empty graph; disconnected graphs are handled per component
        root: bfs root, smallest vertex by default
        limits: Oracle limits used for R-skeletons

    Returns:
        The pipeline result

    Raises:
        InvalidParameterError: If g is empty or root is not a vertex
    """
    if g.n == 0:
        raise InvalidParameterError("Cannot decompose the empty graph")
    if root is not None and not 0 <= root < g.n:
        raise InvalidParameterError(f"Invalid root vertex: {root}")
    forest = blocks(g)
    per_block = {}
    for block in forest.blocks:
        local = g.induced(sorted(block))
        if local.n >= 3:
            per_block[block] = good_decomposition_2conn(local, limits)
        else:
            per_block[block] = trivial_decomposition(local)
    good = compose_blocks(g, per_block)
    logger.info(
        f"Good decomposition: {good.td.tree.n} nodes, "
        f"(w, p) = ({good.report.width}, {good.report.subtree_pathwidth})"
    )
    layered = layered_path_decomposition(g, good, root)
    if DISCONNECTED in good.flags:
        logger.info(f"Input has {len(g.components())} components")
    return PipelineResult(good, layered, g)


def check_pipeline(g: Graph, result: PipelineResult) -> VerificationResult:
    """Run every verifier over both outputs and the width bound chain."""
    td = result.good.td
    check = verify_tree_decomposition(g, td)
    if not check:
        return VerificationResult.failed(f"good decomposition: {check.diagnostic}")
    measured = goodness(g, td)
    claimed = result.good.report
    if (measured.width, measured.subtree_pathwidth) != (claimed.width, claimed.subtree_pathwidth):
        return VerificationResult.failed(
            f"goodness claim ({claimed.width}, {claimed.subtree_pathwidth}) differs from "
            f"measured ({measured.width}, {measured.subtree_pathwidth})"
        )
    layered = result.layered
    check = verify_path_decomposition(g, layered.pd)
    if not check:
        return VerificationResult.failed(f"layered decomposition: {check.diagnostic}")
    check = is_layering(g, layered.layering.layers)
    if not check:
        return VerificationResult.failed(f"layering: {check.diagnostic}")
    ell = layered_width(layered.pd, layered.layering)
    if ell != layered.ell:
        return VerificationResult.failed(f"claimed layered width {layered.ell}, measured {ell}")
    if ell > result.bound:
        return VerificationResult.failed(f"layered width {ell} exceeds the bound {result.bound}")
    return VerificationResult.passed()
