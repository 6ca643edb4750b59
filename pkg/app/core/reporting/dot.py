"""DOT export for tree and path decompositions."""
import logging
from typing import Optional, Sequence, Union

from ..decomposition.base import PathDecomposition, TreeDecomposition

logger = logging.getLogger(__name__)


def _bag_label(bag: Sequence[int]) -> str:
    return "{" + ", ".join(str(v) for v in bag) + "}"


def decomposition_to_dot(
    decomposition: Union[TreeDecomposition, PathDecomposition],
    name: str = "decomposition",
    provenance: Optional[Sequence[str]] = None,
) -> str:
    """Render a decomposition as an undirected DOT graph.

    Each node is a box labelled with its id and bag. Path decompositions are
    drawn left to right.

    Args:
        decomposition: Tree or path decomposition
        name: Graph name
        provenance: Optional per-node origin strings appended to the labels

    Returns:
        DOT text with a trailing newline
    """
    if isinstance(decomposition, PathDecomposition):
        td = decomposition.as_tree_decomposition()
        header = ["  rankdir=LR;"]
    else:
        td = decomposition
        header = []
    if provenance is not None and len(provenance) != len(td.bags):
        logger.warning(f"Ignoring provenance: {len(provenance)} entries for {len(td.bags)} nodes")
        provenance = None
    lines = [f"graph {name} {{", *header, "  node [shape=box];"]
    for x, bag in enumerate(td.bags):
        label = f"{x}: {_bag_label(bag)}"
        if provenance is not None:
            label += f"\\n{provenance[x]}"
        lines.append(f'  b{x} [label="{label}"];')
    for x, y in td.tree.sorted_edges():
        lines.append(f"  b{x} -- b{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
