"""Good tree decompositions and layered path decompositions."""
from .good_tree import (
    DISCONNECTED,
    INEXACT_SKELETON,
    GoodDecomposition,
    compose_blocks,
    good_decomposition_2conn,
    trivial_decomposition,
)
from .layered import LayeredPD, chordal_fill, layered_bound, layered_path_decomposition, parent_clique
from .runner import PipelineResult, check_pipeline, run_pipeline

__all__ = [
    "DISCONNECTED",
    "INEXACT_SKELETON",
    "GoodDecomposition",
    "LayeredPD",
    "PipelineResult",
    "check_pipeline",
    "chordal_fill",
    "compose_blocks",
    "good_decomposition_2conn",
    "layered_bound",
    "layered_path_decomposition",
    "parent_clique",
    "run_pipeline",
    "trivial_decomposition",
]
