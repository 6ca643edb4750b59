"""Tree and path decompositions."""
from .base import (
    Bag,
    PathDecomposition,
    TreeDecomposition,
    layered_width,
    subtree_of,
    union_of_bags,
    verify_path_decomposition,
    verify_tree_decomposition,
    width,
)
from .combinators import ball, ball_restriction, blowup, combine_subtrees, local_pathwidth
from .goodness import (
    GoodnessReport,
    goodness,
    is_outerplanar,
    outerplanar_dual_decomposition,
    rooted_tree_decomposition,
)
from .tree_pathwidth import tree_pathwidth, tree_pathwidth_value

__all__ = [
    "Bag",
    "GoodnessReport",
    "PathDecomposition",
    "TreeDecomposition",
    "ball",
    "ball_restriction",
    "blowup",
    "combine_subtrees",
    "goodness",
    "is_outerplanar",
    "layered_width",
    "local_pathwidth",
    "outerplanar_dual_decomposition",
    "rooted_tree_decomposition",
    "subtree_of",
    "tree_pathwidth",
    "tree_pathwidth_value",
    "union_of_bags",
    "verify_path_decomposition",
    "verify_tree_decomposition",
    "width",
]
