"""SPQR trees of 2-connected graphs."""
from .builder import build_spqr
from .skeleton import NodeKind, Skeleton, SpqrTree, induced_subtree, realize, to_dot
from .validation import verify_spqr

__all__ = [
    "NodeKind",
    "Skeleton",
    "SpqrTree",
    "build_spqr",
    "induced_subtree",
    "realize",
    "to_dot",
    "verify_spqr",
]
