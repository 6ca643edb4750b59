"""Brute-force ground truth for small graphs."""
from .layered_pathwidth import enumerate_layerings, exact_layered_pathwidth
from .limits import check_limit
from .minor_search import MinorSearchResult, minor_contains
from .pathwidth import exact_pathwidth

__all__ = [
    "MinorSearchResult",
    "check_limit",
    "enumerate_layerings",
    "exact_layered_pathwidth",
    "exact_pathwidth",
    "minor_contains",
]
