"""Exception hierarchy for the decomposition toolkit.

Input problems derive from ``ValueError`` so callers that only know the
standard library still catch them; internal consistency failures derive from
``RuntimeError`` because they signal a bug rather than bad input.
"""
from typing import Optional


class DecompositionToolkitError(Exception):
    """Base class for all toolkit errors."""


class GraphFormatError(DecompositionToolkitError, ValueError):
    """An edge list or graph description could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidParameterError(DecompositionToolkitError, ValueError):
    """A generator or operation parameter is out of range."""


class NotConnectedError(DecompositionToolkitError, ValueError):
    """The operation needs a connected graph."""

    def __init__(self, message: str, vertex: Optional[int] = None):
        self.vertex = vertex
        super().__init__(message)


class NotTwoConnectedError(DecompositionToolkitError, ValueError):
    """The operation needs a 2-connected graph."""

    def __init__(self, message: str, cut_vertex: Optional[int] = None):
        self.cut_vertex = cut_vertex
        super().__init__(message)


class InvalidDecompositionError(DecompositionToolkitError, ValueError):
    """A decomposition handed to a combinator failed verification."""


class SchemaError(DecompositionToolkitError, ValueError):
    """A JSON artifact does not match its declared schema."""


class OracleLimitError(DecompositionToolkitError, ValueError):
    """An exact oracle was asked to run beyond a configured size limit."""

    def __init__(self, limit: str, value: int, size: int):
        self.limit = limit
        self.value = value
        self.size = size
        super().__init__(f"{limit}={value} exceeded: input has {size} vertices")


class SpqrConstructionError(DecompositionToolkitError, RuntimeError):
    """The recursive SPQR construction met a state its definition excludes."""


class ParentCliqueError(DecompositionToolkitError, RuntimeError):
    """A parent clique was not a clique or exceeded the width bound."""


class BoundViolationError(DecompositionToolkitError, RuntimeError):
    """A proven width bound failed on a concrete instance."""


class TreePathwidthError(DecompositionToolkitError, RuntimeError):
    """The tree pathwidth labelling and its witness disagree."""
