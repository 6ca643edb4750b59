"""Edge-list text format and the JSON artifact documents.

Every document carries a ``schema`` field naming its version. Canonical JSON
uses sorted keys, sorted lists, two-space indentation and a trailing newline,
so identical inputs give byte-identical files.
"""
import json
import logging
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple, Type, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .base import normalize_edge
from .decomposition.base import PathDecomposition, TreeDecomposition
from .decomposition.goodness import GoodnessReport
from .errors import GraphFormatError, SchemaError
from .graph import Graph, Layering
from .minors import MinorModel
from .pipeline.runner import PipelineResult
from .spqr.skeleton import Skeleton, SpqrTree

logger = logging.getLogger(__name__)


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header and ``u v`` edge lines; ``#`` starts a comment line.

    Raises:
        GraphFormatError: On a malformed header, a wrong edge count, a bad id,
            a self-loop or a duplicate edge; the error names the line
    """
    header: Optional[Tuple[int, int]] = None
    edges = []
    seen = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", line=number)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {line!r}", line=number)
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError(f"negative count in header {line!r}", line=number)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"vertex id outside 0..{n - 1} in {line!r}", line=number)
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}", line=number)
        edge = normalize_edge(a, b)
        if edge in seen:
            raise GraphFormatError(f"duplicate edge {edge[0]}-{edge[1]}", line=number)
        seen.add(edge)
        edges.append(edge)
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header announces {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def read_edge_list(path: Union[str, Path]) -> Graph:
    """Read an edge-list file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"Cannot read {path}: {e}")
        raise GraphFormatError(f"cannot read {path}: {e}") from e
    return parse_edge_list(text)


def write_edge_list(g: Graph, comment: Optional[str] = None) -> str:
    """Edge-list text with sorted edges and a trailing newline."""
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


class _Document(BaseModel):
    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    def to_json(self) -> str:
        """Canonical JSON text."""
        data = self.model_dump(by_alias=True, mode="json", exclude_none=True)
        return json.dumps(data, sort_keys=True, indent=2) + "\n"


class DecompositionDocument(_Document):
    """``decomposition/v1``: a tree or path decomposition, optionally with a layering."""

    schema_id: Literal["decomposition/v1"] = Field(default="decomposition/v1", alias="schema")
    kind: Literal["tree", "path"]
    nodes: List[int]
    edges: List[Tuple[int, int]] = Field(default_factory=list)
    bags: Dict[int, List[int]]
    layering: Optional[List[List[int]]] = None

    @classmethod
    def from_tree(cls, td: TreeDecomposition, layering: Optional[Layering] = None) -> "DecompositionDocument":
        return cls(
            kind="tree",
            nodes=list(td.tree.vertices),
            edges=td.tree.sorted_edges(),
            bags={x: list(bag) for x, bag in enumerate(td.bags)},
            layering=layering.as_lists() if layering is not None else None,
        )

    @classmethod
    def from_path(cls, pd: PathDecomposition, layering: Optional[Layering] = None) -> "DecompositionDocument":
        return cls(
            kind="path",
            nodes=list(range(len(pd.bags))),
            bags={x: list(bag) for x, bag in enumerate(pd.bags)},
            layering=layering.as_lists() if layering is not None else None,
        )

    def _ordered_bags(self) -> List[List[int]]:
        missing = [x for x in self.nodes if x not in self.bags]
        if missing:
            raise SchemaError(f"node {missing[0]} has no bag")
        if sorted(self.nodes) != list(range(len(self.nodes))):
            raise SchemaError("nodes must be 0..s-1")
        return [self.bags[x] for x in range(len(self.nodes))]

    def to_tree(self) -> TreeDecomposition:
        """The decomposition as a tree decomposition; paths become path-shaped trees."""
        bags = self._ordered_bags()
        if self.kind == "path":
            return PathDecomposition.from_bags(bags).as_tree_decomposition()
        try:
            tree = Graph.from_edges(len(bags), self.edges)
        except GraphFormatError as e:
            raise SchemaError(f"invalid decomposition tree: {e}") from e
        return TreeDecomposition.from_bags(tree, bags)

    def to_path(self) -> PathDecomposition:
        if self.kind != "path":
            raise SchemaError("document holds a tree decomposition, not a path decomposition")
        return PathDecomposition.from_bags(self._ordered_bags())

    def to_layering(self) -> Optional[Layering]:
        return Layering.from_layers(self.layering) if self.layering is not None else None


class VirtualEdgeDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    edge: Tuple[int, int]
    pair: int = Field(..., description="Tree neighbour holding the twin edge")


class SpqrNodeDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: int
    kind: Literal["S", "P", "R"]
    vertices: List[int]
    real_edges: List[Tuple[int, int]]
    virtual_edges: List[VirtualEdgeDocument]


class SpqrDocument(_Document):
    """``spqr/v1``: skeletons with paired virtual edges and the tree edges."""

    schema_id: Literal["spqr/v1"] = Field(default="spqr/v1", alias="schema")
    n: int = Field(..., ge=0)
    nodes: List[SpqrNodeDocument]
    tree_edges: List[Tuple[int, int]]

    @classmethod
    def from_spqr(cls, s: SpqrTree) -> "SpqrDocument":
        nodes = [
            SpqrNodeDocument(
                id=a,
                kind=skeleton.kind,
                vertices=list(skeleton.vertices),
                real_edges=list(skeleton.real_edges),
                virtual_edges=[VirtualEdgeDocument(edge=e, pair=b) for e, b in skeleton.virtual_edges],
            )
            for a, skeleton in enumerate(s.skeletons)
        ]
        return cls(n=s.n, nodes=nodes, tree_edges=s.tree.sorted_edges())

    def to_spqr(self) -> SpqrTree:
        nodes = sorted(self.nodes, key=lambda node: node.id)
        if [node.id for node in nodes] != list(range(len(nodes))):
            raise SchemaError("SPQR node ids must be 0..s-1")
        try:
            tree = Graph.from_edges(len(nodes), self.tree_edges)
        except GraphFormatError as e:
            raise SchemaError(f"invalid SPQR tree: {e}") from e
        skeletons = tuple(
            Skeleton(
                node.kind,
                tuple(sorted(node.vertices)),
                tuple(sorted(normalize_edge(*e) for e in node.real_edges)),
                tuple(sorted((normalize_edge(*v.edge), v.pair) for v in node.virtual_edges)),
            )
            for node in nodes
        )
        return SpqrTree(self.n, tree, skeletons)


class ReportDocument(_Document):
    """``report/v1``: measured goodness, layered width and the bound."""

    schema_id: Literal["report/v1"] = Field(default="report/v1", alias="schema")
    n: int
    m: int
    w: int
    p: int
    ell: int
    bound: int
    flags: List[str] = Field(default_factory=list)


class MinorModelDocument(_Document):
    """``minor-model/v1``: a pattern graph and branch sets in the host."""

    schema_id: Literal["minor-model/v1"] = Field(default="minor-model/v1", alias="schema")
    pattern_n: int = Field(..., ge=0)
    pattern_edges: List[Tuple[int, int]]
    branch_sets: Dict[int, List[int]]

    @classmethod
    def from_model(cls, h: Graph, model: MinorModel) -> "MinorModelDocument":
        return cls(pattern_n=h.n, pattern_edges=h.sorted_edges(), branch_sets=model.as_lists())

    def pattern(self) -> Graph:
        try:
            return Graph.from_edges(self.pattern_n, self.pattern_edges)
        except GraphFormatError as e:
            raise SchemaError(f"invalid pattern graph: {e}") from e

    def model(self) -> MinorModel:
        return MinorModel.from_sets(self.branch_sets)


class GoodnessDocument(_Document):
    """``goodness/v1``: a claim that a tree decomposition is ``(w, p)``-good."""

    schema_id: Literal["goodness/v1"] = Field(default="goodness/v1", alias="schema")
    w: int
    p: int
    decomposition: DecompositionDocument

    @classmethod
    def from_report(cls, td: TreeDecomposition, report: GoodnessReport) -> "GoodnessDocument":
        return cls(
            w=report.width,
            p=report.subtree_pathwidth,
            decomposition=DecompositionDocument.from_tree(td),
        )


class PipelineDocument(_Document):
    """``pipeline/v1``: the report and both decompositions of one run."""

    schema_id: Literal["pipeline/v1"] = Field(default="pipeline/v1", alias="schema")
    report: ReportDocument
    good: DecompositionDocument
    layered: DecompositionDocument
    provenance: List[str] = Field(default_factory=list)

    @classmethod
    def from_result(cls, result: PipelineResult) -> "PipelineDocument":
        return cls(
            report=ReportDocument(**result.report()),
            good=DecompositionDocument.from_tree(result.good.td),
            layered=DecompositionDocument.from_path(result.layered.pd, result.layered.layering),
            provenance=list(result.good.provenance),
        )


Document = Union[
    DecompositionDocument,
    SpqrDocument,
    ReportDocument,
    MinorModelDocument,
    GoodnessDocument,
    PipelineDocument,
]

DOCUMENT_TYPES: Dict[str, Type[_Document]] = {
    "decomposition/v1": DecompositionDocument,
    "spqr/v1": SpqrDocument,
    "report/v1": ReportDocument,
    "minor-model/v1": MinorModelDocument,
    "goodness/v1": GoodnessDocument,
    "pipeline/v1": PipelineDocument,
}


def load_document(text: str) -> Document:
    """Parse a JSON artifact and validate it against its declared schema.

    Raises:
        SchemaError: If the text is not JSON, names no known schema, or fails validation
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise SchemaError("artifact must be a JSON object")
    schema = data.get("schema")
    if schema not in DOCUMENT_TYPES:
        raise SchemaError(f"unknown schema {schema!r}; expected one of {sorted(DOCUMENT_TYPES)}")
    try:
        return DOCUMENT_TYPES[schema].model_validate(data)
    except ValidationError as e:
        logger.error(f"{schema} artifact failed validation")
        raise SchemaError(f"{schema} artifact is invalid: {e}") from e
