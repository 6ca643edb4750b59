"""Check JSON artifacts against a graph."""
import logging

from .base import VerificationResult
from .decomposition.base import (
    layered_width,
    subtree_of,
    verify_path_decomposition,
    verify_tree_decomposition,
)
from .decomposition.goodness import goodness
from .decomposition.tree_pathwidth import tree_pathwidth_value
from .graph import Graph, is_layering
from .minors import verify_minor_model
from .pipeline.layered import layered_bound
from .serialization import (
    DecompositionDocument,
    Document,
    GoodnessDocument,
    MinorModelDocument,
    PipelineDocument,
    ReportDocument,
    SpqrDocument,
)
from .spqr.validation import verify_spqr

logger = logging.getLogger(__name__)


def _verify_decomposition(g: Graph, doc: DecompositionDocument) -> VerificationResult:
    if doc.kind == "tree":
        result = verify_tree_decomposition(g, doc.to_tree())
    else:
        result = verify_path_decomposition(g, doc.to_path())
    if not result or doc.layering is None:
        return result
    return is_layering(g, doc.layering)


def _verify_goodness(g: Graph, doc: GoodnessDocument) -> VerificationResult:
    td = doc.decomposition.to_tree()
    result = verify_tree_decomposition(g, td)
    if not result:
        return result
    measured = goodness(g, td)
    if measured.width > doc.w:
        return VerificationResult.failed(f"claimed width {doc.w}, measured {measured.width}")
    if measured.subtree_pathwidth > doc.p:
        v = measured.witness_vertex
        return VerificationResult.failed(
            f"claimed subtree pathwidth {doc.p}, but T[{v}] has pathwidth "
            f"{tree_pathwidth_value(subtree_of(td, v))}"
        )
    return VerificationResult.passed()


def _verify_report(g: Graph, doc: ReportDocument) -> VerificationResult:
    if (doc.n, doc.m) != (g.n, g.m):
        return VerificationResult.failed(f"report is for n={doc.n}, m={doc.m}; graph has n={g.n}, m={g.m}")
    if doc.bound != layered_bound(doc.w, doc.p):
        return VerificationResult.failed(f"bound {doc.bound} does not match w={doc.w}, p={doc.p}")
    if doc.ell > doc.bound:
        return VerificationResult.failed(f"layered width {doc.ell} exceeds the bound {doc.bound}")
    return VerificationResult.passed()


def _verify_pipeline(g: Graph, doc: PipelineDocument) -> VerificationResult:
    result = _verify_report(g, doc.report)
    if not result:
        return result
    claim = GoodnessDocument(w=doc.report.w, p=doc.report.p, decomposition=doc.good)
    result = _verify_goodness(g, claim)
    if not result:
        return VerificationResult.failed(f"good decomposition: {result.diagnostic}")
    result = _verify_decomposition(g, doc.layered)
    if not result:
        return VerificationResult.failed(f"layered decomposition: {result.diagnostic}")
    layering = doc.layered.to_layering()
    if layering is None:
        return VerificationResult.failed("layered decomposition carries no layering")
    ell = layered_width(doc.layered.to_path(), layering)
    if ell != doc.report.ell:
        return VerificationResult.failed(f"report claims layered width {doc.report.ell}, measured {ell}")
    return VerificationResult.passed()


def verify_artifact(g: Graph, doc: Document) -> VerificationResult:
    """Dispatch to the verifier matching the artifact's schema."""
    if isinstance(doc, DecompositionDocument):
        result = _verify_decomposition(g, doc)
    elif isinstance(doc, SpqrDocument):
        result = verify_spqr(g, doc.to_spqr())
    elif isinstance(doc, MinorModelDocument):
        result = verify_minor_model(g, doc.pattern(), doc.model())
    elif isinstance(doc, GoodnessDocument):
        result = _verify_goodness(g, doc)
    elif isinstance(doc, ReportDocument):
        result = _verify_report(g, doc)
    else:
        result = _verify_pipeline(g, doc)
    logger.info(f"{doc.schema_id}: {'ok' if result else result.diagnostic}")
    return result
