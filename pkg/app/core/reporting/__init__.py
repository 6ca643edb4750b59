"""DOT export and corpus sweep reports."""
from ..spqr.skeleton import to_dot as spqr_to_dot
from .dot import decomposition_to_dot
from .sweep import COLUMNS, SweepReporter, SweepRow, corpus_files, run_sweep, sweep_file

__all__ = [
    "COLUMNS",
    "SweepReporter",
    "SweepRow",
    "corpus_files",
    "decomposition_to_dot",
    "run_sweep",
    "spqr_to_dot",
    "sweep_file",
]
