"""Corpus sweeps: run the pipeline and its verifiers over a directory of edge lists."""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, List, Optional, Union

from rich.table import Table

from config.schema import OracleLimits

from ..errors import BoundViolationError, DecompositionToolkitError
from ..pipeline.runner import check_pipeline, run_pipeline
from ..serialization import read_edge_list

logger = logging.getLogger(__name__)

COLUMNS = ("file", "n", "m", "w", "p", "ell", "bound", "status")

STATUS_OK = "ok"
STATUS_FAILED = "failed"
STATUS_BOUND = "bound-violation"
STATUS_ERROR = "error"


@dataclass(frozen=True)
class SweepRow:
    """One corpus file's outcome; numeric fields are None when the run stopped early."""

    file: str
    n: Optional[int] = None
    m: Optional[int] = None
    w: Optional[int] = None
    p: Optional[int] = None
    ell: Optional[int] = None
    bound: Optional[int] = None
    status: str = STATUS_OK
    diagnostic: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK

    def cells(self) -> List[str]:
        values = [self.file, self.n, self.m, self.w, self.p, self.ell, self.bound, self.status]
        return ["-" if value is None else str(value) for value in values]


def corpus_files(directory: Union[str, Path]) -> List[Path]:
    """Edge-list files of a corpus directory in name order."""
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"Not a directory: {directory}")
    return sorted(path for path in directory.iterdir() if path.is_file() and path.suffix == ".txt")


def sweep_file(path: Path, limits: Optional[OracleLimits] = None) -> SweepRow:
    """Decompose and verify one file; failures become the row's status."""
    name = path.name
    try:
        g = read_edge_list(path)
    except DecompositionToolkitError as e:
        logger.error(f"{name}: {e}")
        return SweepRow(name, status=STATUS_ERROR, diagnostic=str(e))
    try:
        result = run_pipeline(g, limits=limits)
    except BoundViolationError as e:
        logger.error(f"{name}: {e}")
        return SweepRow(name, g.n, g.m, status=STATUS_BOUND, diagnostic=str(e))
    except DecompositionToolkitError as e:
        logger.error(f"{name}: {e}")
        return SweepRow(name, g.n, g.m, status=STATUS_ERROR, diagnostic=str(e))
    report = result.report()
    check = check_pipeline(g, result)
    if not check:
        logger.error(f"{name}: {check.diagnostic}")
    return SweepRow(
        name,
        report["n"],
        report["m"],
        report["w"],
        report["p"],
        report["ell"],
        report["bound"],
        status=STATUS_OK if check else STATUS_FAILED,
        diagnostic=check.diagnostic,
    )


class SweepReporter:
    """Collects sweep rows and renders them as TSV or a rich table."""

    def __init__(self, rows: Iterable[SweepRow] = ()):
        self.rows: List[SweepRow] = list(rows)

    def add(self, row: SweepRow) -> None:
        self.rows.append(row)

    @property
    def passed(self) -> int:
        return sum(1 for row in self.rows if row.ok)

    @property
    def failed(self) -> int:
        return len(self.rows) - self.passed

    def summary(self) -> str:
        return f"{self.passed} passed, {self.failed} failed"

    def to_tsv(self) -> str:
        """Header, one line per file in input order, and the pass/fail count."""
        lines = ["\t".join(COLUMNS)]
        lines.extend("\t".join(row.cells()) for row in self.rows)
        lines.append(f"# {self.summary()}")
        return "\n".join(lines) + "\n"

    def to_table(self, title: str = "Sweep") -> Table:
        table = Table(title=title)
        for column in COLUMNS:
            table.add_column(column, style="cyan" if column == "file" else None)
        for row in self.rows:
            cells = row.cells()
            style = "green" if row.ok else "red"
            cells[-1] = f"[{style}]{cells[-1]}[/{style}]"
            table.add_row(*cells)
        table.caption = self.summary()
        return table


def run_sweep(
    directory: Union[str, Path],
    limits: Optional[OracleLimits] = None,
    on_file: Optional[Callable[[Path], None]] = None,
) -> SweepReporter:
    """Sweep every ``.txt`` file of a directory, in name order.

    Args:
        directory: Corpus directory
        limits: Oracle limits for R-skeletons
        on_file: Called before each file, for progress display

    Returns:
        The reporter holding one row per file
    """
    reporter = SweepReporter()
    files = corpus_files(directory)
    logger.info(f"Sweeping {len(files)} files in {directory}")
    for path in files:
        if on_file is not None:
            on_file(path)
        reporter.add(sweep_file(path, limits))
    logger.info(f"Sweep finished: {reporter.summary()}")
    return reporter
