"""The fixture corpus: named graphs with fixed seeds."""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, List, Tuple, Union

from .generators import gen
from .graph import Graph
from .serialization import write_edge_list

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusEntry:
    filename: str
    comment: str
    build: Callable[[], Graph]
    randomized: bool = False

    def text(self) -> str:
        return write_edge_list(self.build(), comment=self.comment)


def _edges(n: int, edges: List[Tuple[int, int]]) -> Callable[[], Graph]:
    return lambda: Graph.from_edges(n, edges)


CORPUS: Tuple[CorpusEntry, ...] = (
    CorpusEntry("path_8.txt", "path 8", lambda: gen("path", 8)),
    CorpusEntry("cycle_12.txt", "cycle 12", lambda: gen("cycle", 12)),
    CorpusEntry("cbt_3.txt", "cbt 3", lambda: gen("cbt", 3)),
    CorpusEntry("qk_2.txt", "qk 2", lambda: gen("qk", 2)),
    CorpusEntry("grid_3x4.txt", "grid 3 4", lambda: gen("grid", 3, 4)),
    CorpusEntry("k4.txt", "complete 4", lambda: gen("complete", 4)),
    CorpusEntry(
        "k4_minus_edge.txt",
        "complete 4 minus the edge 2-3",
        _edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    ),
    CorpusEntry(
        "hexagon_fan.txt",
        "fan triangulation of the hexagon",
        _edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)]),
    ),
    CorpusEntry(
        "bowtie.txt",
        "two triangles sharing vertex 2",
        _edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]),
    ),
    CorpusEntry("k23.txt", "K_{2,3}", _edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])),
    CorpusEntry(
        "disconnected.txt",
        "a path, an edge and an isolated vertex",
        _edges(6, [(0, 1), (1, 2), (3, 4)]),
    ),
    CorpusEntry(
        "petersen.txt",
        "Petersen graph",
        _edges(10, [
            (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (6, 9), (6, 8), (5, 8),
        ]),
    ),
    CorpusEntry("tree_40_s1.txt", "tree 40 seed=1", lambda: gen("tree", 40, seed=1), True),
    CorpusEntry("outerplanar_30_s7.txt", "outerplanar 30 seed=7", lambda: gen("outerplanar", 30, seed=7), True),
    CorpusEntry("triangulation_20_s3.txt", "triangulation 20 seed=3", lambda: gen("triangulation", 20, seed=3), True),
    CorpusEntry("sp_25_s5.txt", "sp 25 seed=5", lambda: gen("sp", 25, seed=5), True),
    CorpusEntry("halin_30_s11.txt", "halin 30 seed=11", lambda: gen("halin", 30, seed=11), True),
    CorpusEntry("grid_10x20.txt", "grid 10 20", lambda: gen("grid", 10, 20)),
)


def write_corpus(directory: Union[str, Path], include_randomized: bool = True) -> List[Path]:
    """Write every corpus entry into a directory.

    Returns:
        The written paths in corpus order
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for entry in CORPUS:
        if entry.randomized and not include_randomized:
            continue
        path = directory / entry.filename
        path.write_text(entry.text(), encoding="utf-8")
        written.append(path)
    logger.info(f"Wrote {len(written)} corpus files to {directory}")
    return written
