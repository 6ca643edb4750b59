import pytest

from app.core.corpus import CORPUS, write_corpus
from app.core.reporting import run_sweep
from app.core.serialization import read_edge_list

COMMITTED = [entry for entry in CORPUS if not entry.randomized]


class TestCorpus:
    @pytest.mark.parametrize("entry", COMMITTED, ids=[entry.filename for entry in COMMITTED])
    def test_committed_fixture_matches_its_entry(self, entry, fixtures_dir):
        assert (fixtures_dir / entry.filename).read_text() == entry.text()

    def test_filenames_are_unique(self):
        names = [entry.filename for entry in CORPUS]
        assert len(names) == len(set(names))

    def test_write_deterministic_only(self, tmp_path):
        written = write_corpus(tmp_path, include_randomized=False)
        assert [p.name for p in written] == [entry.filename for entry in COMMITTED]

    def test_randomized_entries_are_reproducible(self, tmp_path):
        first = write_corpus(tmp_path / "a")
        second = write_corpus(tmp_path / "b")
        for a, b in zip(first, second):
            assert a.read_text() == b.read_text()
        assert len(first) == len(CORPUS)

    def test_fixture_shapes(self, fixtures_dir):
        assert read_edge_list(fixtures_dir / "k23.txt").m == 6
        assert read_edge_list(fixtures_dir / "disconnected.txt").components() == [(0, 1, 2), (3, 4), (5,)]


@pytest.mark.slow
class TestCorpusSweep:
    def test_committed_fixtures_pass(self, fixtures_dir):
        reporter = run_sweep(fixtures_dir)
        failures = [(row.file, row.diagnostic) for row in reporter.rows if not row.ok]
        assert not failures
        assert len(reporter.rows) == len(COMMITTED)

    def test_randomized_entries_pass(self, tmp_path):
        write_corpus(tmp_path)
        reporter = run_sweep(tmp_path)
        assert reporter.failed == 0, reporter.to_tsv()
