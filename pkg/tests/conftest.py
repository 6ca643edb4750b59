from pathlib import Path

import pytest
from click.testing import CliRunner

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture(autouse=True)
def clean_limits_env(monkeypatch):
    """Keep a developer's LAYERED_DECOMP_LIMITS out of the tests."""
    monkeypatch.delenv("LAYERED_DECOMP_LIMITS", raising=False)
