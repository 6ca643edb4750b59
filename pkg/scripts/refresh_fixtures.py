#!/usr/bin/env python3
"""Regenerate the edge-list corpus under fixtures/ from the generators."""
import logging
import sys
from pathlib import Path

import click

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from app.core.corpus import write_corpus  # noqa: E402


@click.command()
@click.option("--out", "out_dir", type=click.Path(file_okay=False, path_type=Path),
              default=Path("fixtures"), help="Corpus directory")
@click.option("--deterministic-only", is_flag=True, help="Skip the seeded random families")
def main(out_dir: Path, deterministic_only: bool):
    """Refresh the fixture corpus."""
    logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    for path in write_corpus(out_dir, include_randomized=not deterministic_only):
        click.echo(f"Wrote {path}")
    click.echo("Fixture refresh complete!")


if __name__ == "__main__":
    main()
