import functools
import json
import logging
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import click
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.syntax import Syntax

from app.core.errors import BoundViolationError, DecompositionToolkitError

logger = logging.getLogger(__name__)

console = Console()
err_console = Console(stderr=True)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3


def exit_code_for(error: Exception) -> int:
    """Map an exception to the CLI exit code."""
    if isinstance(error, BoundViolationError):
        return EXIT_INTERNAL_ERROR
    if isinstance(error, (ValueError, OSError)):
        return EXIT_INPUT_ERROR
    return EXIT_INTERNAL_ERROR


def handle_error(error: Exception, debug: bool = False) -> int:
    """Handle and display errors with optional debug information.

    Returns:
        The exit code for the error
    """
    code = exit_code_for(error)
    logger.error(f"{type(error).__name__}: {error}")
    if debug:
        err_console.print_exception()
    else:
        err_console.print(f"[red]Error:[/red] {escape(str(error))}")
        if not isinstance(error, DecompositionToolkitError) or code == EXIT_INTERNAL_ERROR:
            err_console.print("\n[yellow]Tip:[/yellow] Use --debug for more information")
    return code


def exit_on_error(f: Callable[..., Optional[int]]) -> Callable[..., None]:
    """Run a command body that returns an exit code, mapping exceptions through handle_error."""

    @functools.wraps(f)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        ctx = click.get_current_context()
        debug = bool((ctx.obj or {}).get("debug", False))
        try:
            code = f(*args, **kwargs) or EXIT_OK
        except (click.ClickException, click.exceptions.Exit, click.Abort):
            raise
        except Exception as e:
            code = handle_error(e, debug)
        ctx.exit(code)

    return wrapper


def emit(text: str, out: Optional[Path] = None) -> None:
    """Write machine output to a file, or verbatim to stdout."""
    if out is None:
        click.echo(text, nl=False)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {out}")


def print_json(data: Dict[str, Any]) -> None:
    """Pretty-print JSON for a human reader."""
    console.print(Syntax(json.dumps(data, indent=2, sort_keys=True), "json"))


def print_panel(content: str, title: Optional[str] = None, border_style: str = "blue") -> None:
    console.print(Panel.fit(content, title=title, border_style=border_style))


def create_progress_bar() -> Progress:
    """Spinner on stderr; disabled when stderr is not a terminal."""
    return Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=err_console,
        transient=True,
        disable=not err_console.is_terminal,
    )
