import json
import logging

import click
from rich.prompt import Confirm
from rich.table import Table

from app.cli.utils import console, exit_on_error, print_json, print_panel

from .manager import ConfigManager

logger = logging.getLogger(__name__)


def _manager(ctx: click.Context) -> ConfigManager:
    return ctx.obj["manager"]


@click.group()
def config():
    """Manage oracle limit configuration."""
    pass


@config.command()
@click.option("--json", "as_json", is_flag=True, help="Print limits and sources as JSON")
@click.pass_context
@exit_on_error
def show(ctx: click.Context, as_json: bool):
    """Show the effective oracle limits and where each one comes from."""
    manager = _manager(ctx)
    rows = manager.show_rows()
    if as_json:
        data = {name: {"value": int(value), "source": source} for name, value, source in rows}
        if console.is_terminal:
            print_json(data)
        else:
            click.echo(json.dumps(data, sort_keys=True, indent=2))
        return 0
    table = Table(title=f"Oracle limits ({manager.config_file})")
    table.add_column("Limit", style="cyan")
    table.add_column("Value", style="magenta")
    table.add_column("Source", style="green")
    for row in rows:
        table.add_row(*row)
    console.print(table)
    return 0


@config.command()
@click.option("--force", is_flag=True, help="Overwrite an existing config file")
@click.pass_context
@exit_on_error
def init(ctx: click.Context, force: bool):
    """Write a config file holding the default limits."""
    manager = _manager(ctx)
    if manager.init_config(force=force):
        print_panel(f"Configuration initialized at {manager.config_file}", title="config", border_style="green")
    else:
        click.echo(f"Configuration already exists at {manager.config_file}; use --force to overwrite")
    return 0


@config.command()
@click.option("--yes", is_flag=True, help="Do not ask for confirmation")
@click.pass_context
@exit_on_error
def reset(ctx: click.Context, yes: bool):
    """Reset the config file to the default limits."""
    manager = _manager(ctx)
    if not yes and not Confirm.ask("Reset the configuration to the default values?"):
        logger.warning("Configuration reset skipped")
        return 0
    manager.reset_config()
    print_panel("Configuration reset to defaults", title="config", border_style="green")
    return 0
