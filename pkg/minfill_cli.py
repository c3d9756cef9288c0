#!/usr/bin/env python3

import logging
import sys

import click
from dotenv import load_dotenv

# Load environment variables from .env file if present
load_dotenv()

from minfill import __version__
from minfill.config import get_settings
from minfill.errors import ConfigError

# Import and register commands
from minfill.cli.metric_cli import validate
from minfill.cli.tree_cli import cutmatrix, topologies
from minfill.cli.polytope_cli import formula, tours, vertices
from minfill.cli.filling_cli import mf_command, mpf
from minfill.cli.verify_cli import verify
from minfill.cli.lp_cli import lp_debug
from minfill.cli.common import DomainFailure


@click.group()
@click.version_option(__version__, prog_name='minfill')
@click.option('--log-level', default=None, help='Log level on stderr (default: MINFILL_LOG_LEVEL or WARNING).')
@click.pass_context
def cli(ctx, log_level):
    """Minimal fillings of finite pseudo-metric spaces in exact arithmetic."""
    try:
        settings = get_settings()
    except ConfigError as e:
        raise DomainFailure(str(e))
    logging.basicConfig(
        level=(log_level or settings.log_level).upper(),
        stream=sys.stderr,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )
    ctx.obj = settings


cli.add_command(validate)
cli.add_command(topologies)
cli.add_command(cutmatrix)
cli.add_command(vertices)
cli.add_command(tours)
cli.add_command(formula)
cli.add_command(mpf)
cli.add_command(mf_command)
cli.add_command(verify)
cli.add_command(lp_debug)

if __name__ == '__main__':
    cli()
