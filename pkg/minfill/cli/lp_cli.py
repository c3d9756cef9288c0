import json

import click

from minfill.cli.common import domain_errors, format_option
from minfill.models.rational import format_rational
from minfill.models.standard_lp import OPTIMAL
from minfill.services.simplex_service import load_lp, solve


@click.command(name='lp-debug')
@click.argument('path', type=click.Path(dir_okay=False))
@format_option('text', 'json')
@domain_errors
def lp_debug(path, fmt):
    """Solve min c.x, A x = b, x >= 0 exactly and print the verdict."""
    result = solve(load_lp(path))
    if fmt == 'json':
        click.echo(json.dumps(result.to_dict(), indent=2))
        return
    click.echo(result.status)
    if result.status == OPTIMAL:
        click.echo(f"value: {format_rational(result.value)}")
        click.echo('x: ' + ' '.join(format_rational(v) for v in result.x))
