import json

import click

from minfill.cli.common import domain_errors, format_option, metric_option, strict_option
from minfill.services.metric_service import load_metric, metric_to_dict, render_metric, triangle_violation


@click.command()
@metric_option
@strict_option
@format_option('text', 'json')
@domain_errors
def validate(metric_path, strict, fmt):
    """Check a distance matrix and print it in canonical form."""
    space = load_metric(metric_path, strict)
    witness = triangle_violation(space)
    if fmt == 'json':
        payload = metric_to_dict(space)
        payload['triangle_inequality'] = witness is None
        click.echo(json.dumps(payload, indent=2))
        return
    if witness is None:
        click.echo(f"valid: {space.n} points, triangle inequality holds")
    else:
        click.echo(f"valid: {space.n} points, pseudo-metric without the triangle inequality at {witness}")
    click.echo(render_metric(space), nl=False)
