import dataclasses
import json

import click

from minfill.cli.common import DomainFailure, format_option, jobs_option, resolve_jobs, settings_of
from minfill.services.verification_service import run_checks


@click.command()
@click.option('--slow', is_flag=True, help='Add the 7-point counts and the bound audits.')
@click.option('--seed', type=int, default=None, help='Seed of the randomized checks (default: MINFILL_SEED).')
@format_option('text', 'json')
@jobs_option
@click.pass_context
def verify(ctx, slow, seed, fmt, jobs):
    """Run the reproducibility checks; exit 0 iff all pass."""
    settings = settings_of(ctx)
    overrides = {'jobs': resolve_jobs(ctx, jobs)}
    if seed is not None:
        overrides['seed'] = seed
    results = run_checks(dataclasses.replace(settings, **overrides), slow)

    if fmt == 'json':
        click.echo(json.dumps([result.to_dict() for result in results], indent=2))
    else:
        for result in results:
            click.echo(str(result))

    failed = [result.name for result in results if not result.passed]
    if failed:
        raise DomainFailure(f"{len(failed)} of {len(results)} checks failed: {', '.join(failed)}")
