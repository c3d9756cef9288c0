import click

from minfill.cli.common import (domain_errors, format_option, jobs_option, metric_option, resolve_jobs,
                                resolve_tree, strict_option, tree_options)
from minfill.services.filling_service import minimal_types, mf, mpf_dual, render_result
from minfill.services.metric_service import load_metric


@click.command()
@metric_option
@tree_options
@strict_option
@click.option('--classical', is_flag=True, help='Also report the weight with non-negative edges.')
@format_option('text', 'json')
@jobs_option
@click.pass_context
@domain_errors
def mpf(ctx, metric_path, newick, size, shape, strict, classical, fmt, jobs):
    """Minimal parametric filling of one type (default: caterpillar on all points)."""
    space = load_metric(metric_path, strict)
    tree = resolve_tree(newick, size, shape, default_size=space.n)
    result = mpf_dual(space, tree, resolve_jobs(ctx, jobs), classical)
    click.echo(render_result(result, fmt), nl=False)


@click.command(name='mf')
@metric_option
@strict_option
@click.option('--all-types', is_flag=True, help='List every type attaining the minimum (text output).')
@format_option('text', 'json')
@jobs_option
@click.pass_context
@domain_errors
def mf_command(ctx, metric_path, strict, all_types, fmt, jobs):
    """Minimal filling: the least minimal parametric filling over all types."""
    space = load_metric(metric_path, strict)
    jobs = resolve_jobs(ctx, jobs)
    result = mf(space, jobs)
    click.echo(render_result(result, fmt), nl=False)
    if all_types and fmt == 'text':
        for tree in minimal_types(space, jobs):
            click.echo(f"minimal type: {tree.to_newick()}")
