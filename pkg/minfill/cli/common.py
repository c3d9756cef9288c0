import functools

import click

from minfill.config import get_settings
from minfill.errors import MinFillError
from minfill.services.tree_service import SHAPES, named_tree, parse_newick


class DomainFailure(click.ClickException):
    """A MinFillError surfaced on the command line; exits with status 1."""
    exit_code = 1


def domain_errors(command):
    """Report MinFillError from a command body as a DomainFailure."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except MinFillError as e:
            raise DomainFailure(str(e))
    return wrapper


def format_option(*choices):
    return click.option('--format', 'fmt', type=click.Choice(choices), default=choices[0],
                        show_default=True, help='Output format.')


jobs_option = click.option('--jobs', type=click.IntRange(min=1), default=None,
                           help='Worker processes (default: MINFILL_JOBS or 1).')

metric_option = click.option('--metric', 'metric_path', type=click.Path(dir_okay=False), required=True,
                             help='Distance matrix file (.json or the text format).')

strict_option = click.option('--strict', is_flag=True, help='Also require the triangle inequality.')


def tree_options(command):
    """--tree NEWICK, or --n INT with an optional --shape NAME."""
    command = click.option('--shape', type=click.Choice(SHAPES), default=None,
                           help='Named tree on --n points (default: caterpillar).')(command)
    command = click.option('--n', 'size', type=click.IntRange(min=3), default=None,
                           help='Number of boundary points.')(command)
    command = click.option('--tree', 'newick', default=None, help='Tree in Newick form.')(command)
    return command


def resolve_tree(newick, size, shape, default_size=None):
    """
    The tree named by --tree or by --n/--shape.

    Raises:
        click.UsageError: if no tree is named or both forms are used
    """
    if newick and (size or shape):
        raise click.UsageError('Use either --tree or --n/--shape, not both')
    if newick:
        return parse_newick(newick)
    size = size or default_size
    if size is None:
        raise click.UsageError('Name a tree with --tree or --n')
    return named_tree(shape or 'caterpillar', size)


def settings_of(ctx):
    return ctx.obj if ctx.obj is not None else get_settings()


def resolve_jobs(ctx, jobs):
    return jobs if jobs is not None else settings_of(ctx).jobs
