import json

import click

from minfill.cli.common import domain_errors, format_option, tree_options, resolve_tree
from minfill.services.cut_service import build_cut_matrix, rational_rank, render_cut_matrix
from minfill.services.tree_service import enumerate_topologies, moustaches, shape_key


@click.command()
@click.option('--n', 'size', type=click.IntRange(min=3), required=True, help='Number of boundary points.')
@format_option('text', 'json')
@domain_errors
def topologies(size, fmt):
    """List every labeled binary tree on --n boundary points."""
    trees = enumerate_topologies(size)
    if fmt == 'json':
        click.echo(json.dumps([
            {
                'newick': tree.to_newick(),
                'moustaches': [list(pair) for pair in moustaches(tree)],
                'shape': list(shape_key(tree)),
            }
            for tree in trees
        ], indent=2))
        return
    for tree in trees:
        click.echo(tree.to_newick())


@click.command()
@tree_options
@format_option('text', 'json')
@domain_errors
def cutmatrix(newick, size, shape, fmt):
    """Print the cut matrix C(G) of a tree."""
    tree = resolve_tree(newick, size, shape)
    matrix = build_cut_matrix(tree)
    if fmt == 'json':
        payload = matrix.to_dict()
        payload['tree'] = tree.to_newick()
        payload['rank'] = rational_rank(matrix)
        click.echo(json.dumps(payload, indent=2))
        return
    click.echo(render_cut_matrix(matrix), nl=False)
