import json

import click

from minfill.cli.common import domain_errors, format_option, jobs_option, resolve_jobs, resolve_tree, tree_options
from minfill.services.cut_service import build_cut_matrix
from minfill.services.formula_service import emit_formula, render_formula
from minfill.services.polytope_service import enumerate_vertices, render_vertices
from minfill.services.tour_service import render_tour, tour_from_vertex, validate_multitour


@click.command()
@tree_options
@format_option('text', 'json')
@jobs_option
@click.pass_context
@domain_errors
def vertices(ctx, newick, size, shape, fmt, jobs):
    """Enumerate the vertices of the dual polyhedron of a tree."""
    tree = resolve_tree(newick, size, shape)
    found = enumerate_vertices(build_cut_matrix(tree), resolve_jobs(ctx, jobs))
    click.echo(render_vertices(found, fmt), nl=False)


@click.command()
@tree_options
@format_option('text', 'latex', 'json')
@jobs_option
@click.pass_context
@domain_errors
def tours(ctx, newick, size, shape, fmt, jobs):
    """Reconstruct and check the multi-tour behind every vertex."""
    tree = resolve_tree(newick, size, shape)
    found = enumerate_vertices(build_cut_matrix(tree), resolve_jobs(ctx, jobs))
    rebuilt = []
    for vertex in found:
        tour = tour_from_vertex(vertex, tree.n)
        validate_multitour(tree, tour)
        rebuilt.append(tour)
    if fmt == 'json':
        click.echo(json.dumps([tour.to_dict() for tour in rebuilt], indent=2))
        return
    for tour in rebuilt:
        click.echo(render_tour(tour, latex=fmt == 'latex'))


@click.command()
@tree_options
@format_option('text', 'latex', 'json')
@jobs_option
@click.pass_context
@domain_errors
def formula(ctx, newick, size, shape, fmt, jobs):
    """Closed-form weight of minimal parametric fillings of a tree type."""
    tree = resolve_tree(newick, size, shape)
    document = emit_formula(tree, resolve_jobs(ctx, jobs))
    click.echo(render_formula(document, fmt), nl=False)
