import json
import logging

from jinja2 import Environment, PackageLoader, StrictUndefined

from minfill.models.formula import FormulaDocument, FormulaTerm
from minfill.services.cut_service import build_cut_matrix
from minfill.services.polytope_service import enumerate_vertices
from minfill.services.tour_service import perimeter_expression, tour_from_vertex, validate_multitour

logger = logging.getLogger(__name__)

_TEMPLATES = {
    'text': 'formula.txt.j2',
    'latex': 'formula.tex.j2',
}

_environment = Environment(
    loader=PackageLoader('minfill', 'templates'),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
    undefined=StrictUndefined,
)


def emit_formula(tree, jobs=1):
    """
    Closed-form weight of minimal parametric fillings of a tree type.

    Every vertex of the dual polyhedron becomes a multi-perimeter in the
    symbols d_ij; the weight is the maximum of the list. Terms follow the
    vertex order.

    Args:
        tree (BinaryTree): the type, n >= 3
        jobs (int): worker processes for vertex enumeration

    Returns:
        FormulaDocument: the terms with their vertices and tours
    """
    terms = []
    for vertex in enumerate_vertices(build_cut_matrix(tree), jobs):
        tour = tour_from_vertex(vertex, tree.n)
        validate_multitour(tree, tour)
        terms.append(FormulaTerm(
            vertex,
            tour,
            perimeter_expression(tour.w, tour.k, tree.n),
            perimeter_expression(tour.w, tour.k, tree.n, latex=True),
        ))
    logger.info(f"Formula for {tree.to_newick()} has {len(terms)} terms")
    return FormulaDocument(tree, tuple(terms))


def render_formula(document, fmt='text'):
    """
    Render a formula document.

    Args:
        document (FormulaDocument): the document
        fmt (str): "text", "latex" or "json"

    Returns:
        str: newline-terminated rendering
    """
    if fmt == 'json':
        return json.dumps(document.to_dict(), indent=2) + '\n'
    if fmt not in _TEMPLATES:
        raise ValueError(f"Unknown formula format {fmt!r}")
    template = _environment.get_template(_TEMPLATES[fmt])
    return template.render(tree=document.tree.to_newick(), terms=document.terms)
