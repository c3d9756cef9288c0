import json
import logging
from concurrent.futures import ProcessPoolExecutor

from minfill.errors import DualityError, MetricError, SimplexError
from minfill.models.filling import FillingResult, WeightedTree
from minfill.models.metric_space import pair_labels
from minfill.models.rational import format_rational
from minfill.models.standard_lp import OPTIMAL, StandardLP
from minfill.services.cut_service import build_cut_matrix
from minfill.services.metric_service import random_space
from minfill.services.polytope_service import enumerate_vertices
from minfill.services.simplex_service import solve, to_standard_form
from minfill.services.tour_service import perimeter_expression, tour_from_vertex, validate_multitour
from minfill.services.tree_service import enumerate_topologies

logger = logging.getLogger(__name__)


def _check_sizes(space, tree):
    if space.n != tree.n:
        raise MetricError(f"Space has {space.n} points but the tree has {tree.n} boundary leaves")


def find_violation(space, wt):
    """
    First pair whose tree path is shorter than its distance.

    Args:
        space (MetricSpace): the space
        wt (WeightedTree): weighted tree on the same boundary

    Returns:
        tuple or None: (i, j) with path weight < d_ij, or None for a filling
    """
    _check_sizes(space, wt.tree)
    for i, j in pair_labels(space.n):
        if wt.path_weight(i, j) < space.distance(i, j):
            return (i, j)
    return None


def is_filling(space, wt):
    """True iff every path weight dominates the distance between its ends."""
    return find_violation(space, wt) is None


def primal_program(space, tree, nonneg=False):
    """
    Standard form of: minimize the total edge weight subject to every path
    weight being at least the distance of its ends.

    Args:
        space (MetricSpace): the space
        tree (BinaryTree): the filling type
        nonneg (bool): require non-negative weights (classical fillings)

    Returns:
        tuple: (StandardLP, VariableMap)
    """
    _check_sizes(space, tree)
    inequalities = []
    for i, j in pair_labels(space.n):
        path = tree.path_edges(i, j)
        coefficients = [1 if e in path else 0 for e in tree.edge_ids]
        inequalities.append((coefficients, '>=', space.distance(i, j)))
    num_edges = len(tree.edges)
    free = () if nonneg else range(num_edges)
    return to_standard_form(num_edges, inequalities, (), free, [1] * num_edges)


def dual_program(space, tree):
    """
    The dual program as a standard-form LP: minimize -sum d_ij lambda_ij
    subject to C(G) lambda = 1, lambda >= 0.
    """
    _check_sizes(space, tree)
    matrix = build_cut_matrix(tree)
    return StandardLP(matrix.rows, (1,) * matrix.num_rows, tuple(-d for d in space.pair_vector()))


def mpf_primal(space, tree, nonneg=False):
    """
    Minimal parametric filling weight by the simplex oracle.

    Args:
        space (MetricSpace): the space
        tree (BinaryTree): the filling type
        nonneg (bool): classical fillings (weights >= 0) instead of generalized ones

    Returns:
        tuple: (weight, WeightedTree) with an optimal weighting

    Raises:
        SimplexError: if the solver does not report an optimum
    """
    lp, variables = primal_program(space, tree, nonneg)
    result = solve(lp)
    if result.status != OPTIMAL:
        raise SimplexError(f"Filling program for {tree.to_newick()} is {result.status}")
    wt = WeightedTree(tree, variables.recover(result.x), nonneg)
    if wt.weight != result.value:
        raise SimplexError(f"Recovered weights sum to {wt.weight}, solver reported {result.value}")
    return result.value, wt


def mpf_dual(space, tree, jobs=1, classical=False):
    """
    Minimal parametric filling weight as the best dual vertex.

    The weight is the largest value of sum d_ij lambda_ij over the vertices
    of the dual polyhedron; the first maximizing vertex in vertex order is
    the witness. Its multi-tour is reconstructed and checked against the
    tree, and the simplex oracle supplies an optimal weighting whose total
    must agree.

    Args:
        space (MetricSpace): the space
        tree (BinaryTree): the filling type
        jobs (int): worker processes for vertex enumeration
        classical (bool): also solve the non-negative program

    Returns:
        FillingResult: weight with its certificates

    Raises:
        DualityError: if the two routes disagree or the weighting is not a filling
    """
    _check_sizes(space, tree)
    vertices = enumerate_vertices(build_cut_matrix(tree), jobs)
    values = [v.objective(space) for v in vertices]
    best = max(values)
    witness = vertices[values.index(best)]

    tour = tour_from_vertex(witness, tree.n)
    validate_multitour(tree, tour)

    weight, wt = mpf_primal(space, tree)
    if weight != best:
        raise DualityError(f"Dual vertices give {best} but the primal minimum is {weight} "
                           f"for {tree.to_newick()}")
    violation = find_violation(space, wt)
    if violation is not None:
        raise DualityError(f"Primal optimum violates the path constraint of {violation}")

    classical_weight = mpf_primal(space, tree, nonneg=True)[0] if classical else None
    logger.debug(f"mpf({tree.to_newick()}) = {best}")
    return FillingResult(tree, best, witness, tour, wt, classical_weight)


def _solve_topology(space, tree):
    return mpf_dual(space, tree)


def _sweep(space, jobs):
    if space.n < 3:
        raise MetricError(f"Minimal fillings are computed for n >= 3, got n={space.n}")
    trees = enumerate_topologies(space.n)
    if jobs <= 1:
        return [_solve_topology(space, tree) for tree in trees]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_solve_topology, [space] * len(trees), trees))


def _best(results):
    return min(results, key=lambda r: (r.weight, r.tree.to_newick()))


def mf(space, jobs=1):
    """
    Minimal filling weight: the least mpf over all labeled topologies.

    Ties go to the lexicographically least Newick text of the tree.

    Args:
        space (MetricSpace): the space, n >= 3
        jobs (int): worker processes, one topology per task

    Returns:
        FillingResult: result for a minimizing tree
    """
    results = _sweep(space, jobs)
    best = _best(results)
    logger.info(f"mf = {best.weight} on {best.tree.to_newick()} among {len(results)} topologies")
    return best


def minimal_types(space, jobs=1):
    """All topologies attaining the minimal filling weight, in enumeration order."""
    results = _sweep(space, jobs)
    weight = _best(results).weight
    return [r.tree for r in results if r.weight == weight]


def type_optima(space):
    """
    Free-weight and non-negative optima of every topology.

    Returns:
        list: (tree, free optimum, non-negative optimum, non-negative WeightedTree)
        per topology, in enumeration order
    """
    optima = []
    for tree in enumerate_topologies(space.n):
        free = mpf_primal(space, tree)[0]
        classical, wt = mpf_primal(space, tree, nonneg=True)
        optima.append((tree, free, classical, wt))
    return optima


def filling_minima(space):
    """
    Least generalized and least classical filling weights over all topologies.

    Returns:
        tuple: (min of free-weight optima, min of non-negative optima)
    """
    optima = type_optima(space)
    return min(free for _, free, _, _ in optima), min(classical for _, _, classical, _ in optima)


def mf_equality_check(space):
    """
    Check that allowing negative weights does not lower the minimal filling.

    Args:
        space (MetricSpace): the space, n >= 3

    Returns:
        bool: True iff both minima coincide exactly
    """
    free, classical = filling_minima(space)
    if free != classical:
        logger.warning(f"Generalized minimum {free} differs from classical minimum {classical}")
    return free == classical


def find_gap_witness(rng, attempts=200, n=4):
    """
    Search random spaces for a type where negative weights pay off.

    Args:
        rng (random.Random): seeded generator
        attempts (int): number of random spaces to try
        n (int): number of points

    Returns:
        tuple or None: (space, tree, generalized weight, classical weight)
                       with the first strictly below the second
    """
    trees = enumerate_topologies(n)
    for attempt in range(attempts):
        space = random_space(rng, n)
        for tree in trees:
            free = mpf_primal(space, tree)[0]
            classical = mpf_primal(space, tree, nonneg=True)[0]
            if free < classical:
                logger.info(f"Gap witness after {attempt + 1} spaces on {tree.to_newick()}: {free} < {classical}")
                return space, tree, free, classical
    return None


def render_result(result, fmt='text'):
    """
    JSON document of a filling result, or a short human-readable summary.

    Args:
        result (FillingResult): the result
        fmt (str): "text" or "json"

    Returns:
        str: newline-terminated rendering
    """
    if fmt == 'json':
        return json.dumps(result.to_dict(), indent=2) + '\n'

    tour = result.witness_tour
    lines = [
        f"tree: {result.tree.to_newick()}",
        f"weight: {format_rational(result.weight)}",
        f"vertex: {result.witness_vertex}",
        f"tour: {tour}",
        f"formula: {perimeter_expression(tour.w, tour.k, tour.n)}",
        'omega: ' + ' '.join(f"e{e}={w}" for e, w in result.optimal_omega.to_dict().items()),
    ]
    if result.classical_weight is not None:
        lines.append(f"classical weight: {format_rational(result.classical_weight)}")
    return '\n'.join(lines) + '\n'


def weak_duality_gap(space, vertex, wt):
    """Total weight of a generalized filling minus the dual objective of a vertex; never negative."""
    return wt.weight - vertex.objective(space)

