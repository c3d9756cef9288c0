import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor

from minfill import fixtures
from minfill.errors import MinFillError
from minfill.models.check_result import CheckResult
from minfill.services.cut_service import (build_cut_matrix, path_column_mismatches, rational_rank,
                                          row_sum_mismatches)
from minfill.services.filling_service import find_violation, mpf_dual, mpf_primal, type_optima
from minfill.services.formula_service import emit_formula
from minfill.services.metric_service import random_space
from minfill.services.polytope_service import (enumerate_vertices, is_angular, max_basis_determinant,
                                               satisfies_system, shared_vertices)
from minfill.services.tour_service import multi_perimeter, tour_from_vertex, validate_multitour
from minfill.services.tree_service import double_factorial, enumerate_topologies, group_by_shape, named_tree

logger = logging.getLogger(__name__)


def _duality_cases(tree, spaces):
    """
    Both mpf routes, the non-negative optimum and weak duality for one type.

    Returns:
        tuple: (pairs checked, failure detail or None)
    """
    vertices = enumerate_vertices(build_cut_matrix(tree))
    for solved, space in enumerate(spaces):
        # mpf_dual raises DualityError when the routes disagree
        result = mpf_dual(space, tree)
        classical, wt = mpf_primal(space, tree, nonneg=True)
        if find_violation(space, wt) is not None:
            return solved, f"non-negative optimum is not a filling for {tree.to_newick()}"
        if classical < result.weight:
            return solved, f"classical weight {classical} below generalized {result.weight}"
        if any(v.objective(space) > classical for v in vertices):
            return solved, f"weak duality fails for {tree.to_newick()}"
    return len(spaces), None


class VerificationService:
    """
    Runs the reproducibility checks behind the verify command.

    The fast checks cover the worked examples for 4, 5 and 6 points, the
    rank of every cut matrix up to 7 points, strong duality and the
    generalized-equals-classical minimum on seeded random spaces, and the
    coherence of tours with vertices. The slow checks add the 7-point vertex
    counts and the multiplicity and determinant bounds.
    """

    def __init__(self, settings):
        """
        Args:
            settings (Settings): seed, sample sizes and worker count
        """
        self.settings = settings

    def run_checks(self, slow=False):
        """
        Run every check and collect the outcomes.

        Args:
            slow (bool): include the 7-point counts and the bound audits

        Returns:
            list: CheckResult per check, in a fixed order
        """
        checks = [
            ('golden n=4', lambda: self._check_golden([('caterpillar', 4)])),
            ('golden n=5', lambda: self._check_golden([('caterpillar', 5)])),
            ('golden n=6', self._check_golden_6),
            ('full rank n=3..7', self._check_rank),
            ('strong duality', self._check_duality),
            ('generalized minimum equals classical', self._check_minima),
            ('tour coherence', self._check_tours),
        ]
        if slow:
            checks.insert(3, ('vertex counts n=7', self._check_counts_7))
            checks.insert(5, ('multiplicity bound', self._check_bounds))

        results = []
        for name, check in checks:
            started = time.perf_counter()
            try:
                passed, detail = check()
            except MinFillError as e:
                passed, detail = False, f"{type(e).__name__}: {str(e)}"
            result = CheckResult(name, passed, detail, time.perf_counter() - started)
            if passed:
                logger.info(f"Check passed: {result}")
            else:
                logger.error(f"Check failed: {result}")
            results.append(result)
        return results

    def _check_golden(self, keys):
        for shape, n in keys:
            matrix_rows, expected, formulas = fixtures.GOLDEN[(shape, n)]
            tree = named_tree(shape, n)
            matrix = build_cut_matrix(tree)
            if matrix.rows != matrix_rows:
                return False, f"cut matrix of the {shape} on {n} points differs from the table"
            vertices = enumerate_vertices(matrix, self.settings.jobs)
            if {v.coords for v in vertices} != set(expected):
                return False, f"{shape} on {n} points has {len(vertices)} vertices, not the tabulated {len(expected)}"
            terms = {term.text for term in emit_formula(tree, self.settings.jobs).terms}
            if terms != set(formulas):
                return False, f"formulas of the {shape} on {n} points differ: {sorted(terms ^ set(formulas))}"
        return True, 'matrices, vertices and formulas match'

    def _check_golden_6(self):
        passed, detail = self._check_golden([('caterpillar', 6), ('snowflake', 6)])
        if not passed:
            return passed, detail

        caterpillar = enumerate_vertices(build_cut_matrix(named_tree('caterpillar', 6)), self.settings.jobs)
        snowflake = enumerate_vertices(build_cut_matrix(named_tree('snowflake', 6)), self.settings.jobs)
        doubled = sum(1 for v in snowflake if v.multiplicity == 2)
        if doubled != 4 or any(v.multiplicity > 2 for v in snowflake):
            return False, f"snowflake has {doubled} vertices of multiplicity 2, expected 4"
        if any(v.multiplicity != 1 for v in caterpillar):
            return False, 'caterpillar has a vertex of multiplicity above 1'

        common = {caterpillar[a - 1].coords for a, _ in shared_vertices(caterpillar, snowflake)}
        tabulated = set()
        for a, b in fixtures.SHARED_6:
            coords = fixtures.VERTICES_6_CATERPILLAR[a - 1]
            if coords != fixtures.VERTICES_6_SNOWFLAKE[b - 1]:
                return False, f"tabulated vertex {a} of the caterpillar is not vertex {b} of the snowflake"
            tabulated.add(coords)
        if common != tabulated:
            return False, f"{len(common)} shared vertices found, expected {len(tabulated)}"
        return True, '8 and 12 vertices, 4 of multiplicity 2, 4 shared vertices'

    def _check_counts_7(self):
        details = []
        for (shape, n), (count, top) in fixtures.VERTEX_COUNTS_7.items():
            vertices = enumerate_vertices(build_cut_matrix(named_tree(shape, n)), self.settings.jobs)
            largest = max(v.multiplicity for v in vertices)
            if len(vertices) != count or largest != top:
                return False, (f"{shape} on {n} points: {len(vertices)} vertices with multiplicity up to "
                               f"{largest}, expected {count} up to {top}")
            details.append(f"{shape}: {count}")
        return True, ', '.join(details)

    def _check_rank(self):
        total = 0
        for n in range(3, 8):
            trees = enumerate_topologies(n)
            if len(trees) != double_factorial(2 * n - 5):
                return False, f"{len(trees)} topologies on {n} points, expected {double_factorial(2 * n - 5)}"
            for tree in trees:
                matrix = build_cut_matrix(tree)
                rank = rational_rank(matrix)
                if rank != 2 * n - 3:
                    return False, f"rank {rank} for {tree.to_newick()}"
                if path_column_mismatches(tree, matrix) or row_sum_mismatches(tree, matrix):
                    return False, f"cut matrix of {tree.to_newick()} disagrees with its paths"
            total += len(trees)
        return True, f"full rank for all {total} topologies"

    def _check_bounds(self):
        observed = {}
        for n in range(3, 8):
            trees = enumerate_topologies(n)
            if n == 7:
                trees = [group[0] for group in group_by_shape(trees).values()]
            bound = 2 ** (2 * n - 5)
            for tree in trees:
                matrix = build_cut_matrix(tree)
                vertices = enumerate_vertices(matrix, self.settings.jobs)
                largest = max(v.multiplicity for v in vertices)
                if largest > bound:
                    return False, f"multiplicity {largest} above {bound} for {tree.to_newick()}"
                observed[n] = max(observed.get(n, 1), largest)
                if n <= 6:
                    determinant = max_basis_determinant(matrix, self.settings.jobs)
                    if determinant > bound:
                        return False, f"minor {determinant} above {bound} for {tree.to_newick()}"
        return True, 'largest multiplicities ' + ', '.join(f"n={n}: {k}" for n, k in observed.items())

    def _random_spaces(self, count, sizes):
        rng = random.Random(self.settings.seed)
        return [random_space(rng, sizes[index % len(sizes)]) for index in range(count)]

    def _check_duality(self):
        spaces = self._random_spaces(self.settings.random_spaces, (4, 5, 6))
        tasks = []
        for n in (4, 5, 6):
            group = [space for space in spaces if space.n == n]
            if group:
                tasks.extend((tree, group) for tree in enumerate_topologies(n))
        if self.settings.jobs <= 1 or not tasks:
            outcomes = [_duality_cases(tree, group) for tree, group in tasks]
        else:
            with ProcessPoolExecutor(max_workers=self.settings.jobs) as pool:
                outcomes = list(pool.map(_duality_cases, *zip(*tasks)))
        for solved, failure in outcomes:
            if failure is not None:
                return False, failure
        return True, f"{sum(solved for solved, _ in outcomes)} space/type pairs agree exactly"

    def _check_minima(self):
        count = self.settings.theorem_spaces
        for index, space in enumerate(self._random_spaces(count, (4, 5))):
            optima = type_optima(space)
            for tree, _, _, wt in optima:
                if find_violation(space, wt) is not None:
                    return False, f"space {index}: non-negative optimum is not a filling for {tree.to_newick()}"
            free = min(value for _, value, _, _ in optima)
            classical = min(value for _, _, value, _ in optima)
            if free != classical:
                return False, f"space {index}: generalized {free} != classical {classical}"
        return True, f"{count} spaces, minima equal"

    def _check_tours(self):
        spaces = {n: self._random_spaces(20, (n,)) for n in (4, 5, 6)}
        checked = 0
        for shape, n in fixtures.GOLDEN:
            tree = named_tree(shape, n)
            matrix = build_cut_matrix(tree)
            for vertex in enumerate_vertices(matrix, self.settings.jobs):
                if not (satisfies_system(vertex, matrix) and is_angular(vertex, matrix)):
                    return False, f"vertex {vertex} of the {shape} on {n} points is not a basic solution"
                tour = tour_from_vertex(vertex, n)
                m = validate_multitour(tree, tour)
                if m != vertex.multiplicity:
                    return False, f"tour {tour} has m={m}, vertex multiplicity {vertex.multiplicity}"
                for space in spaces[n]:
                    if multi_perimeter(tour, space) != vertex.objective(space):
                        return False, f"multi-perimeter of {tour} differs from the vertex objective"
                checked += 1
        return True, f"{checked} vertices reconstructed and matched"


def run_checks(settings, slow=False):
    """Run the verification checks with the given settings."""
    return VerificationService(settings).run_checks(slow)
