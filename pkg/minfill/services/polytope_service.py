import json
import logging
import threading
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations, islice
from math import comb

from minfill.errors import RankError
from minfill.models.dual_vertex import DualVertex, least_multiplicity
from minfill.services.cut_service import rational_rank

logger = logging.getLogger(__name__)

_VERTEX_CACHE_SIZE = 512
_vertex_cache = OrderedDict()
_cache_lock = threading.Lock()


def _bareiss(a, size):
    """
    Fraction-free elimination of the leading size x size block of a, in place.

    Every entry stays an integer. Returns the determinant of that block, 0 if
    it is singular.
    """
    sign = 1
    previous = 1
    width = len(a[0])
    for k in range(size):
        if a[k][k] == 0:
            for r in range(k + 1, size):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        head = a[k]
        pivot = head[k]
        for i in range(k + 1, size):
            row = a[i]
            factor = row[k]
            for j in range(k + 1, width):
                row[j] = (row[j] * pivot - factor * head[j]) // previous
            row[k] = 0
        previous = pivot
    return sign * a[size - 1][size - 1]


def _basic_solution(rows, basis):
    """
    Solve B x = 1 for the columns in basis.

    Returns:
        list or None: exact solution, or None when B is singular
    """
    size = len(rows)
    a = [[row[c] for c in basis] + [1] for row in rows]
    if _bareiss(a, size) == 0:
        return None
    x = [Fraction(0)] * size
    for i in range(size - 1, -1, -1):
        total = Fraction(a[i][size])
        for j in range(i + 1, size):
            if a[i][j]:
                total -= a[i][j] * x[j]
        x[i] = total / a[i][i]
    return x


def _record_basis(steps, rhs, det, width, found):
    """Back-substitute the eliminated system over det and keep it if feasible."""
    size = len(steps)
    scaled = [0] * size
    for k in range(size - 1, -1, -1):
        row, column, _ = steps[k]
        total = rhs[row] * det
        for j in range(k + 1, size):
            entry = steps[j][1][row]
            if entry:
                total -= entry * scaled[j]
        value = total // column[row]
        if value and (value > 0) != (det > 0):
            return
        scaled[k] = value
    coords = [Fraction(0)] * width
    for (_, _, index), value in zip(steps, scaled):
        coords[index] = Fraction(value, det)
    coords = tuple(coords)
    # bases arrive in lexicographic order, so the first witness is the least
    if coords not in found:
        found[coords] = tuple(index for _, _, index in steps)


def _scan_vertices(rows, firsts):
    """
    Feasible bases among the column subsets whose least column is in firsts.

    Subsets are grown column by column in lexicographic order with fraction-free
    elimination shared along each prefix. A column that reduces to zero on the
    rows not yet pivoted is dependent on the prefix, and no extension of that
    prefix through it is tried.
    """
    size = len(rows)
    width = len(rows[0])
    found = {}
    steps = []

    def descend(candidates, free, rhs, previous, allowed):
        depth = len(steps)
        for c in allowed:
            column = candidates[c]
            row = next((i for i in free if column[i]), None)
            if row is None:
                continue
            pivot = column[row]
            head = rhs[row]
            rest = [i for i in free if i != row]
            reduced_rhs = list(rhs)
            for i in rest:
                reduced_rhs[i] = (rhs[i] * pivot - column[i] * head) // previous
            steps.append((row, column, c))
            if depth + 1 == size:
                _record_basis(steps, reduced_rhs, pivot, width, found)
            else:
                last = width - size + depth + 1
                child = {}
                for d in range(c + 1, width):
                    other = candidates[d]
                    factor = other[row]
                    reduced = list(other)
                    for i in rest:
                        reduced[i] = (other[i] * pivot - column[i] * factor) // previous
                    child[d] = reduced
                descend(child, rest, reduced_rhs, pivot, range(c + 1, last + 1))
            steps.pop()

    columns = {c: [r[c] for r in rows] for c in range(width)}
    descend(columns, list(range(size)), [1] * size, 1, [c for c in firsts if c <= width - size])
    return found


def _scan_determinants(rows, start, stop):
    size = len(rows)
    best = 0
    for basis in islice(combinations(range(len(rows[0])), size), start, stop):
        a = [[row[c] for c in basis] for row in rows]
        best = max(best, abs(_bareiss(a, size)))
    return best


def _ranges(total, jobs):
    if jobs <= 1:
        return [(0, total)]
    chunks = jobs * 4
    step = -(-total // chunks)
    return [(start, min(start + step, total)) for start in range(0, total, step)]


def _run_scan(worker, rows, tasks, jobs):
    if jobs <= 1:
        return [worker(rows, *task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, [rows] * len(tasks), *zip(*tasks)))


def _first_columns(rows, jobs):
    firsts = range(len(rows[0]) - len(rows) + 1)
    if jobs <= 1:
        return [(firsts,)]
    return [((c,),) for c in firsts]


def _require_full_rank(matrix):
    rank = rational_rank(matrix)
    if rank != matrix.num_rows:
        raise RankError(f"Cut matrix has rank {rank}, expected full row rank {matrix.num_rows}")


def enumerate_vertices(matrix, jobs=1):
    """
    All vertices of {lambda >= 0 : C lambda = 1} as basic feasible solutions.

    Every subset of num_rows columns is tried; invertible ones are solved
    exactly and kept when the solution is non-negative. Points reached from
    several bases appear once, with the lexicographically least basis.
    Results are memoized per matrix, for the most recent
    _VERTEX_CACHE_SIZE matrices.

    Args:
        matrix (CutMatrix): full row rank cut matrix
        jobs (int): worker processes for the subset scan

    Returns:
        tuple: DualVertex instances sorted by coordinates

    Raises:
        RankError: if the matrix is rank deficient
    """
    with _cache_lock:
        cached = _vertex_cache.get(matrix)
        if cached is not None:
            _vertex_cache.move_to_end(matrix)
    if cached is not None:
        return cached

    _require_full_rank(matrix)
    merged = {}
    for found in _run_scan(_scan_vertices, matrix.rows, _first_columns(matrix.rows, jobs), jobs):
        for coords, basis in found.items():
            if coords not in merged or basis < merged[coords]:
                merged[coords] = basis

    vertices = tuple(DualVertex.from_coords(coords, merged[coords]) for coords in sorted(merged))
    logger.info(f"Found {len(vertices)} vertices for a {matrix.num_rows}x{matrix.num_cols} cut matrix")

    with _cache_lock:
        _vertex_cache[matrix] = vertices
        _vertex_cache.move_to_end(matrix)
        while len(_vertex_cache) > _VERTEX_CACHE_SIZE:
            _vertex_cache.popitem(last=False)
    return vertices


def vertex_multiplicity(vertex):
    """Least k >= 1 with 2k * coords integral."""
    return least_multiplicity(vertex.coords)


def max_basis_determinant(matrix, jobs=1):
    """
    Largest |det| over all square column submatrices of full size.

    Args:
        matrix (CutMatrix): full row rank cut matrix
        jobs (int): worker processes

    Returns:
        int: the maximal absolute minor
    """
    _require_full_rank(matrix)
    total = comb(matrix.num_cols, matrix.num_rows)
    best = max(_run_scan(_scan_determinants, matrix.rows, _ranges(total, jobs), jobs))
    logger.info(f"Maximal basis determinant of a {matrix.num_rows}x{matrix.num_cols} cut matrix: {best}")
    return best


def is_angular(vertex, matrix):
    """
    Check the basis certificate of a vertex: the basis columns are
    independent, coords vanish off the basis, and solving on the basis
    reproduces coords.
    """
    if len(vertex.basis) != matrix.num_rows:
        return False
    if any(x != 0 for c, x in enumerate(vertex.coords) if c not in vertex.basis):
        return False
    solution = _basic_solution(matrix.rows, vertex.basis)
    if solution is None:
        return False
    return all(vertex.coords[c] == x for c, x in zip(vertex.basis, solution))


def satisfies_system(vertex, matrix):
    """C lambda = 1 and lambda >= 0, exactly."""
    if any(x < 0 for x in vertex.coords):
        return False
    return all(sum(x for a, x in zip(row, vertex.coords) if a) == 1 for row in matrix.rows)


def shared_vertices(first, second):
    """
    Coinciding coordinate vectors of two vertex lists.

    Returns:
        list: 1-based (index in first, index in second) pairs
    """
    positions = {v.coords: index for index, v in enumerate(second, start=1)}
    return [(index, positions[v.coords]) for index, v in enumerate(first, start=1) if v.coords in positions]


def render_vertices(vertices, fmt='text'):
    """One "1/2k: (w...)" line per vertex, or the JSON array of vertex objects."""
    if fmt == 'json':
        return json.dumps([v.to_dict() for v in vertices], indent=2) + '\n'
    return ''.join(f"{v}\n" for v in vertices)
