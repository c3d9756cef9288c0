import logging
from fractions import Fraction
from functools import lru_cache

from minfill.models.cut_matrix import CutMatrix
from minfill.models.metric_space import pair_index, pair_labels

logger = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def build_cut_matrix(tree):
    """
    Cut matrix of the complete graph on the boundary for the cuts of a tree.

    Args:
        tree (BinaryTree): the tree, n >= 2

    Returns:
        CutMatrix: (2n-3) x n(n-1)/2 matrix in canonical row and column order
    """
    pairs = pair_labels(tree.n)
    rows = []
    for cut in tree.cuts:
        rows.append(tuple(1 if cut.separates(i, j) else 0 for i, j in pairs))
    return CutMatrix(tree.n, tuple(rows))


def rational_rank(matrix):
    """
    Rank over the rationals by exact Gaussian elimination.

    The pivot of each column is the entry of largest magnitude among the
    remaining rows.

    Args:
        matrix (CutMatrix or sequence of rows): the matrix

    Returns:
        int: the rank
    """
    rows = matrix.rows if isinstance(matrix, CutMatrix) else matrix
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return 0
    rank = 0
    for col in range(len(work[0])):
        pivot = max(range(rank, len(work)), key=lambda r: abs(work[r][col]), default=None)
        if pivot is None or work[pivot][col] == 0:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        head = work[rank]
        for r in range(rank + 1, len(work)):
            factor = work[r][col] / head[col]
            if factor:
                work[r] = [a - factor * b for a, b in zip(work[r], head)]
        rank += 1
        if rank == len(work):
            break
    return rank


def path_column_mismatches(tree, matrix):
    """Pairs whose column differs from the indicator of their tree path."""
    bad = []
    for i, j in pair_labels(tree.n):
        col = pair_index(i, j, tree.n)
        path = tree.path_edges(i, j)
        expected = tuple(1 if e in path else 0 for e in tree.edge_ids)
        if matrix.column(col) != expected:
            bad.append((i, j))
    return bad


def row_sum_mismatches(tree, matrix):
    """Edges whose row sum is not |side1| * |side2| of their cut."""
    return [
        cut.edge for cut, row in zip(tree.cuts, matrix.rows)
        if sum(row) != cut.crossing_pairs
    ]


def render_cut_matrix(matrix):
    """Header line of pair labels, then one space-separated 0/1 line per edge."""
    lines = [' '.join(f"({i},{j})" for i, j in matrix.pairs)]
    lines.extend(' '.join(str(x) for x in row) for row in matrix.rows)
    return '\n'.join(lines) + '\n'
