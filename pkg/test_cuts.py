import pytest

from minfill import fixtures
from minfill.models.binary_tree import BinaryTree
from minfill.services.cut_service import (build_cut_matrix, path_column_mismatches, rational_rank,
                                          render_cut_matrix, row_sum_mismatches)
from minfill.services.tree_service import enumerate_topologies, named_tree


@pytest.mark.parametrize('shape, n', list(fixtures.GOLDEN))
def test_golden_matrices(shape, n):
    matrix = build_cut_matrix(named_tree(shape, n))
    assert matrix.rows == fixtures.GOLDEN[(shape, n)][0]


def test_shape(caterpillar5):
    matrix = build_cut_matrix(caterpillar5)
    assert (matrix.num_rows, matrix.num_cols) == (7, 10)
    assert matrix.column(0) == (1, 1, 0, 0, 0, 0, 0)


def test_boundary_rows_have_n_minus_one_ones():
    for tree in enumerate_topologies(6):
        matrix = build_cut_matrix(tree)
        assert all(sum(matrix.rows[i]) == 5 for i in range(6))


def test_rank_examples(caterpillar4):
    assert rational_rank(build_cut_matrix(caterpillar4)) == 5
    assert rational_rank(build_cut_matrix(BinaryTree(2, ((1, 2),)))) == 1
    assert rational_rank([[1, 2], [2, 4]]) == 1
    assert rational_rank([]) == 0


@pytest.mark.parametrize('n', [3, 4, 5, 6])
def test_rank_is_full_for_every_topology(n):
    for tree in enumerate_topologies(n):
        assert rational_rank(build_cut_matrix(tree)) == 2 * n - 3


@pytest.mark.slow
def test_rank_is_full_for_seven_points():
    for tree in enumerate_topologies(7):
        assert rational_rank(build_cut_matrix(tree)) == 11


def test_columns_are_path_indicators_and_rows_count_crossings():
    for n in (4, 5, 6):
        for tree in enumerate_topologies(n):
            matrix = build_cut_matrix(tree)
            assert path_column_mismatches(tree, matrix) == []
            assert row_sum_mismatches(tree, matrix) == []


def test_render(caterpillar4):
    lines = render_cut_matrix(build_cut_matrix(caterpillar4)).splitlines()
    assert lines[0] == '(1,2) (1,3) (1,4) (2,3) (2,4) (3,4)'
    assert lines[5] == '0 1 1 1 1 0'
    assert len(lines) == 6


def test_to_dict(caterpillar4):
    payload = build_cut_matrix(caterpillar4).to_dict()
    assert payload['n'] == 4
    assert payload['pairs'][-1] == '(3,4)'
    assert payload['rows'][4] == [0, 1, 1, 1, 1, 0]
