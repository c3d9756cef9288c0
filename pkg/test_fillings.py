import json
from fractions import Fraction

import pytest

from conftest import line_space
from minfill.errors import MetricError, MinFillError
from minfill.models.filling import WeightedTree
from minfill.models.metric_space import MetricSpace
from minfill.services.cut_service import build_cut_matrix
from minfill.services.filling_service import (filling_minima, find_gap_witness, find_violation, is_filling, mf,
                                              mf_equality_check, minimal_types, mpf_dual, mpf_primal, render_result,
                                              type_optima, weak_duality_gap)
from minfill.services.metric_service import random_space
from minfill.services.polytope_service import enumerate_vertices
from minfill.services.tree_service import STAR, enumerate_topologies, parse_newick


def test_find_violation(line4, caterpillar4):
    quarter = WeightedTree(caterpillar4, [Fraction(1, 4)] * 5)
    assert find_violation(line4, quarter) == (1, 2)
    assert not is_filling(line4, quarter)
    ones = WeightedTree(caterpillar4, [1] * 5)
    assert find_violation(line4, ones) is None
    zero = MetricSpace.from_pair_vector(4, [0] * 6)
    assert is_filling(zero, WeightedTree(caterpillar4, [0] * 5))


def test_weighted_tree_needs_one_weight_per_edge(caterpillar4):
    with pytest.raises(MinFillError):
        WeightedTree(caterpillar4, [1] * 4)
    with pytest.raises(MinFillError):
        WeightedTree(caterpillar4, [1, 1, 1, 1, -1], nonneg=True)


def test_mpf_on_the_line(line4, caterpillar4):
    result = mpf_dual(line4, caterpillar4)
    assert result.weight == 3
    assert result.witness_vertex.objective(line4) == 3
    assert result.witness_tour.sequence == (1, 2, 3, 4)
    assert result.optimal_omega.weight == 3
    assert is_filling(line4, result.optimal_omega)
    assert mpf_primal(line4, caterpillar4)[0] == 3
    assert mpf_primal(line4, caterpillar4, nonneg=True)[0] == 3


def test_three_points_fill_with_half_the_perimeter():
    space = MetricSpace.from_pair_vector(3, (3, 4, 5))
    result = mf(space)
    assert result.tree == STAR
    assert result.weight == 6
    assert result.witness_vertex.coords == (Fraction(1, 2),) * 3


def test_mf_of_the_line(line4, caterpillar4):
    result = mf(line4)
    assert result.weight == 3
    assert result.tree == caterpillar4
    assert minimal_types(line4) == [caterpillar4]


def test_mf_of_a_zero_space():
    zero = MetricSpace.from_pair_vector(4, [0] * 6)
    result = mf(zero)
    assert result.weight == 0
    assert len(minimal_types(zero)) == 3


def test_mf_ties_go_to_the_least_newick(square4):
    result = mf(square4)
    assert result.weight == 3
    assert result.tree == parse_newick('((1,4),(2,3));')
    assert result.tree.to_newick() == '((1,(2,3)),4);'
    assert len(minimal_types(square4)) == 3


def test_mf_is_at_most_every_mpf(rng):
    space = random_space(rng, 5)
    best = mf(space).weight
    weights = [mpf_dual(space, tree).weight for tree in enumerate_topologies(5)]
    assert best == min(weights)


def test_parallel_sweep_matches_serial(line4):
    assert mf(line4, jobs=2) == mf(line4, jobs=1)


def test_strong_duality_on_random_spaces(rng):
    for n in (4, 5):
        for _ in range(3):
            space = random_space(rng, n)
            for tree in enumerate_topologies(n):
                result = mpf_dual(space, tree, classical=True)
                assert result.weight == mpf_primal(space, tree)[0]
                assert result.classical_weight >= result.weight


def test_weak_duality(line4, caterpillar4):
    result = mpf_dual(line4, caterpillar4)
    gaps = [weak_duality_gap(line4, v, result.optimal_omega)
            for v in enumerate_vertices(build_cut_matrix(caterpillar4))]
    assert min(gaps) == 0
    assert all(gap >= 0 for gap in gaps)


def test_negative_weights_lower_a_fixed_type(square4, caterpillar4):
    free, wt = mpf_primal(square4, caterpillar4)
    classical, _ = mpf_primal(square4, caterpillar4, nonneg=True)
    assert (free, classical) == (3, 4)
    assert min(wt.omega) < 0
    assert mpf_dual(square4, caterpillar4, classical=True).classical_weight == 4


def test_gap_witness_search(rng):
    witness = find_gap_witness(rng)
    assert witness is not None
    space, tree, free, classical = witness
    assert free < classical
    assert mpf_primal(space, tree)[0] == free
    assert mpf_primal(space, tree, nonneg=True)[0] == classical


def test_minima_coincide(rng, square4):
    assert filling_minima(square4) == (3, 3)
    assert mf_equality_check(square4)
    assert mf_equality_check(line_space(5))
    for n in (4, 4, 4, 5):
        assert mf_equality_check(random_space(rng, n))


def test_type_optima(square4, caterpillar4):
    optima = type_optima(square4)
    assert [tree for tree, _, _, _ in optima] == list(enumerate_topologies(4))
    for tree, free, classical, wt in optima:
        assert free <= classical == wt.weight
        assert is_filling(square4, wt)
        assert min(wt.omega) >= 0
    assert (caterpillar4, 3, 4) in [(tree, free, classical) for tree, free, classical, _ in optima]


def test_monotone_and_scale_equivariant(rng):
    space = random_space(rng, 4)
    base = mf(space).weight
    assert mf(space.scaled(3)).weight == 3 * base
    assert mf(space.scaled(Fraction(1, 2))).weight == base / 2
    larger = space.with_distance(1, 3, space.distance(1, 3) + 5)
    assert mf(larger).weight >= base


def test_size_mismatch(line4):
    with pytest.raises(MetricError):
        mpf_dual(line4, parse_newick('((1,2),(3,(4,5)));'))
    with pytest.raises(MetricError):
        mf(MetricSpace.from_pair_vector(2, (1,)))


def test_render_result(line4, caterpillar4):
    result = mpf_dual(line4, caterpillar4, classical=True)
    payload = json.loads(render_result(result, 'json'))
    assert payload['tree'] == '((1,2),(3,4));'
    assert payload['weight'] == '3'
    assert payload['tour'] == [1, 2, 3, 4]
    assert payload['multiplicity'] == 1
    assert payload['classical_weight'] == '3'
    assert set(payload['omega']) == {'1', '2', '3', '4', '5'}

    text = render_result(result)
    assert 'weight: 3\n' in text
    assert 'formula: 1/2 (d12 + d14 + d23 + d34)\n' in text
    assert text.startswith('tree: ((1,2),(3,4));\n')
