from fractions import Fraction

import pytest

from minfill import fixtures
from minfill.errors import TourError
from minfill.models.dual_vertex import DualVertex
from minfill.models.metric_space import MetricSpace, pair_count, pair_index
from minfill.models.multi_tour import MultiTour
from minfill.services.metric_service import random_space
from minfill.services.tour_service import (crossing_counts, multi_perimeter, perimeter_expression, render_tour,
                                           side_exit_counts, tour_from_vertex, validate_multitour)


def vertex_of(coords):
    return DualVertex.from_coords(coords, [c for c, x in enumerate(coords) if x][:1])


def test_tour_from_four_point_vertices(caterpillar4):
    first = tour_from_vertex(vertex_of(fixtures.VERTICES_4[0]), 4)
    assert first.sequence == (1, 2, 3, 4)
    assert first.k == 1
    assert first.w == (1, 0, 1, 1, 0, 1)
    second = tour_from_vertex(vertex_of(fixtures.VERTICES_4[1]), 4)
    assert second.sequence == (1, 2, 4, 3)
    assert validate_multitour(caterpillar4, first) == 1
    assert validate_multitour(caterpillar4, second) == 1


def test_five_point_tours_are_hamiltonian(caterpillar5):
    for coords in fixtures.VERTICES_5:
        tour = tour_from_vertex(vertex_of(coords), 5)
        assert tour.k == 1
        assert sorted(tour.sequence) == [1, 2, 3, 4, 5]
        assert tour.sequence[0] == 1
        assert validate_multitour(caterpillar5, tour) == 1


def test_snowflake_doubled_tour(snowflake6):
    tour = tour_from_vertex(vertex_of(fixtures.VERTICES_6_SNOWFLAKE[4]), 6)
    assert tour.k == 2
    assert len(tour.sequence) == 12
    assert tour.w[pair_index(1, 2, 6)] == 2
    assert tour.w[pair_index(3, 4, 6)] == 2
    assert tour.w[pair_index(5, 6, 6)] == 2
    assert validate_multitour(snowflake6, tour) == 2
    assert set(crossing_counts(snowflake6, tour).values()) == {4}


def test_unmatched_tour_is_rejected(caterpillar4):
    with pytest.raises(TourError):
        validate_multitour(caterpillar4, MultiTour.from_sequence((1, 3, 2, 4), 4))


def test_doubled_hamiltonian_tour(caterpillar4, line4):
    single = MultiTour.from_sequence((1, 2, 3, 4), 4)
    double = MultiTour.from_sequence((1, 2, 3, 4, 1, 2, 3, 4), 4)
    assert double.k == 2
    assert double.w == tuple(2 * w for w in single.w)
    assert validate_multitour(caterpillar4, double) == 2
    assert multi_perimeter(double, line4) == multi_perimeter(single, line4) == 3


def test_tour_size_must_match_tree(caterpillar4):
    with pytest.raises(TourError):
        validate_multitour(caterpillar4, MultiTour.from_sequence((1, 2, 3, 4, 5), 5))


def test_side_exit_counts(caterpillar4):
    tour = MultiTour.from_sequence((1, 2, 3, 4), 4)
    exits = side_exit_counts(caterpillar4, tour)
    assert len(exits) == 2 * len(caterpillar4.edges)
    assert set(exits.values()) == {1}


def test_multi_perimeter(line4):
    tour = MultiTour.from_sequence((1, 2, 3, 4), 4)
    assert multi_perimeter(tour, line4) == 3
    zero = MetricSpace.from_pair_vector(4, [0] * 6)
    assert multi_perimeter(tour, zero) == 0
    halves = line4.scaled(Fraction(1, 2))
    assert multi_perimeter(tour, halves) == Fraction(3, 2)


@pytest.mark.parametrize('shape, n', list(fixtures.GOLDEN))
def test_perimeter_equals_vertex_objective(shape, n, rng):
    spaces = [random_space(rng, n) for _ in range(5)]
    for coords in fixtures.GOLDEN[(shape, n)][1]:
        vertex = vertex_of(coords)
        tour = tour_from_vertex(vertex, n)
        for space in spaces:
            assert multi_perimeter(tour, space) == vertex.objective(space)


def test_perimeter_expression():
    assert perimeter_expression((1, 0, 1, 1, 0, 1), 1, 4) == '1/2 (d12 + d14 + d23 + d34)'
    assert perimeter_expression((1, 0, 1, 1, 0, 1), 1, 4, latex=True) == \
        '\\frac{1}{2}\\big(d_{12}+d_{14}+d_{23}+d_{34}\\big)'
    weights = tour_from_vertex(vertex_of(fixtures.VERTICES_6_SNOWFLAKE[4]), 6).w
    assert perimeter_expression(weights, 2, 6) == fixtures.FORMULAS_6_SNOWFLAKE[4]


@pytest.mark.parametrize('shape, n', list(fixtures.GOLDEN))
def test_tabulated_formulas_match_their_vertices(shape, n):
    _, vertices, formulas = fixtures.GOLDEN[(shape, n)]
    assert len(vertices) == len(formulas)
    for position, (coords, formula) in enumerate(zip(vertices, formulas), start=1):
        vertex = vertex_of(coords)
        assert perimeter_expression(vertex.weights, vertex.multiplicity, n) == formula, \
            f"{shape} on {n} points, vertex {position}"


def test_perimeter_expression_with_two_digit_labels():
    weights = [0] * pair_count(10)
    weights[pair_index(1, 10, 10)] = 1
    assert perimeter_expression(weights, 1, 10) == '1/2 (d1,10)'
    assert perimeter_expression(weights, 1, 10, latex=True) == '\\frac{1}{2}\\big(d_{1,10}\\big)'


def test_render_tour():
    tour = MultiTour.from_sequence((1, 2, 3, 4), 4)
    assert render_tour(tour) == 'k=1: 1-2-3-4  1/2 (d12 + d14 + d23 + d34)'


@pytest.mark.parametrize('coords', [
    (1, 0, 0, 0, 0, 1),
    (Fraction(1, 2), 0, 0, 0, 0, 0),
])
def test_tour_from_non_vertex_fails(coords):
    with pytest.raises(TourError):
        tour_from_vertex(vertex_of(coords), 4)


@pytest.mark.parametrize('sequence, n', [
    ((1, 2, 3), 4),
    ((), 4),
    ((1, 1, 2, 3), 4),
    ((1, 2, 1, 3), 4),
])
def test_invalid_sequences(sequence, n):
    with pytest.raises(TourError):
        MultiTour.from_sequence(sequence, n)


def test_inconsistent_counts():
    with pytest.raises(TourError):
        MultiTour(4, (1, 2, 3, 4), 1, (1, 1, 1, 1, 1, 1))
    with pytest.raises(TourError):
        MultiTour(4, (1, 2, 3, 4), 2, (1, 0, 1, 1, 0, 1))
