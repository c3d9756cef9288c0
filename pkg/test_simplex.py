import json
from fractions import Fraction
from pathlib import Path

import pytest

from minfill.errors import SimplexError
from minfill.models.standard_lp import INFEASIBLE, OPTIMAL, UNBOUNDED, StandardLP
from minfill.services import simplex_service
from minfill.services.filling_service import dual_program, primal_program
from minfill.services.metric_service import random_space
from minfill.services.simplex_service import load_lp, solve, to_standard_form
from minfill.services.tree_service import enumerate_topologies

DATA = Path(__file__).parent / 'data'


def test_standard_form_of_the_filling_program(line4, caterpillar4):
    lp, variables = primal_program(line4, caterpillar4)
    assert lp.num_rows == 6
    assert lp.num_vars == 16
    assert variables.slack_columns == tuple(range(10, 16))
    assert all(neg is not None for _, neg in variables.columns)
    lp, variables = primal_program(line4, caterpillar4, nonneg=True)
    assert lp.num_vars == 11
    assert all(neg is None for _, neg in variables.columns)


def test_slack_signs():
    lp, variables = to_standard_form(1, [([1], '<=', 1), ([1], '>=', 0)], objective=[-1])
    assert lp.A == ((1, 1, 0), (1, 0, -1))
    assert variables.slack_columns == (1, 2)
    result = solve(lp)
    assert result.status == OPTIMAL
    assert result.value == -1
    assert variables.recover(result.x) == (1,)


def test_equalities_only_have_no_slacks():
    lp, variables = to_standard_form(2, equalities=[([1, 1], 2)], objective=[1, 0])
    assert lp.num_vars == 2
    assert variables.slack_columns == ()
    result = solve(lp)
    assert result.value == 0
    assert variables.recover(result.x) == (0, 2)


def test_free_variable_is_split():
    lp, variables = to_standard_form(1, [([1], '>=', -3)], free_vars=[0], objective=[1])
    assert lp.c == (1, -1, 0)
    result = solve(lp)
    assert result.value == -3
    assert variables.recover(result.x) == (-3,)


def test_dual_program_of_the_line(line4, caterpillar4):
    result = solve(dual_program(line4, caterpillar4))
    assert result.status == OPTIMAL
    assert result.value == -3


def test_infeasible():
    lp = StandardLP(((1,), (1,)), (0, 1), (0,))
    assert solve(lp).status == INFEASIBLE


def test_unbounded():
    assert solve(StandardLP((), (), (-1,))).status == UNBOUNDED
    assert solve(StandardLP(((1, -1),), (0,), (-1, 0))).status == UNBOUNDED


def test_no_constraints_with_non_negative_costs():
    result = solve(StandardLP((), (), (1, 2)))
    assert result.status == OPTIMAL
    assert result.value == 0
    assert result.x == (0, 0)


def test_redundant_rows_are_dropped():
    result = solve(StandardLP(((1, 1), (2, 2)), (1, 2), (1, 0)))
    assert result.status == OPTIMAL
    assert result.value == 0
    assert result.x == (0, 1)


def test_negative_right_hand_side():
    result = solve(StandardLP(((-1, 0), (0, 1)), (-2, 0), (1, 1)))
    assert result.value == 2
    assert result.x == (2, 0)


def test_degenerate_program_terminates():
    A = (
        (1, 0, 0, Fraction(1, 4), -8, -1, 9),
        (0, 1, 0, Fraction(1, 2), -12, Fraction(-1, 2), 3),
        (0, 0, 1, 0, 0, 1, 0),
    )
    c = (0, 0, 0, Fraction(-3, 4), 20, Fraction(-1, 2), 6)
    result = solve(StandardLP(A, (0, 0, 1), c))
    assert result.status == OPTIMAL
    assert result.value == Fraction(-5, 4)


def test_reduced_costs_price_out_the_basis():
    tableau = [[Fraction(1), Fraction(2), Fraction(0), Fraction(4)],
               [Fraction(0), Fraction(1), Fraction(1), Fraction(3)]]
    reduced = simplex_service._reduced_costs(tableau, [0, 2], [Fraction(1), Fraction(5), Fraction(2)])
    assert reduced == [0, 1, 0, -10]


def test_filling_programs_agree_on_random_spaces(rng):
    for n in (4, 5):
        space = random_space(rng, n)
        for tree in enumerate_topologies(n):
            primal = solve(primal_program(space, tree)[0])
            dual = solve(dual_program(space, tree))
            assert primal.status == dual.status == OPTIMAL
            assert primal.value == -dual.value


@pytest.mark.parametrize('kwargs', [
    {'num_vars': 1, 'inequalities': [([1], '=<', 1)]},
    {'num_vars': 2, 'inequalities': [([1], '<=', 1)]},
    {'num_vars': 2, 'equalities': [([1, 2, 3], 1)]},
    {'num_vars': 1, 'free_vars': [1]},
    {'num_vars': 2, 'objective': [1]},
])
def test_invalid_programs(kwargs):
    with pytest.raises(SimplexError):
        to_standard_form(**kwargs)


def test_dimension_checks():
    with pytest.raises(SimplexError):
        StandardLP(((1, 0),), (1, 2), (0, 0))
    with pytest.raises(SimplexError):
        StandardLP(((1, 0),), (1,), (0,))


def test_from_dict():
    lp = StandardLP.from_dict({'A': [['1/2', 1]], 'b': ['3/2'], 'c': [1, 1]})
    assert lp.A == ((Fraction(1, 2), 1),)
    assert lp.b == (Fraction(3, 2),)
    with pytest.raises(SimplexError):
        StandardLP.from_dict({'A': [[1]], 'b': [1]})
    with pytest.raises(SimplexError):
        StandardLP.from_dict({'A': [['x']], 'b': [1], 'c': [1]})


def test_load_lp(tmp_path):
    result = solve(load_lp(DATA / 'dual4.json'))
    assert result.status == OPTIMAL
    assert result.value == -3

    path = tmp_path / 'lp.json'
    path.write_text(json.dumps({'A': [[1, 1]], 'b': [4], 'c': [2, 1]}))
    assert solve(load_lp(path)).to_dict() == {'status': 'optimal', 'value': '4', 'x': ['0', '4']}


@pytest.mark.parametrize('content', ['{not json', '[1, 2]'])
def test_load_lp_rejects_bad_files(tmp_path, content):
    path = tmp_path / 'lp.json'
    path.write_text(content)
    with pytest.raises(SimplexError):
        load_lp(path)


def test_load_lp_missing_file(tmp_path):
    with pytest.raises(SimplexError):
        load_lp(tmp_path / 'missing.json')
