import json
import logging
from fractions import Fraction

from minfill.errors import SimplexError
from minfill.models.standard_lp import INFEASIBLE, OPTIMAL, UNBOUNDED, LPResult, StandardLP, VariableMap

logger = logging.getLogger(__name__)


def to_standard_form(num_vars, inequalities=(), equalities=(), free_vars=(), objective=None):
    """
    Convert a general LP to the form min c.x, A x = b, x >= 0.

    Each free variable is split into the difference of two non-negative
    columns; each inequality gets its own slack column (added for "<=",
    subtracted for ">=").

    Args:
        num_vars (int): number of original variables
        inequalities (sequence): (coefficients, "<=" or ">=", rhs) triples
        equalities (sequence): (coefficients, rhs) pairs
        free_vars (iterable): indices of sign-free variables; the rest are >= 0
        objective (sequence): coefficients of the function to minimize

    Returns:
        tuple: (StandardLP, VariableMap)

    Raises:
        SimplexError: on inconsistent dimensions or an unknown sense
    """
    free_vars = set(free_vars)
    if any(not (0 <= v < num_vars) for v in free_vars):
        raise SimplexError(f"Free variable index out of range 0..{num_vars - 1}")
    objective = [0] * num_vars if objective is None else list(objective)
    if len(objective) != num_vars:
        raise SimplexError(f"Objective has {len(objective)} coefficients, expected {num_vars}")

    columns = []
    width = 0
    for v in range(num_vars):
        if v in free_vars:
            columns.append((width, width + 1))
            width += 2
        else:
            columns.append((width, None))
            width += 1
    slack_columns = tuple(range(width, width + len(inequalities)))
    width += len(inequalities)

    def expand(coefficients):
        if len(coefficients) != num_vars:
            raise SimplexError(f"Constraint has {len(coefficients)} coefficients, expected {num_vars}")
        row = [Fraction(0)] * width
        for (pos, neg), a in zip(columns, coefficients):
            row[pos] = Fraction(a)
            if neg is not None:
                row[neg] = -Fraction(a)
        return row

    A = []
    b = []
    for index, (coefficients, sense, rhs) in enumerate(inequalities):
        if sense not in ('<=', '>='):
            raise SimplexError(f"Unknown inequality sense {sense!r}")
        row = expand(coefficients)
        row[slack_columns[index]] = Fraction(1 if sense == '<=' else -1)
        A.append(row)
        b.append(Fraction(rhs))
    for coefficients, rhs in equalities:
        A.append(expand(coefficients))
        b.append(Fraction(rhs))

    c = [Fraction(0)] * width
    for (pos, neg), a in zip(columns, objective):
        c[pos] = Fraction(a)
        if neg is not None:
            c[neg] = -Fraction(a)

    return StandardLP(tuple(map(tuple, A)), tuple(b), tuple(c)), VariableMap(tuple(columns), slack_columns)


def _pivot(tableau, basis, row, col):
    head = tableau[row]
    pivot = head[col]
    tableau[row] = head = [x / pivot for x in head]
    for r, other in enumerate(tableau):
        if r != row and other[col] != 0:
            factor = other[col]
            tableau[r] = [a - factor * h for a, h in zip(other, head)]
    basis[row] = col


def _reduced_costs(tableau, basis, cost):
    """Cost row priced out against the basis; the last entry is minus the objective."""
    reduced = list(cost) + [Fraction(0)]
    for bv, row in zip(basis, tableau):
        factor = reduced[bv]
        if factor != 0:
            reduced = [a - factor * h for a, h in zip(reduced, row)]
    return reduced


def _iterate(tableau, basis, cost, allowed):
    """
    Primal simplex with Bland's rule on a tableau whose last column is the rhs.

    The reduced cost row is kept alongside the tableau and pivoted with it.
    """
    reduced = _reduced_costs(tableau, basis, cost)
    iterations = 0
    while True:
        # basic columns price out to zero
        entering = next((j for j in allowed if reduced[j] < 0), None)
        if entering is None:
            logger.debug(f"Simplex optimal after {iterations} pivots")
            return OPTIMAL

        leaving = None
        best = None
        for r, row in enumerate(tableau):
            if row[entering] > 0:
                candidate = (row[-1] / row[entering], basis[r])
                if best is None or candidate < best:
                    best = candidate
                    leaving = r
        if leaving is None:
            return UNBOUNDED
        _pivot(tableau, basis, leaving, entering)
        factor = reduced[entering]
        reduced = [a - factor * h for a, h in zip(reduced, tableau[leaving])]
        iterations += 1


def solve(lp):
    """
    Two-phase simplex with Bland's rule in exact arithmetic.

    Phase I minimizes the sum of one artificial variable per row; artificial
    variables left in the basis at level zero are pivoted out, and rows where
    that is impossible are dropped as redundant.

    Args:
        lp (StandardLP): the program

    Returns:
        LPResult: optimal (with value and a basic optimal x), unbounded or infeasible

    Raises:
        SimplexError: if an optimal answer fails its own feasibility check
    """
    m, n = lp.num_rows, lp.num_vars
    tableau = []
    for r in range(m):
        row = list(lp.A[r])
        rhs = lp.b[r]
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        tableau.append(row + [Fraction(1 if i == r else 0) for i in range(m)] + [rhs])
    basis = [n + r for r in range(m)]

    phase_one = [Fraction(0)] * n + [Fraction(1)] * m
    _iterate(tableau, basis, phase_one, range(n + m))
    infeasibility = sum((row[-1] for bv, row in zip(basis, tableau) if bv >= n), Fraction(0))
    if infeasibility > 0:
        logger.debug(f"Phase I ended with artificial total {infeasibility}")
        return LPResult(INFEASIBLE)

    r = 0
    while r < len(tableau):
        if basis[r] >= n:
            col = next((j for j in range(n) if tableau[r][j] != 0), None)
            if col is None:
                del tableau[r]
                del basis[r]
                continue
            _pivot(tableau, basis, r, col)
        r += 1

    cost = list(lp.c) + [Fraction(0)] * m
    if _iterate(tableau, basis, cost, range(n)) == UNBOUNDED:
        return LPResult(UNBOUNDED)

    x = [Fraction(0)] * n
    for bv, row in zip(basis, tableau):
        x[bv] = row[-1]
    value = sum((c * v for c, v in zip(lp.c, x)), Fraction(0))

    if any(v < 0 for v in x) or any(
            sum((a * v for a, v in zip(row, x)), Fraction(0)) != rhs for row, rhs in zip(lp.A, lp.b)):
        raise SimplexError('Simplex optimum fails A x = b, x >= 0')
    return LPResult(OPTIMAL, value, tuple(x))


def load_lp(path):
    """
    Read a StandardLP from JSON {"A": [[...]], "b": [...], "c": [...]}.

    Entries may be numbers or "p/q" strings.

    Raises:
        SimplexError: if the file cannot be read or describes no valid LP
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            payload = json.load(f)
    except OSError as e:
        raise SimplexError(f"Cannot read LP file {path}: {e.strerror}")
    except json.JSONDecodeError as e:
        raise SimplexError(f"Invalid JSON in {path}: {str(e)}")
    if not isinstance(payload, dict):
        raise SimplexError('LP description must be a JSON object')
    return StandardLP.from_dict(payload)
