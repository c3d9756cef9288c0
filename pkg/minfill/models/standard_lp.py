from dataclasses import dataclass, field
from fractions import Fraction

from minfill.errors import SimplexError
from minfill.models.rational import format_rational

OPTIMAL = 'optimal'
UNBOUNDED = 'unbounded'
INFEASIBLE = 'infeasible'


@dataclass(frozen=True)
class StandardLP:
    """minimize c.x subject to A x = b, x >= 0, in exact rationals."""
    A: tuple
    b: tuple
    c: tuple

    def __post_init__(self):
        A = tuple(tuple(Fraction(x) for x in row) for row in self.A)
        b = tuple(Fraction(x) for x in self.b)
        c = tuple(Fraction(x) for x in self.c)
        if len(A) != len(b):
            raise SimplexError(f"A has {len(A)} rows but b has {len(b)} entries")
        for index, row in enumerate(A):
            if len(row) != len(c):
                raise SimplexError(f"Row {index} of A has {len(row)} entries, expected {len(c)}")
        object.__setattr__(self, 'A', A)
        object.__setattr__(self, 'b', b)
        object.__setattr__(self, 'c', c)

    @property
    def num_rows(self):
        return len(self.A)

    @property
    def num_vars(self):
        return len(self.c)

    @classmethod
    def from_dict(cls, payload):
        """Read {"A": [[...]], "b": [...], "c": [...]} with entries as numbers or "p/q" strings."""
        try:
            return cls(
                tuple(tuple(Fraction(str(x)) for x in row) for row in payload.get('A', [])),
                tuple(Fraction(str(x)) for x in payload.get('b', [])),
                tuple(Fraction(str(x)) for x in payload['c']),
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise SimplexError(f"Invalid LP description: {str(e)}")


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction = None
    x: tuple = None

    def to_dict(self):
        payload = {'status': self.status}
        if self.status == OPTIMAL:
            payload['value'] = format_rational(self.value)
            payload['x'] = [format_rational(v) for v in self.x]
        return payload


@dataclass(frozen=True)
class VariableMap:
    """
    Where each original variable lives in a standard form: a column for its
    non-negative part and, for free variables, a column for its negative part.
    """
    columns: tuple
    slack_columns: tuple = field(default=())

    def recover(self, x):
        return tuple(x[pos] - (x[neg] if neg is not None else 0) for pos, neg in self.columns)
