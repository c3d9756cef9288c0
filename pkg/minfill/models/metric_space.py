from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from minfill.errors import MetricError


def pair_count(n):
    return n * (n - 1) // 2


def pair_index(i, j, n):
    """
    Position of the pair (i, j) in the lexicographic order
    (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n).

    Args:
        i (int): first point, 1-based
        j (int): second point, 1-based, i < j
        n (int): number of points

    Returns:
        int: 0-based column index

    Raises:
        MetricError: unless 1 <= i < j <= n
    """
    if not (1 <= i < j <= n):
        raise MetricError(f"Pair ({i},{j}) is not an ordered pair of points 1..{n}")
    # pairs in rows 1..i-1 come first
    return (i - 1) * n - (i - 1) * i // 2 + (j - i - 1)


@lru_cache(maxsize=None)
def pair_labels(n):
    """All pairs (i, j), i < j, in column order."""
    return tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


def pair_size(columns):
    """Recover n from the number of pair columns n(n-1)/2."""
    n = 2
    while pair_count(n) < columns:
        n += 1
    if pair_count(n) != columns:
        raise MetricError(f"{columns} is not a number of point pairs")
    return n


@dataclass(frozen=True)
class MetricSpace:
    """
    A finite pseudo-metric space on points 1..n with exact rational distances.

    Zero distances between distinct points are allowed. The triangle
    inequality is not part of the invariants; parse_metric checks it only
    in strict mode.
    """
    n: int
    d: tuple
    labels: tuple = None

    def __post_init__(self):
        if self.n < 1:
            raise MetricError(f"A metric space needs at least one point, got n={self.n}")
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.d)
        if len(rows) != self.n or any(len(row) != self.n for row in rows):
            raise MetricError(f"Distance matrix is not {self.n}x{self.n}")
        object.__setattr__(self, 'd', rows)
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != self.n:
                raise MetricError(f"Expected {self.n} labels, got {len(labels)}")
            object.__setattr__(self, 'labels', labels)

        for i in range(self.n):
            if rows[i][i] != 0:
                raise MetricError(f"Nonzero diagonal entry d{i + 1}{i + 1} = {rows[i][i]}",
                                  witness=(i + 1, i + 1))
            for j in range(i + 1, self.n):
                if rows[i][j] != rows[j][i]:
                    raise MetricError(
                        f"Asymmetric entries d{i + 1}{j + 1} = {rows[i][j]} and d{j + 1}{i + 1} = {rows[j][i]}",
                        witness=(i + 1, j + 1))
                if rows[i][j] < 0:
                    raise MetricError(f"Negative distance d{i + 1}{j + 1} = {rows[i][j]}",
                                      witness=(i + 1, j + 1))

    def distance(self, i, j):
        """Distance between points i and j (1-based)."""
        return self.d[i - 1][j - 1]

    def pair_vector(self):
        """Distances d_ij for i < j in column order."""
        return tuple(self.d[i - 1][j - 1] for i, j in pair_labels(self.n))

    def scaled(self, factor):
        """The space with every distance multiplied by a rational factor >= 0."""
        factor = Fraction(factor)
        if factor < 0:
            raise MetricError(f"Scale factor must be non-negative, got {factor}")
        return MetricSpace(self.n, tuple(tuple(x * factor for x in row) for row in self.d), self.labels)

    def with_distance(self, i, j, value):
        """Copy of the space with d_ij = d_ji replaced by value."""
        rows = [list(row) for row in self.d]
        rows[i - 1][j - 1] = rows[j - 1][i - 1] = Fraction(value)
        return MetricSpace(self.n, tuple(tuple(row) for row in rows), self.labels)

    @classmethod
    def from_pair_vector(cls, n, values, labels=None):
        """Build a space from distances listed in column order."""
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), value in zip(pair_labels(n), values):
            rows[i - 1][j - 1] = rows[j - 1][i - 1] = Fraction(value)
        return cls(n, tuple(tuple(row) for row in rows), labels)
