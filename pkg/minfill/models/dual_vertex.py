from dataclasses import dataclass
from fractions import Fraction

from minfill.models.metric_space import pair_labels, pair_size
from minfill.models.rational import common_denominator, format_rational


def least_multiplicity(coords):
    """Least k >= 1 such that 2k * coords is an integer vector."""
    denominator = common_denominator(coords)
    return denominator // 2 if denominator % 2 == 0 else denominator


@dataclass(frozen=True)
class DualVertex:
    """
    Vertex of the dual polyhedron {lambda >= 0 : C(G) lambda = 1}.

    coords are indexed by pair columns; basis holds the 0-based columns of a
    witnessing invertible submatrix (coords vanish outside it).
    """
    coords: tuple
    basis: tuple
    multiplicity: int

    @classmethod
    def from_coords(cls, coords, basis):
        coords = tuple(Fraction(x) for x in coords)
        return cls(coords, tuple(sorted(basis)), least_multiplicity(coords))

    @property
    def n(self):
        return pair_size(len(self.coords))

    @property
    def weights(self):
        """The integer vector 2k * coords."""
        scale = 2 * self.multiplicity
        return tuple(int(x * scale) for x in self.coords)

    def objective(self, space):
        """H(lambda) = sum of d_ij * lambda_ij."""
        return sum((d * x for d, x in zip(space.pair_vector(), self.coords)), Fraction(0))

    def to_dict(self):
        pairs = pair_labels(self.n)
        return {
            'coords': [format_rational(x) for x in self.coords],
            'multiplicity': self.multiplicity,
            'basis': [f"({pairs[c][0]},{pairs[c][1]})" for c in self.basis],
        }

    def __str__(self):
        return f"1/{2 * self.multiplicity}: ({','.join(str(w) for w in self.weights)})"
