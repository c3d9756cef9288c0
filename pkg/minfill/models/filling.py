from dataclasses import dataclass
from fractions import Fraction

from minfill.errors import MinFillError
from minfill.models.rational import format_rational


@dataclass(frozen=True)
class WeightedTree:
    """
    A binary tree with rational edge weights, omega[e - 1] for edge id e.

    Weights may be negative (generalized fillings) unless nonneg is set.
    """
    tree: object
    omega: tuple
    nonneg: bool = False

    def __post_init__(self):
        omega = tuple(Fraction(x) for x in self.omega)
        if len(omega) != len(self.tree.edges):
            raise MinFillError(f"Expected {len(self.tree.edges)} edge weights, got {len(omega)}")
        if self.nonneg and any(x < 0 for x in omega):
            raise MinFillError('Classical fillings need non-negative edge weights')
        object.__setattr__(self, 'omega', omega)

    @property
    def weight(self):
        return sum(self.omega, Fraction(0))

    def path_weight(self, i, j):
        return sum((self.omega[e - 1] for e in self.tree.path_edges(i, j)), Fraction(0))

    def to_dict(self):
        return {str(e): format_rational(x) for e, x in zip(self.tree.edge_ids, self.omega)}


@dataclass(frozen=True)
class FillingResult:
    """
    Weight of a minimal parametric filling with its certificates: a dual
    vertex attaining the weight, the multi-tour behind it and a primal
    optimal weighting.
    """
    tree: object
    weight: Fraction
    witness_vertex: object
    witness_tour: object
    optimal_omega: WeightedTree
    classical_weight: Fraction = None

    def to_dict(self):
        payload = {
            'tree': self.tree.to_newick(),
            'weight': format_rational(self.weight),
            'vertex': [format_rational(x) for x in self.witness_vertex.coords],
            'tour': list(self.witness_tour.sequence),
            'multiplicity': self.witness_tour.k,
            'omega': self.optimal_omega.to_dict(),
        }
        if self.classical_weight is not None:
            payload['classical_weight'] = format_rational(self.classical_weight)
        return payload
