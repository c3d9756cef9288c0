from collections import Counter
from dataclasses import dataclass

from minfill.errors import TourError
from minfill.models.metric_space import pair_count, pair_index


def walk_weights(sequence, n):
    """Occurrences of every pair (i, j), i < j, among cyclically consecutive labels."""
    w = [0] * pair_count(n)
    for a, b in zip(sequence, sequence[1:] + sequence[:1]):
        if a == b:
            raise TourError(f"Label {a} follows itself in the tour")
        w[pair_index(min(a, b), max(a, b), n)] += 1
    return tuple(w)


@dataclass(frozen=True)
class MultiTour:
    """
    Cyclic sequence of n*k boundary labels visiting every label k times,
    never repeating a label twice in a row. w counts how often the closed
    walk uses each pair (i, j), i < j.
    """
    n: int
    sequence: tuple
    k: int
    w: tuple

    def __post_init__(self):
        sequence = tuple(self.sequence)
        object.__setattr__(self, 'sequence', sequence)
        if self.k < 1 or len(sequence) != self.n * self.k:
            raise TourError(f"A multi-tour of multiplicity {self.k} on {self.n} points has length "
                            f"{self.n * self.k}, got {len(sequence)}")
        counts = Counter(sequence)
        for label in range(1, self.n + 1):
            if counts[label] != self.k:
                raise TourError(f"Label {label} occurs {counts[label]} times, expected {self.k}")
        if set(counts) != set(range(1, self.n + 1)):
            raise TourError(f"Tour labels must lie in 1..{self.n}")
        if tuple(self.w) != walk_weights(sequence, self.n):
            raise TourError('Edge counts do not match the walk')
        object.__setattr__(self, 'w', tuple(self.w))

    @classmethod
    def from_sequence(cls, sequence, n):
        """Build a tour from its labels; k is inferred from the length."""
        sequence = tuple(sequence)
        if not sequence or len(sequence) % n:
            raise TourError(f"Tour length {len(sequence)} is not a multiple of {n}")
        return cls(n, sequence, len(sequence) // n, walk_weights(sequence, n))

    def steps(self):
        """Cyclically consecutive label pairs (pi(j), pi(j+1))."""
        return list(zip(self.sequence, self.sequence[1:] + self.sequence[:1]))

    def to_dict(self):
        return {'k': self.k, 'sequence': list(self.sequence), 'w': list(self.w)}

    def __str__(self):
        return f"k={self.k}: {'-'.join(str(x) for x in self.sequence)}"
