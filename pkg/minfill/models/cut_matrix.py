from dataclasses import dataclass

from minfill.models.metric_space import pair_labels


@dataclass(frozen=True)
class CutMatrix:
    """
    0/1 matrix C(G): rows are tree edges in edge-id order, columns are the
    pairs (i, j), i < j, in lexicographic order. Entry 1 iff the edge's cut
    separates i from j.
    """
    n: int
    rows: tuple

    @property
    def num_rows(self):
        return len(self.rows)

    @property
    def num_cols(self):
        return len(self.rows[0]) if self.rows else 0

    @property
    def pairs(self):
        return pair_labels(self.n)

    def column(self, index):
        return tuple(row[index] for row in self.rows)

    def to_dict(self):
        return {
            'n': self.n,
            'pairs': [f"({i},{j})" for i, j in self.pairs],
            'rows': [list(row) for row in self.rows],
        }
