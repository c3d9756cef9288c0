from dataclasses import dataclass


@dataclass(frozen=True)
class FormulaTerm:
    """One multi-perimeter expression, tied to the dual vertex and tour it comes from."""
    vertex: object
    tour: object
    text: str
    latex: str

    def to_dict(self):
        return {
            'vertex': self.vertex.to_dict(),
            'tour': self.tour.to_dict(),
            'text': self.text,
            'latex': self.latex,
        }


@dataclass(frozen=True)
class FormulaDocument:
    """
    Closed-form weight of minimal parametric fillings of one tree type:
    the maximum of the listed multi-perimeters.
    """
    tree: object
    terms: tuple

    @property
    def n(self):
        return self.tree.n

    def to_dict(self):
        return {
            'tree': self.tree.to_newick(),
            'n': self.n,
            'statement': 'mpf = max of the terms',
            'terms': [term.to_dict() for term in self.terms],
        }
