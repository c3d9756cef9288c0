class MinFillError(Exception):
    """Base class for domain failures. The CLI reports these with exit code 1."""


class MetricError(MinFillError):
    """A distance matrix failed parsing or one of the pseudo-metric invariants."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        # 1-based indices of the offending entry or triple, when there is one
        self.witness = witness


class TreeError(MinFillError):
    """Malformed Newick text, unknown edge or leaf, or a tree that is not binary."""


class RankError(MinFillError):
    """A cut matrix turned out rank deficient."""


class TourError(MinFillError):
    """A multi-tour could not be reconstructed or is not matched with its tree."""


class SimplexError(MinFillError):
    """Inconsistent LP dimensions or a solver answer that fails its own certificate."""


class DualityError(MinFillError):
    """The vertex route and the simplex oracle disagree on an optimum."""


class ConfigError(MinFillError):
    """A MINFILL_* environment variable holds a value of the wrong type."""
