import json
import logging
import os
from fractions import Fraction

from minfill.errors import MetricError
from minfill.models.metric_space import MetricSpace, pair_labels
from minfill.models.rational import format_rational, parse_rational
from minfill.services.tree_service import random_topology

logger = logging.getLogger(__name__)


def triangle_violation(space):
    """
    Find a triple breaking the triangle inequality.

    Args:
        space (MetricSpace): the space to check

    Returns:
        tuple or None: 1-based (i, j, k) with d_ik > d_ij + d_jk, or None
    """
    d = space.d
    n = space.n
    for i in range(n):
        for k in range(i + 1, n):
            for j in range(n):
                if j != i and j != k and d[i][k] > d[i][j] + d[j][k]:
                    # report the witness in increasing label order
                    return tuple(sorted((i + 1, j + 1, k + 1)))
    return None


def _check_strict(space, strict):
    if strict:
        witness = triangle_violation(space)
        if witness is not None:
            i, j, k = witness
            raise MetricError(f"Triangle inequality violated by points ({i},{j},{k})", witness=witness)
    return space


def _parse_entry(token, row, col):
    try:
        return parse_rational(token)
    except (ValueError, ZeroDivisionError):
        raise MetricError(f"Entry ({row},{col}) is not a rational number: {token!r}", witness=(row, col))


def parse_metric(text, strict=False):
    """
    Parse the whitespace-separated text format.

    The first non-comment line holds n, the next n lines hold the rows.
    Lines starting with '#' are comments and an optional "labels:" line
    names the points.

    Args:
        text (str): file contents
        strict (bool): also require the triangle inequality

    Returns:
        MetricSpace: the validated space

    Raises:
        MetricError: on dimension mismatch, asymmetry, negative or nonzero
                     diagonal entries, and (strict) triangle violations
    """
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith('#')]
    if not lines:
        raise MetricError('Metric file is empty')

    try:
        n = int(lines[0])
    except ValueError:
        raise MetricError(f"First line must be the number of points, got {lines[0]!r}")
    if n < 1:
        raise MetricError(f"Number of points must be positive, got {n}")

    labels = None
    rows = []
    for line in lines[1:]:
        if line.lower().startswith('labels:'):
            labels = line.split(':', 1)[1].split()
            continue
        tokens = line.split()
        row = len(rows) + 1
        if len(tokens) != n:
            raise MetricError(f"Row {row} has {len(tokens)} entries, expected {n}")
        rows.append(tuple(_parse_entry(token, row, col + 1) for col, token in enumerate(tokens)))

    if len(rows) != n:
        raise MetricError(f"Expected {n} rows, got {len(rows)}")
    if labels is not None and len(labels) != n:
        raise MetricError(f"Expected {n} labels, got {len(labels)}")

    return _check_strict(MetricSpace(n, tuple(rows), labels), strict)


def parse_metric_json(text, strict=False):
    """
    Parse the JSON alternative {"n", "d", "labels"}.

    "d" is the row-major list of n*n entries as strings; a list of n rows is
    accepted as well.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise MetricError(f"Invalid JSON metric: {str(e)}")
    if not isinstance(payload, dict) or 'n' not in payload or 'd' not in payload:
        raise MetricError('JSON metric needs the fields "n" and "d"')

    n = payload['n']
    if isinstance(n, bool) or not isinstance(n, int):
        raise MetricError(f"Field \"n\" must be an integer, got {n!r}")
    if n < 1:
        raise MetricError(f"Number of points must be positive, got {n}")
    entries = payload['d']
    if not isinstance(entries, list):
        raise MetricError(f"Field \"d\" must be a list, got {type(entries).__name__}")
    labels = payload.get('labels')
    if labels is not None and not isinstance(labels, list):
        raise MetricError(f"Field \"labels\" must be a list, got {type(labels).__name__}")
    if entries and all(isinstance(row, list) for row in entries):
        entries = [x for row in entries for x in row]
    if len(entries) != n * n:
        raise MetricError(f"Field \"d\" has {len(entries)} entries, expected {n * n}")

    rows = tuple(
        tuple(_parse_entry(str(entries[r * n + c]), r + 1, c + 1) for c in range(n))
        for r in range(n)
    )
    return _check_strict(MetricSpace(n, rows, labels), strict)


def load_metric(path, strict=False):
    """
    Read a metric file, choosing the format by extension.

    Args:
        path (str): file path; ".json" selects the JSON format
        strict (bool): also require the triangle inequality

    Returns:
        MetricSpace: the validated space
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise MetricError(f"Cannot read metric file {path}: {e.strerror}")

    if os.path.splitext(path)[1].lower() == '.json':
        space = parse_metric_json(text, strict)
    else:
        space = parse_metric(text, strict)
    logger.info(f"Loaded {space.n}-point space from {path}")
    return space


def metric_to_dict(space):
    return {
        'n': space.n,
        'd': [format_rational(x) for row in space.d for x in row],
        'labels': list(space.labels) if space.labels else None,
    }


def render_metric(space, fmt='text'):
    """
    Render a space so that parsing the result gives back the same space.

    Args:
        space (MetricSpace): the space
        fmt (str): "text" or "json"

    Returns:
        str: the rendering, newline-terminated
    """
    if fmt == 'json':
        return json.dumps(metric_to_dict(space), indent=2) + '\n'

    lines = [str(space.n)]
    for row in space.d:
        lines.append(' '.join(format_rational(x) for x in row))
    if space.labels:
        lines.append('labels: ' + ' '.join(space.labels))
    return '\n'.join(lines) + '\n'


def tree_metric(tree, weights):
    """
    Path metric of a weighted binary tree restricted to its leaves.

    Args:
        tree (BinaryTree): the tree
        weights (sequence): edge weights in edge-id order

    Returns:
        MetricSpace: d_ij = total weight of the i-j path
    """
    values = []
    for i, j in pair_labels(tree.n):
        values.append(sum((Fraction(weights[e - 1]) for e in tree.path_edges(i, j)), Fraction(0)))
    return MetricSpace.from_pair_vector(tree.n, values)


def random_space(rng, n):
    """
    Random rational pseudo-metric on n points.

    A random binary tree with positive rational edge weights gives a tree
    metric; every off-diagonal distance then gets noise drawn from [a, 2a].
    Since any noise value is at most the sum of two others, the triangle
    inequality survives.

    Args:
        rng (random.Random): the generator, seeded by the caller
        n (int): number of points, n >= 3

    Returns:
        MetricSpace: the random space
    """
    tree = random_topology(rng, n)
    weights = [Fraction(rng.randint(1, 24), rng.randint(1, 4)) for _ in range(2 * n - 3)]
    base = tree_metric(tree, weights)

    scale = Fraction(rng.randint(0, 12), rng.randint(1, 6))
    noisy = [
        value + scale + scale * Fraction(rng.randint(0, 8), 8)
        for value in base.pair_vector()
    ]
    return MetricSpace.from_pair_vector(n, noisy)
