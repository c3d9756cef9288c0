import logging
import re
from collections import OrderedDict
from functools import lru_cache
from itertools import combinations, count

from minfill.errors import TreeError
from minfill.models.binary_tree import BinaryTree

logger = logging.getLogger(__name__)

STAR = BinaryTree(3, ((1, -1), (2, -1), (3, -1)))

SHAPES = ('caterpillar', 'snowflake')

_SNOWFLAKES = {
    6: '((1,2),((3,4),(5,6)));',
    7: '((1,2),(3,4),(5,(6,7)));',
}


def double_factorial(k):
    result = 1
    while k > 1:
        result *= k
        k -= 2
    return result


def insert_leaf(tree, edge_id):
    """
    Subdivide an edge with a new interior vertex and hang leaf n+1 on it.

    Args:
        tree (BinaryTree): tree on n leaves, n >= 3
        edge_id (int): the edge to subdivide

    Returns:
        BinaryTree: tree on n + 1 leaves, in canonical edge order
    """
    if edge_id not in tree.edge_ids:
        raise TreeError(f"Unknown edge {edge_id} for a tree with {len(tree.edges)} edges")
    fresh = -(tree.n - 1)
    u, v = tree.edges[edge_id - 1]
    edges = [edge for index, edge in enumerate(tree.edges, start=1) if index != edge_id]
    edges.extend([(u, fresh), (fresh, v), (tree.n + 1, fresh)])
    return BinaryTree.from_edge_list(tree.n + 1, edges)


@lru_cache(maxsize=None)
def enumerate_topologies(n):
    """
    All labeled binary trees with leaves 1..n.

    Trees on m + 1 leaves come from inserting leaf m + 1 into every edge of
    every tree on m leaves, so the order is deterministic and the count is
    (2n-5)!!.

    Args:
        n (int): number of leaves, n >= 3

    Returns:
        tuple: BinaryTree instances, shared between calls

    Raises:
        TreeError: if n < 3
    """
    if n < 3:
        raise TreeError(f"Topologies are enumerated for n >= 3, got n={n}")
    trees = [STAR]
    for m in range(3, n):
        trees = [insert_leaf(tree, edge_id) for tree in trees for edge_id in tree.edge_ids]
    logger.info(f"Enumerated {len(trees)} topologies on {n} leaves")
    return tuple(trees)


def random_topology(rng, n):
    """A random labeled binary tree built by inserting leaves into random edges."""
    if n < 3:
        raise TreeError(f"Random topologies need n >= 3, got n={n}")
    tree = STAR
    for _ in range(3, n):
        tree = insert_leaf(tree, rng.choice(tree.edge_ids))
    return tree


def moustaches(tree):
    """
    Leaf pairs sharing a neighbour.

    Args:
        tree (BinaryTree): tree with n >= 3

    Returns:
        list: sorted (i, j) pairs, i < j
    """
    if tree.n < 3:
        raise TreeError('Moustaches need at least three boundary points')
    pairs = []
    for vertex in tree.interior_vertices:
        leaves = sorted(v for v in tree.graph[vertex] if v > 0)
        pairs.extend(combinations(leaves, 2))
    return sorted(pairs)


def edge_cut(tree, edge_id):
    """
    Boundary partition induced by removing an edge.

    Raises:
        TreeError: for an unknown edge id
    """
    if edge_id not in tree.edge_ids:
        raise TreeError(f"Unknown edge {edge_id} for a tree with {len(tree.edges)} edges")
    return tree.cuts[edge_id - 1]


def path_edges(tree, i, j):
    """Edge ids of the unique path between leaves i and j."""
    return tree.path_edges(i, j)


def eliminate_moustache(tree, pair):
    """
    Remove a moustache pair and promote its common neighbour to a leaf.

    The new leaf takes the smaller label of the pair; labels above the
    larger one shift down by one.

    Args:
        tree (BinaryTree): tree with n >= 3
        pair (tuple): the two leaves

    Returns:
        BinaryTree: tree on n - 1 leaves
    """
    a, b = sorted(pair)
    if (a, b) not in moustaches(tree):
        raise TreeError(f"({a},{b}) are not moustaches of {tree.to_newick()}")
    hub = tree.edges[a - 1][1]

    def relabel(vertex):
        if vertex == hub:
            return a
        if vertex > b:
            return vertex - 1
        return vertex

    kept = [(relabel(u), relabel(v)) for u, v in tree.edges if a not in (u, v) and b not in (u, v)]
    return BinaryTree.from_edge_list(tree.n - 1, kept)


_TOKEN = re.compile(r'\s*(\(|\)|,|;|[^(),;\s]+)')


def _tokenize(text):
    tokens = []
    position = 0
    text = text.strip()
    while position < len(text):
        match = _TOKEN.match(text, position)
        if not match:
            raise TreeError(f"Unexpected character in Newick text at {position}: {text[position:]!r}")
        tokens.append(match.group(1))
        position = match.end()
    return tokens


def _parse_clade(tokens, position):
    token = tokens[position] if position < len(tokens) else None
    if token == '(':
        children = []
        position += 1
        while True:
            child, position = _parse_clade(tokens, position)
            children.append(child)
            token = tokens[position] if position < len(tokens) else None
            if token == ',':
                position += 1
            elif token == ')':
                return children, position + 1
            else:
                raise TreeError(f"Expected ',' or ')' in Newick text, got {token!r}")
    if token is None or token in ',);':
        raise TreeError(f"Expected a leaf label in Newick text, got {token!r}")
    if not token.isdigit() or int(token) < 1:
        raise TreeError(f"Leaf labels must be positive integers, got {token!r}")
    return int(token), position + 1


def parse_newick(text):
    """
    Parse a Newick string over leaf labels 1..n into a BinaryTree.

    A root with two children is suppressed; a root with three children is an
    interior vertex. Every other clade must have exactly two children.

    Args:
        text (str): e.g. "((1,2),(3,4));"

    Returns:
        BinaryTree: the tree with canonical edge order

    Raises:
        TreeError: on malformed text or a non-binary tree
    """
    tokens = _tokenize(text)
    if tokens and tokens[-1] == ';':
        tokens = tokens[:-1]
    if not tokens:
        raise TreeError('Empty Newick text')
    root, position = _parse_clade(tokens, 0)
    if position != len(tokens):
        raise TreeError(f"Trailing text after Newick tree: {''.join(tokens[position:])!r}")
    if isinstance(root, int) or len(root) not in (2, 3):
        raise TreeError('The Newick root must have two or three children')

    edges = []
    counter = count(1)
    labels = []

    def attach(clade):
        if isinstance(clade, int):
            labels.append(clade)
            return clade
        if len(clade) != 2:
            raise TreeError(f"Clade with {len(clade)} children; only binary trees are supported")
        vertex = ('v', next(counter))
        for child in clade:
            edges.append((vertex, attach(child)))
        return vertex

    tops = [attach(child) for child in root]
    if len(tops) == 2:
        edges.append(tuple(tops))
    else:
        vertex = ('v', 0)
        edges.extend((vertex, top) for top in tops)

    n = len(labels)
    if sorted(labels) != list(range(1, n + 1)):
        raise TreeError(f"Leaf labels must be exactly 1..{n} without repeats, got {sorted(labels)}")
    return BinaryTree.from_edge_list(n, edges)


def named_tree(shape, n):
    """
    Trees with the labelings of the worked examples.

    "caterpillar": moustaches {1,2} and {n-1,n}, leaves 3..n-2 along the
    spine (n >= 3). "snowflake": three moustaches {1,2}, {3,4}, {5,6} for
    n = 6, and branches (1,2), (3,4), (5,(6,7)) for n = 7.
    """
    if shape == 'caterpillar':
        if n < 3:
            raise TreeError(f"The caterpillar needs n >= 3, got n={n}")
        if n == 3:
            return parse_newick('((1,2),3);')
        spine = '(1,2)'
        for leaf in range(3, n - 1):
            spine = f"({spine},{leaf})"
        return parse_newick(f"({spine},({n - 1},{n}));")
    if shape == 'snowflake':
        if n not in _SNOWFLAKES:
            raise TreeError(f"The snowflake shape is defined for n = 6 and 7, got n={n}")
        return parse_newick(_SNOWFLAKES[n])
    raise TreeError(f"Unknown shape {shape!r}; expected one of {', '.join(SHAPES)}")


def shape_key(tree):
    """Sorted smaller-side sizes of the interior cuts; equal for relabeled trees."""
    return tuple(sorted(len(tree.cuts[e - 1].side1) for e in tree.interior_edge_ids))


def group_by_shape(trees):
    """
    Group trees by shape_key, keeping enumeration order inside each group.

    Returns:
        OrderedDict: shape key -> list of trees, in order of first appearance
    """
    groups = OrderedDict()
    for tree in trees:
        groups.setdefault(shape_key(tree), []).append(tree)
    return groups
