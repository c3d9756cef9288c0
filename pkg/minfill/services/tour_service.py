import logging
from collections import Counter
from fractions import Fraction

import networkx as nx

from minfill.errors import TourError
from minfill.models.metric_space import pair_labels
from minfill.models.multi_tour import MultiTour

logger = logging.getLogger(__name__)


def _eulerian_circuit(graph, start):
    """
    Hierholzer's algorithm on a multigraph, always leaving a vertex towards
    its smallest-labeled neighbour with unused edges.
    """
    unused = {v: Counter() for v in graph}
    for u, v in graph.edges():
        unused[u][v] += 1
        unused[v][u] += 1

    stack = [start]
    circuit = []
    while stack:
        vertex = stack[-1]
        if unused[vertex]:
            nxt = min(unused[vertex])
            for a, b in ((vertex, nxt), (nxt, vertex)):
                unused[a][b] -= 1
                if unused[a][b] == 0:
                    del unused[a][b]
            stack.append(nxt)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    return circuit


def tour_from_vertex(vertex, n):
    """
    Reconstruct a multi-tour whose edge counts are 2k * coords.

    The multigraph on 1..n with w_ij parallel edges has every degree equal
    to 2k; any Eulerian circuit of it is a multi-tour. The circuit starts at
    label 1 and prefers the smallest available neighbour.

    Args:
        vertex (DualVertex): vertex of the dual polyhedron
        n (int): number of boundary points

    Returns:
        MultiTour: tour with multiplicity k = vertex.multiplicity and w = 2k * coords

    Raises:
        TourError: if the support is disconnected or a degree is odd
    """
    k = vertex.multiplicity
    weights = vertex.weights
    if any(Fraction(w) != x * 2 * k for w, x in zip(weights, vertex.coords)):
        raise TourError(f"2k * coords is not integral for k={k}")

    graph = nx.MultiGraph()
    graph.add_nodes_from(range(1, n + 1))
    for (i, j), count in zip(pair_labels(n), weights):
        graph.add_edges_from([(i, j)] * count)

    odd = [v for v, degree in graph.degree() if degree % 2]
    if odd:
        raise TourError(f"Vertices {odd} have odd degree in the tour multigraph")
    if not nx.is_connected(graph):
        components = sorted(sorted(c) for c in nx.connected_components(graph))
        raise TourError(f"Tour multigraph is disconnected: components {components}")

    circuit = _eulerian_circuit(graph, 1)
    tour = MultiTour(n, tuple(circuit[:-1]), k, tuple(weights))
    logger.debug(f"Reconstructed {tour}")
    return tour


def crossing_counts(tree, tour):
    """For every edge id, how many steps of the tour have their path through it."""
    counts = {e: 0 for e in tree.edge_ids}
    for a, b in tour.steps():
        for e in tree.path_edges(a, b):
            counts[e] += 1
    return counts


def side_exit_counts(tree, tour):
    """
    For every edge and each side of its cut, the number of steps leaving
    that side.

    Returns:
        dict: (edge id, 1 or 2) -> count
    """
    counts = {}
    steps = tour.steps()
    for cut in tree.cuts:
        for index, side in ((1, cut.side1), (2, cut.side2)):
            counts[(cut.edge, index)] = sum(1 for a, b in steps if a in side and b not in side)
    return counts


def validate_multitour(tree, tour):
    """
    Check that a multi-cyclic order is matched with the tree.

    Every edge must carry the same even number 2m of tour paths, every side
    of every cut must be left exactly m times, and m must equal the
    multiplicity k of the order.

    Args:
        tree (BinaryTree): the tree
        tour (MultiTour): the order, over the tree's boundary labels

    Returns:
        int: the multiplicity m

    Raises:
        TourError: if the tour is not matched with the tree or m != k
    """
    if tour.n != tree.n:
        raise TourError(f"Tour on {tour.n} points does not fit a tree on {tree.n} leaves")
    counts = crossing_counts(tree, tour)
    values = set(counts.values())
    if len(values) != 1:
        detail = ', '.join(f"e{e}:{c}" for e, c in counts.items())
        raise TourError(f"Tour is not matched with the tree; crossings per edge differ ({detail})")
    (crossings,) = values
    if crossings % 2:
        raise TourError(f"Every edge is crossed {crossings} times, an odd number")
    m = crossings // 2

    exits = side_exit_counts(tree, tour)
    uneven = [key for key, value in exits.items() if value != m]
    if uneven:
        raise TourError(f"Cut sides {uneven} are not left exactly {m} times")
    if m != tour.k:
        raise TourError(f"Tour multiplicity m={m} differs from the order multiplicity k={tour.k}")
    return m


def multi_perimeter(tour, space):
    """Length of the closed walk divided by 2k."""
    total = sum((space.distance(a, b) for a, b in tour.steps()), Fraction(0))
    return total / (2 * tour.k)


def _symbol(i, j, n, latex):
    if latex:
        return f"d_{{{i}{j}}}" if n < 10 else f"d_{{{i},{j}}}"
    return f"d{i}{j}" if n < 10 else f"d{i},{j}"


def perimeter_expression(weights, k, n, latex=False):
    """
    Symbolic multi-perimeter, e.g. "1/2 (d12 + d14 + d23 + d34)" or
    "\\frac{1}{2}\\big(d_{12}+d_{14}+d_{23}+d_{34}\\big)".
    """
    terms = []
    for (i, j), count in zip(pair_labels(n), weights):
        if count:
            coefficient = '' if count == 1 else str(count)
            terms.append(coefficient + _symbol(i, j, n, latex))
    if latex:
        return f"\\frac{{1}}{{{2 * k}}}\\big({'+'.join(terms)}\\big)"
    return f"1/{2 * k} ({' + '.join(terms)})"


def render_tour(tour, latex=False):
    """'k=1: 1-2-3-4' followed by the symbolic multi-perimeter."""
    return f"{tour}  {perimeter_expression(tour.w, tour.k, tour.n, latex)}"
