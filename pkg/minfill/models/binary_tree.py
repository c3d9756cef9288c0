from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from minfill.errors import TreeError


def _format_side(side):
    return '{' + ','.join(str(x) for x in sorted(side)) + '}'


@dataclass(frozen=True)
class Cut:
    """
    Partition of the boundary {1..n} induced by removing one tree edge.

    side1 is the smaller side; on a tie it is the side containing leaf 1.
    """
    side1: frozenset
    side2: frozenset
    edge: int

    @classmethod
    def from_side(cls, side, n, edge):
        side = frozenset(side)
        other = frozenset(range(1, n + 1)) - side
        if not side or not other:
            raise TreeError(f"Edge {edge} does not split the boundary into two nonempty parts")
        if len(other) < len(side) or (len(other) == len(side) and 1 in other):
            side, other = other, side
        return cls(side, other, edge)

    def separates(self, i, j):
        return (i in self.side1) != (j in self.side1)

    @property
    def key(self):
        return tuple(sorted(self.side1))

    @property
    def crossing_pairs(self):
        return len(self.side1) * len(self.side2)

    def __str__(self):
        return f"{_format_side(self.side1)} | {_format_side(self.side2)}"


@dataclass(frozen=True)
class BinaryTree:
    """
    A binary tree whose leaves are the boundary points 1..n.

    Leaves are the positive integers 1..n and interior vertices are negative
    integers. Edge k (1-based) is edges[k - 1]: edge i is the boundary edge
    of leaf i for i <= n, interior edges follow. Every interior vertex has
    degree 3. The two-point tree (a single edge) is admitted as well.
    """
    n: int
    edges: tuple

    def __post_init__(self):
        edges = tuple(tuple(edge) for edge in self.edges)
        if self.n < 2:
            raise TreeError(f"A binary tree needs at least two boundary points, got n={self.n}")
        if len(edges) != 2 * self.n - 3:
            raise TreeError(f"A binary tree on {self.n} leaves has {2 * self.n - 3} edges, got {len(edges)}")

        if self.n == 2:
            if sorted(edges[0]) != [1, 2]:
                raise TreeError('The two-point tree is the single edge (1,2)')
            object.__setattr__(self, 'edges', ((1, 2),))
            return

        normalized = []
        for position, (u, v) in enumerate(edges, start=1):
            if position <= self.n:
                if v == position:
                    u, v = v, u
                if u != position or v > 0:
                    raise TreeError(f"Edge {position} must join leaf {position} to an interior vertex")
            elif u > 0 or v > 0:
                raise TreeError(f"Edge {position} must join two interior vertices")
            normalized.append((u, v))
        normalized = tuple(normalized)
        object.__setattr__(self, 'edges', normalized)

        graph = nx.Graph()
        graph.add_edges_from(normalized)
        if graph.number_of_edges() != len(normalized) or not nx.is_tree(graph):
            raise TreeError('Edges do not form a tree')
        for vertex, degree in graph.degree():
            if vertex > 0 and degree != 1:
                raise TreeError(f"Boundary vertex {vertex} has degree {degree}, expected 1")
            if vertex < 0 and degree != 3:
                raise TreeError(f"Interior vertex {vertex} has degree {degree}, expected 3")

    @property
    def edge_ids(self):
        return range(1, len(self.edges) + 1)

    @property
    def interior_edge_ids(self):
        return range(self.n + 1, len(self.edges) + 1)

    @cached_property
    def graph(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        for edge_id, (u, v) in enumerate(self.edges, start=1):
            graph.add_edge(u, v, id=edge_id)
        return graph

    @cached_property
    def interior_vertices(self):
        return tuple(sorted((v for v in self.graph if v < 0), reverse=True))

    @cached_property
    def cuts(self):
        """Cut of every edge, indexed by edge id - 1."""
        graph = self.graph.copy()
        cuts = []
        for edge_id, (u, v) in enumerate(self.edges, start=1):
            graph.remove_edge(u, v)
            side = {x for x in nx.node_connected_component(graph, u) if x > 0}
            graph.add_edge(u, v)
            cuts.append(Cut.from_side(side, self.n, edge_id))
        return tuple(cuts)

    @cached_property
    def _paths(self):
        paths = {}
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                walk = nx.shortest_path(self.graph, i, j)
                paths[(i, j)] = frozenset(self.graph[a][b]['id'] for a, b in zip(walk, walk[1:]))
        return paths

    def path_edges(self, i, j):
        """Edge ids of the unique path between leaves i and j."""
        if i == j:
            raise TreeError(f"Path endpoints must differ, got ({i},{j})")
        key = (i, j) if i < j else (j, i)
        if key not in self._paths:
            raise TreeError(f"({i},{j}) is not a pair of leaves of a tree on {self.n} points")
        return self._paths[key]

    def edge_id(self, u, v):
        if not self.graph.has_edge(u, v):
            raise TreeError(f"No edge between {u} and {v}")
        return self.graph[u][v]['id']

    def _min_leaf(self, vertex, parent):
        if vertex > 0:
            return vertex
        return min(self._min_leaf(child, vertex) for child in self.graph[vertex] if child != parent)

    def _subtree_newick(self, vertex, parent):
        if vertex > 0:
            return str(vertex)
        children = sorted((c for c in self.graph[vertex] if c != parent),
                          key=lambda c: self._min_leaf(c, vertex))
        return '(' + ','.join(self._subtree_newick(c, vertex) for c in children) + ')'

    def to_newick(self):
        """
        Deterministic Newick text.

        The tree is rooted on the edge between the neighbour w of leaf 1 and
        the neighbour of w with the larger least leaf, so the n = 4 tree with
        moustaches {1,2} and {3,4} prints as "((1,2),(3,4));".
        """
        if self.n == 2:
            return '(1,2);'
        w = self.edges[0][1]
        x, y = sorted((c for c in self.graph[w] if c != 1), key=lambda c: self._min_leaf(c, w))
        return f"((1,{self._subtree_newick(x, w)}),{self._subtree_newick(y, w)});"

    def __str__(self):
        return self.to_newick()

    @classmethod
    def from_edge_list(cls, n, edge_list):
        """
        Build a tree from unordered edges in canonical edge order.

        Boundary edge i comes i-th; interior edges are sorted by the key of
        their cut (smaller side, ties broken by the side containing leaf 1)
        and oriented from the side1 component. Interior vertex ids may be
        any hashable non-leaf values; they are renumbered -1, -2, ... in order
        of first appearance. Equal labeled trees therefore get equal edges.

        Args:
            n (int): number of leaves
            edge_list (iterable): pairs of vertices

        Returns:
            BinaryTree: the tree

        Raises:
            TreeError: if the edges do not form a binary tree on leaves 1..n
        """
        leaves = set(range(1, n + 1))
        graph = nx.Graph()
        graph.add_edges_from(edge_list)
        if not nx.is_tree(graph):
            raise TreeError('Edges do not form a tree')
        found = {v for v in graph if graph.degree(v) == 1}
        if found != leaves:
            raise TreeError(f"Leaves must be exactly 1..{n}, got {sorted(found, key=str)}")
        if n == 2:
            return cls(2, ((1, 2),))

        boundary = []
        for leaf in range(1, n + 1):
            (neighbour,) = graph[leaf]
            boundary.append((leaf, neighbour))

        keyed = []
        for u, v in list(graph.edges()):
            if u in leaves or v in leaves:
                continue
            graph.remove_edge(u, v)
            side = {x for x in nx.node_connected_component(graph, u) if x in leaves}
            graph.add_edge(u, v)
            cut = Cut.from_side(side, n, 0)
            # u lies on the side1 component
            if cut.side1 != side:
                u, v = v, u
            keyed.append((cut.key, u, v))
        keyed.sort(key=lambda item: item[0])

        ordered = boundary + [(u, v) for _, u, v in keyed]
        renumber = {}
        for u, v in ordered:
            for vertex in (u, v):
                if vertex not in leaves and vertex not in renumber:
                    renumber[vertex] = -(len(renumber) + 1)
        return cls(n, tuple((renumber.get(u, u), renumber.get(v, v)) for u, v in ordered))
