import networkx as nx
import pytest

from minfill.errors import TreeError
from minfill.models.binary_tree import BinaryTree
from minfill.services.tree_service import (STAR, double_factorial, edge_cut, eliminate_moustache,
                                           enumerate_topologies, group_by_shape, moustaches, named_tree,
                                           parse_newick, path_edges, random_topology, shape_key)


def test_star_is_the_only_three_point_tree():
    trees = enumerate_topologies(3)
    assert trees == (STAR,)
    assert moustaches(STAR) == [(1, 2), (1, 3), (2, 3)]


@pytest.mark.parametrize('n', [3, 4, 5, 6, 7])
def test_topology_count(n):
    trees = enumerate_topologies(n)
    assert len(trees) == double_factorial(2 * n - 5)
    assert len({tree.to_newick() for tree in trees}) == len(trees)


def test_topologies_need_three_points():
    with pytest.raises(TreeError):
        enumerate_topologies(2)


def test_six_points_have_two_shapes(caterpillar6, snowflake6):
    groups = group_by_shape(enumerate_topologies(6))
    assert len(groups) == 2
    assert shape_key(caterpillar6) in groups
    assert shape_key(snowflake6) in groups
    assert sum(len(trees) for trees in groups.values()) == 105


def test_seven_points_have_two_shapes():
    assert len(group_by_shape(enumerate_topologies(7))) == 2


def test_moustaches(caterpillar4, snowflake6):
    assert moustaches(caterpillar4) == [(1, 2), (3, 4)]
    assert moustaches(snowflake6) == [(1, 2), (3, 4), (5, 6)]
    assert moustaches(named_tree('caterpillar', 6)) == [(1, 2), (5, 6)]


def test_every_tree_has_moustaches():
    for tree in enumerate_topologies(6):
        assert moustaches(tree)


def test_edge_cuts(caterpillar4, caterpillar5):
    cut = edge_cut(caterpillar4, 1)
    assert cut.side1 == {1} and cut.side2 == {2, 3, 4}
    assert str(edge_cut(caterpillar4, 5)) == '{1,2} | {3,4}'
    assert edge_cut(caterpillar5, 6).side1 == {1, 2}
    assert edge_cut(caterpillar5, 7).side1 == {4, 5}
    with pytest.raises(TreeError):
        edge_cut(caterpillar4, 6)


def test_named_edge_numbering(caterpillar6, snowflake6):
    assert [caterpillar6.cuts[e - 1].key for e in (7, 8, 9)] == [(1, 2), (1, 2, 3), (5, 6)]
    assert [snowflake6.cuts[e - 1].key for e in (7, 8, 9)] == [(1, 2), (3, 4), (5, 6)]


def test_path_edges(caterpillar4):
    assert path_edges(caterpillar4, 1, 2) == {1, 2}
    assert path_edges(caterpillar4, 1, 3) == {1, 3, 5}
    assert path_edges(caterpillar4, 4, 1) == {1, 4, 5}
    with pytest.raises(TreeError):
        path_edges(caterpillar4, 2, 2)


def test_moustache_paths_have_two_edges():
    for tree in enumerate_topologies(5):
        for i, j in moustaches(tree):
            assert len(path_edges(tree, i, j)) == 2


def test_cut_path_duality():
    for n in (4, 5, 6):
        for tree in enumerate_topologies(n):
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    crossing = {cut.edge for cut in tree.cuts if cut.separates(i, j)}
                    assert crossing == path_edges(tree, i, j)


def test_moustache_elimination_gives_binary_trees():
    for tree in enumerate_topologies(6):
        for pair in moustaches(tree):
            smaller = eliminate_moustache(tree, pair)
            assert smaller.n == 5
            assert len(smaller.edges) == 7
            assert nx.is_tree(smaller.graph)


def test_moustache_elimination_relabels(caterpillar5):
    reduced = eliminate_moustache(caterpillar5, (4, 5))
    assert reduced.n == 4
    assert moustaches(reduced) == [(1, 2), (3, 4)]
    with pytest.raises(TreeError):
        eliminate_moustache(caterpillar5, (1, 3))


def test_newick_round_trip():
    for tree in enumerate_topologies(6):
        assert parse_newick(tree.to_newick()) == tree


def test_newick_rendering(caterpillar4, snowflake6):
    assert caterpillar4.to_newick() == '((1,2),(3,4));'
    assert parse_newick('((3,4),(1,2));') == caterpillar4
    assert parse_newick('(1,2,(3,4));') == caterpillar4
    assert snowflake6.to_newick() == '((1,2),((3,4),(5,6)));'


@pytest.mark.parametrize('text', [
    '',
    '((1,2),(3,4)',
    '((1,2),(3,5));',
    '((1,2,3),(4,5));',
    '((1,1),(2,3));',
    '((a,2),(3,4));',
    '((1,2),(3,4));x',
])
def test_malformed_newick(text):
    with pytest.raises(TreeError):
        parse_newick(text)


def test_named_trees():
    assert named_tree('caterpillar', 3) == STAR
    assert moustaches(named_tree('caterpillar', 7)) == [(1, 2), (6, 7)]
    assert moustaches(named_tree('snowflake', 7)) == [(1, 2), (3, 4), (6, 7)]
    with pytest.raises(TreeError):
        named_tree('snowflake', 5)
    with pytest.raises(TreeError):
        named_tree('spiral', 5)


def test_two_point_tree():
    tree = BinaryTree(2, ((2, 1),))
    assert tree.edges == ((1, 2),)
    assert tree.path_edges(1, 2) == {1}
    assert tree.to_newick() == '(1,2);'


def test_invalid_edge_lists():
    with pytest.raises(TreeError):
        BinaryTree(4, ((1, -1), (2, -1), (3, -2), (4, -2)))
    with pytest.raises(TreeError):
        BinaryTree(4, ((1, -1), (2, -1), (3, -1), (4, -2), (-1, -2)))


def test_random_topology(rng):
    tree = random_topology(rng, 6)
    assert tree in enumerate_topologies(6)
