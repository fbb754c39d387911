from itertools import permutations

from locdom.canon import (
    are_isomorphic,
    canonical_key,
    canonical_key_naive,
    tree_canonical_key,
)
from locdom.census import (
    ALL_GRAPH_COUNTS,
    CONNECTED_COUNTS,
    TREE_COUNTS,
    enumerate_graphs,
    enumerate_trees,
    labeled_trees,
)
from locdom.families import complete, cycle, path, star


def test_canonical_key_matches_naive_small():
    for n in range(1, 6):
        for g in enumerate_graphs(n, connected_only=False):
            assert canonical_key(g) == canonical_key_naive(g)


def test_canonical_key_invariant_under_relabeling():
    g = cycle(5)
    key = canonical_key(g)
    for perm in permutations(range(5)):
        assert canonical_key(g.relabeled(perm)) == key


def test_are_isomorphic():
    assert are_isomorphic(path(4).relabeled([2, 0, 3, 1]), path(4))
    assert not are_isomorphic(path(4), star(4))
    assert not are_isomorphic(cycle(6), path(6))


def test_connected_census_counts():
    for n in range(1, 8):
        got = len(enumerate_graphs(n, connected_only=True))
        assert got == CONNECTED_COUNTS[n - 1]


def test_all_graph_census_counts():
    for n in range(1, 7):
        got = len(enumerate_graphs(n, connected_only=False))
        assert got == ALL_GRAPH_COUNTS[n - 1]


def test_tree_census_counts():
    for n in range(1, 11):
        assert len(enumerate_trees(n)) == TREE_COUNTS[n - 1]


def test_trees_agree_with_prufer_enumeration():
    n = 7
    labeled = 0
    classes = set()
    for t in labeled_trees(n):
        labeled += 1
        classes.add(tree_canonical_key(t))
    assert labeled == n ** (n - 2)
    assert len(classes) == TREE_COUNTS[n - 1]


def test_tree_key_invariant_under_relabeling():
    t = next(iter(enumerate_trees(6)))
    key = tree_canonical_key(t)
    assert tree_canonical_key(t.relabeled([5, 3, 1, 0, 2, 4])) == key


def test_tree_key_separates_small_trees():
    keys = {tree_canonical_key(t) for t in enumerate_trees(8)}
    assert len(keys) == TREE_COUNTS[7]
    assert tree_canonical_key(path(5)) != tree_canonical_key(star(5))
