"""Isomorphism-free enumeration of small graphs and trees.

Graphs are grown one vertex at a time: every (connected) graph of order
m+1 arises from a (connected) graph of order m by adding vertex m with
some (non-empty) neighborhood, so augmenting every class representative
and deduplicating by canonical key yields exactly one representative per
class.  Trees grow by attaching a leaf.  A Prüfer-sequence generator for
labeled trees doubles as an independent cross-check at small orders.
"""

from __future__ import annotations

import heapq
from itertools import product
from typing import Iterator

from .canon import canonical_key, tree_canonical_key
from .graph import Graph, bits_of

MAX_CENSUS_ORDER = 7
MAX_TREE_ORDER = 10

# known class counts, order 1 upward (regression anchors)
CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853)
ALL_GRAPH_COUNTS = (1, 2, 4, 11, 34, 156, 1044)
TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106)

_graph_cache: dict = {}
_tree_cache: dict = {}


def enumerate_graphs(n: int, connected_only: bool = True) -> list[Graph]:
    """One representative per isomorphism class of order n."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > MAX_CENSUS_ORDER:
        raise ValueError(
            f"desk scale caps graph enumeration at order {MAX_CENSUS_ORDER}"
        )
    key = (n, connected_only)
    if key not in _graph_cache:
        if n == 1:
            reps = [Graph(1, [])]
        else:
            reps = []
            seen = set()
            low = 1 if connected_only else 0
            for parent in enumerate_graphs(n - 1, connected_only):
                base = parent.edges()
                for nbhd in range(low, 1 << (n - 1)):
                    g = Graph(
                        n, base + [(v, n - 1) for v in bits_of(nbhd)]
                    )
                    ck = canonical_key(g)
                    if ck not in seen:
                        seen.add(ck)
                        reps.append(g)
        _graph_cache[key] = reps
    return list(_graph_cache[key])


def enumerate_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees of order n."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > MAX_TREE_ORDER:
        raise ValueError(f"desk scale caps tree enumeration at order {MAX_TREE_ORDER}")
    if n not in _tree_cache:
        if n == 1:
            reps = [Graph(1, [])]
        else:
            reps = []
            seen = set()
            for parent in enumerate_trees(n - 1):
                base = parent.edges()
                for v in range(n - 1):
                    t = Graph(n, base + [(v, n - 1)])
                    ck = tree_canonical_key(t)
                    if ck not in seen:
                        seen.add(ck)
                        reps.append(t)
        _tree_cache[n] = reps
    return list(_tree_cache[n])


def _edges_from_prufer(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        v = heapq.heappop(leaves)
        edges.append((v, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on n vertices, via Prüfer sequences."""
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        yield Graph(1, [])
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    for seq in product(range(n), repeat=n - 2):
        yield Graph(n, _edges_from_prufer(seq, n))
