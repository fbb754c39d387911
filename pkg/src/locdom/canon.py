"""Canonical forms for isomorphism-free enumeration of small graphs.

The generic key is the lexicographically least upper-triangle adjacency
bitstring over all vertex orderings, read column by column (the same bit
order the graph6 encoding uses), found by backtracking over partial
orderings with prefix pruning.  Trees get a separate rooted encoding that
scales past the generic desk-scale cap.
"""

from __future__ import annotations

from itertools import permutations

from .graph import Graph, bits_of

MAX_CANON_ORDER = 8


def canonical_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Hashable isomorphism invariant: (n, least column bitstring).

    Column j (1 <= j < n) is the j-bit integer of adjacencies between the
    j-th placed vertex and the earlier ones, first-placed highest bit.
    Exact minimum over all orderings; two graphs share a key iff they are
    isomorphic.
    """
    n = g.n
    if n > MAX_CANON_ORDER:
        raise ValueError(
            f"canonical form is desk-scale only (order <= {MAX_CANON_ORDER})"
        )
    if n <= 1:
        return (n, ())
    adj = g.adj
    sentinel = 1 << n  # larger than any j-bit column
    best = [sentinel] * (n - 1)
    perm: list[int] = []
    used = [False] * n

    def descend(depth: int):
        if depth == n:
            return
        cands = []
        for v in range(n):
            if used[v]:
                continue
            c = 0
            for u in perm:
                c = (c << 1) | ((adj[u] >> v) & 1)
            cands.append((c, v))
        cands.sort()
        for c, v in cands:
            if depth >= 1:
                if c > best[depth - 1]:
                    break  # ascending candidates: the rest are worse
                if c < best[depth - 1]:
                    best[depth - 1] = c
                    for i in range(depth, n - 1):
                        best[i] = sentinel
            perm.append(v)
            used[v] = True
            descend(depth + 1)
            perm.pop()
            used[v] = False

    descend(0)
    assert all(c < sentinel for c in best)
    return (n, tuple(best))


def canonical_key_naive(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Reference implementation: minimum over all n! orderings."""
    n = g.n
    if n <= 1:
        return (n, ())
    adj = g.adj
    best = None
    for perm in permutations(range(n)):
        cols = []
        for j in range(1, n):
            c = 0
            for i in range(j):
                c = (c << 1) | ((adj[perm[i]] >> perm[j]) & 1)
            cols.append(c)
        if best is None or cols < best:
            best = cols
    return (n, tuple(best))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    """Desk-scale isomorphism test via canonical keys."""
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    return canonical_key(a) == canonical_key(b)


# -- trees ---------------------------------------------------------------


def _tree_centers(g: Graph) -> list[int]:
    n = g.n
    if n == 1:
        return [0]
    deg = [g.degree(v) for v in range(n)]
    alive = [True] * n
    remaining = n
    layer = [v for v in range(n) if deg[v] <= 1]
    while remaining > 2:
        nxt = []
        for v in layer:
            alive[v] = False
            remaining -= 1
            for u in bits_of(g.adj[v]):
                if alive[u]:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return [v for v in range(n) if alive[v]]


def tree_canonical_key(g: Graph) -> tuple[int, str]:
    """Canonical key for trees of any desk order, via the rooted encoding
    '(' sorted child encodings ')' taken at the tree's center(s)."""
    n = g.n
    if g.edge_count() != n - 1:
        raise ValueError("tree encoding requires a tree")

    def enc(v: int, parent: int) -> str:
        subs = sorted(enc(u, v) for u in bits_of(g.adj[v]) if u != parent)
        return "(" + "".join(subs) + ")"

    best = min(enc(c, -1) for c in _tree_centers(g))
    return (n, best)
