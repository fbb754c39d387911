"""Cycles and paths: gap configurations, closed-form C_L values, the
six-part type tables with their elimination labels, exhaustive
verification of the two C_15 completer lemmas, and the small-graph and
tree characterizations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .census import enumerate_graphs, enumerate_trees
from .families import cycle, path, spider
from .graph import Graph, VertexSet, bits_of, popcount
from .ld import gamma_l_value, is_ld_mask
from .solver import (
    c_l_at_least,
    c_l_exact,
    c_l_numeric,
    partitions_of_int,
    type_labels,
)

# the only LD 6-set shape on C_15, up to rotation
UNIQUE_C15_GAPS = (2, 1, 2, 1, 2, 1)

CYCLE_TABLE_ORDERS = (7, 8, 9, 10, 11, 13, 15)
PATH_TABLE_ORDERS = (12, 14)


# -- gap configurations --------------------------------------------------


@dataclass(frozen=True)
class GapConfiguration:
    """Inter-member gaps of a subset of C_n, counterclockwise from the
    least member; gap j counts the vertices strictly between consecutive
    members, so the gaps plus the members account for all n vertices."""

    n: int
    gaps: tuple[int, ...]

    def rotations(self) -> list[tuple[int, ...]]:
        m = len(self.gaps)
        return [self.gaps[i:] + self.gaps[:i] for i in range(m)]

    def rotates_to(self, other) -> bool:
        other = tuple(other)
        return any(r == other for r in self.rotations())


def gap_configuration(n: int, a) -> GapConfiguration:
    """Gap configuration of a non-empty subset of the cycle C_n."""
    if n < 3:
        raise ValueError("cycle order must be at least 3")
    members = sorted(set(as_vertices(a, n)))
    if not members:
        raise ValueError("gap configuration needs a non-empty subset")
    gaps = []
    for j in range(len(members) - 1):
        gaps.append(members[j + 1] - members[j] - 1)
    gaps.append(n - members[-1] + members[0] - 1)
    cfg = GapConfiguration(n, tuple(gaps))
    assert sum(g + 1 for g in cfg.gaps) == n
    return cfg


def as_vertices(a, n: int) -> list[int]:
    if isinstance(a, VertexSet):
        return a.to_sorted_list()
    if isinstance(a, int):
        return list(bits_of(a))
    out = []
    for v in a:
        v = int(v)
        if not (0 <= v < n):
            raise ValueError(f"vertex {v} out of range for order {n}")
        out.append(v)
    return out


def reconstruct_from_gaps(n: int, gaps, anchor: int = 0) -> VertexSet:
    """The subset of C_n with the given gaps, least-to-largest from
    anchor; inverse of gap_configuration when anchored at the least
    member."""
    gaps = tuple(int(g) for g in gaps)
    if any(g < 0 for g in gaps):
        raise ValueError("gaps must be non-negative")
    if sum(g + 1 for g in gaps) != n:
        raise ValueError("gaps plus members must account for all n vertices")
    members = []
    at = anchor % n
    for g in gaps:
        members.append(at)
        at = (at + g + 1) % n
    assert len(set(members)) == len(members)
    return VertexSet.of(members, n)


# -- closed forms --------------------------------------------------------


def c_l_cycle_formula(n: int) -> int:
    """Closed-form C_L(C_n)."""
    if n < 3:
        raise ValueError("cycle order must be at least 3")
    if n in (3, 4, 5):
        return n
    if 6 <= n <= 11 or n in (13, 15):
        return 5
    return 6


def c_l_path_formula(n: int) -> int:
    """Closed-form C_L(P_n)."""
    if n < 3:
        raise ValueError("path order must be at least 3")
    if n == 3:
        return 3
    if 4 <= n <= 6:
        return 4
    if 7 <= n <= 15:
        return 5
    return 6


# -- the C_15 completer lemmas -------------------------------------------


def _completers_mask(g: Graph, m: int) -> list[int]:
    return [
        w for w in bits_of(g.full_mask() & ~m) if is_ld_mask(g, m | (1 << w))
    ]


def _connected_within(g: Graph, mask: int) -> bool:
    if mask == 0:
        return True
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in bits_of(frontier):
            nxt |= g.adj[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def verify_lemma_ld5_1() -> dict:
    """Every 5-subset of C_15 has at most one vertex whose addition makes
    an LD-set, and each completed 6-set is a rotation of the unique LD
    shape.  Exhaustive over all 3003 subsets."""
    g = cycle(15)
    scanned = 0
    with_completer = 0
    violations = []
    for combo in combinations(range(15), 5):
        scanned += 1
        m = 0
        for v in combo:
            m |= 1 << v
        if is_ld_mask(g, m):
            violations.append(("five_set_already_ld", combo))
            continue
        cs = _completers_mask(g, m)
        if len(cs) > 1:
            violations.append(("more_than_one_completer", combo, cs))
        elif len(cs) == 1:
            with_completer += 1
            full = m | (1 << cs[0])
            if not gap_configuration(15, full).rotates_to(UNIQUE_C15_GAPS):
                violations.append(("completion_not_unique_shape", combo, cs))
    return {
        "subsets_scanned": scanned,
        "with_completer": with_completer,
        "violations": violations,
        "ok": not violations,
    }


def verify_lemma_ld5_2() -> dict:
    """Classify all 5005 six-subsets of C_15 by completer count.

    Exhaustively checked structure: a non-LD six-subset whose closed
    neighborhood induces a disconnected subgraph, or that leaves four
    or more vertices undominated, has no completing vertex; a
    non-dominating one has at most three completers, and exactly three
    forces exactly one undominated vertex and a connected closed
    neighborhood.  Dominating non-LD six-subsets fall outside that
    three-completer structure: they run up to the general cap of twice
    the maximum degree, which is four on a cycle, and the report lists
    the sets attaining it separately."""
    g = cycle(15)
    full_mask = g.full_mask()
    partner_cap = 2 * g.max_degree()
    scanned = 0
    ld_sets = 0
    histogram: dict[int, int] = {}
    four_completer_sets = []
    structure_violations = []
    for combo in combinations(range(15), 6):
        scanned += 1
        m = 0
        for v in combo:
            m |= 1 << v
        ld = is_ld_mask(g, m)
        unique_shape = gap_configuration(15, m).rotates_to(UNIQUE_C15_GAPS)
        if ld != unique_shape:
            structure_violations.append(("ld_iff_unique_shape", combo, ld))
        if ld:
            ld_sets += 1
            continue
        cs = _completers_mask(g, m)
        k = len(cs)
        histogram[k] = histogram.get(k, 0) + 1
        closed = m
        for v in combo:
            closed |= g.adj[v]
        undominated = popcount(full_mask & ~closed)
        connected = _connected_within(g, closed)
        if k > partner_cap:
            structure_violations.append(("over_partner_cap", combo, cs))
        if k > 0 and not connected:
            structure_violations.append(("disconnected_with_completers", combo, cs))
        if k > 0 and undominated >= 4:
            structure_violations.append(("undominated_four_with_completers", combo, cs))
        if k > 3 and undominated >= 1:
            structure_violations.append(("nondominating_over_three", combo, cs))
        if k == 3 and not (undominated == 1 and connected):
            structure_violations.append(("three_completer_structure", combo, undominated, connected))
        if k == 4:
            four_completer_sets.append((combo, tuple(cs), undominated))
    return {
        "subsets_scanned": scanned,
        "ld_sets": ld_sets,
        "completer_histogram": dict(sorted(histogram.items())),
        "max_completers": max(histogram) if histogram else 0,
        "four_completer_sets": four_completer_sets,
        "three_completer_bound_exceptions": len(four_completer_sets),
        "structure_violations": structure_violations,
        "structure_ok": not structure_violations,
    }


# -- type tables and their refutation ------------------------------------


@dataclass(frozen=True)
class TypeVector:
    """A non-increasing part-size type with its elimination labels."""

    sizes: tuple[int, ...]
    labels: frozenset


def _table_graph(n: int, family: str) -> Graph:
    if family == "cycle":
        if n not in CYCLE_TABLE_ORDERS:
            raise ValueError(f"cycle table covers orders {CYCLE_TABLE_ORDERS}")
        return cycle(n)
    if family == "path":
        if n not in PATH_TABLE_ORDERS:
            raise ValueError(f"path table covers orders {PATH_TABLE_ORDERS}")
        return path(n)
    raise ValueError("family must be 'cycle' or 'path'")


def type_table(n: int, family: str, k: int = 6) -> list[TypeVector]:
    """All k-part size types for the family member of order n, labeled by
    the two elimination criteria; unlabeled rows survive to search."""
    g = _table_graph(n, family)
    gamma = gamma_l_value(g)
    cap = 2 * g.max_degree()
    return [
        TypeVector(t, type_labels(t, gamma, cap))
        for t in partitions_of_int(n, k)
    ]


def surviving_types(n: int, family: str, k: int = 6) -> list[tuple[int, ...]]:
    return [tv.sizes for tv in type_table(n, family, k) if not tv.labels]


def refute_surviving_types(
    n: int,
    family: str,
    budget=None,
    workers: int = 1,
) -> dict:
    """Exhaustively confirm that no surviving type of the k = 6 table is
    realizable, so C_L < 6 for this family member."""
    g = _table_graph(n, family)
    table = type_table(n, family, 6)
    survivors = [tv.sizes for tv in table if not tv.labels]
    refuted = []
    realized = []
    for t in survivors:
        cert = c_l_at_least(
            g,
            6,
            budget=budget,
            workers=workers,
            assume_vertex_transitive=(family == "cycle"),
            only_types=[t],
        )
        if cert is None:
            refuted.append(t)
        else:
            realized.append((t, cert))
    return {
        "n": n,
        "family": family,
        "k": 6,
        "types_total": len(table),
        "label_killed": len(table) - len(survivors),
        "survivors": survivors,
        "refuted": refuted,
        "realized": [t for t, _ in realized],
        "all_refuted": not realized,
    }


def type_table_tsv(n: int, family: str, k: int = 6) -> str:
    """The labeled table as TSV: sizes column, labels column."""
    lines = ["type\tlabels"]
    for tv in type_table(n, family, k):
        sizes = "(" + ",".join(str(s) for s in tv.sizes) + ")"
        labels = ",".join(str(x) for x in sorted(tv.labels))
        lines.append(f"{sizes}\t{labels}")
    return "\n".join(lines) + "\n"


# -- small-graph and tree characterizations ------------------------------


def census_c_l_equals_n() -> list[Graph]:
    """Connected graphs of order 3..5 with C_L = n."""
    out = []
    for n in (3, 4, 5):
        for g in enumerate_graphs(n, connected_only=True):
            if c_l_exact(g).c_l == n:
                out.append(g)
    return out


def census_trees_c_l_n_minus_1() -> list[Graph]:
    """Trees of order 3..8 with C_L = n - 1, with the side facts of the
    order-8 analysis checked along the way."""
    out = []
    for n in range(3, 9):
        for t in enumerate_trees(n):
            if c_l_exact(t).c_l == n - 1:
                out.append(t)
    if gamma_l_value(path(8)) != 4:
        raise AssertionError("expected gamma_l(P_8) = 4")
    legs = list(partitions_of_int(7, 3))
    high = [l for l in legs if gamma_l_value(spider(*l)) == 4]
    low = [l for l in legs if gamma_l_value(spider(*l)) == 3]
    if len(high) != 3 or len(low) != 1:
        raise AssertionError("expected three order-8 spiders with gamma_l 4")
    if c_l_numeric(c_l_exact(spider(*low[0])).c_l) >= 7:
        raise AssertionError("expected the fourth order-8 spider to have C_L < 7")
    return out
