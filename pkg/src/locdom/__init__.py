"""Locating-dominating sets and LD-coalition partitions of small graphs:
exact solvers with certificates, structural builders, cycle and path
tables, censuses, and a reproduction harness."""

__version__ = "0.1.0"

from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    VertexSet,
    is_connected,
)
from .families import (
    c5_plus_e,
    complete,
    complete_bipartite,
    cycle,
    generate,
    h_graph,
    k4_minus_e,
    parse_family_spec,
    path,
    spider,
    star,
)
from .graphio import (
    parse_any,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)
from .ld import (
    DomaticResult,
    LdVerdict,
    d_loc,
    gamma_l,
    gamma_l_value,
    is_dominating,
    is_ld_set,
    is_locating,
    minimalize_ld_set,
    slater_log_lower_bound,
)
from .coalition import (
    CoalitionGraph,
    LdcCertificate,
    Partition,
    PartitionError,
    Refusal,
    build_diam3_partition,
    build_from_domatic,
    build_halves_partition,
    build_twin_partition,
    coalition_graph,
    is_ld_coalition,
    max_singleton_completers,
    partner_count,
    verify_ldc_partition,
)
from .solver import (
    Budget,
    BudgetExceeded,
    SolveReport,
    c_l_at_least,
    c_l_exact,
    c_l_oracle,
    plain_coalition_number,
)
from .cyclepath import (
    GapConfiguration,
    c_l_cycle_formula,
    c_l_path_formula,
    gap_configuration,
    reconstruct_from_gaps,
    refute_surviving_types,
    type_table,
    verify_lemma_ld5_1,
    verify_lemma_ld5_2,
)
from .census import enumerate_graphs, enumerate_trees
from .canon import are_isomorphic, canonical_key, tree_canonical_key
from .cubic import find_sharp_witness
from .repro import run_claims

__all__ = [
    "Budget",
    "BudgetExceeded",
    "CoalitionGraph",
    "DisconnectedGraphError",
    "DomaticResult",
    "GapConfiguration",
    "Graph",
    "GraphFormatError",
    "LdcCertificate",
    "LdVerdict",
    "Partition",
    "PartitionError",
    "Refusal",
    "SolveReport",
    "VertexSet",
    "are_isomorphic",
    "build_diam3_partition",
    "build_from_domatic",
    "build_halves_partition",
    "build_twin_partition",
    "c5_plus_e",
    "c_l_at_least",
    "c_l_cycle_formula",
    "c_l_exact",
    "c_l_oracle",
    "c_l_path_formula",
    "canonical_key",
    "coalition_graph",
    "complete",
    "complete_bipartite",
    "cycle",
    "d_loc",
    "enumerate_graphs",
    "enumerate_trees",
    "find_sharp_witness",
    "gamma_l",
    "gamma_l_value",
    "gap_configuration",
    "generate",
    "h_graph",
    "is_connected",
    "is_dominating",
    "is_ld_coalition",
    "is_ld_set",
    "is_locating",
    "k4_minus_e",
    "max_singleton_completers",
    "minimalize_ld_set",
    "parse_any",
    "parse_edge_list",
    "parse_family_spec",
    "parse_graph6",
    "partner_count",
    "path",
    "plain_coalition_number",
    "reconstruct_from_gaps",
    "refute_surviving_types",
    "run_claims",
    "slater_log_lower_bound",
    "spider",
    "star",
    "to_edge_list",
    "to_graph6",
    "tree_canonical_key",
    "type_table",
    "verify_lemma_ld5_1",
    "verify_lemma_ld5_2",
    "verify_ldc_partition",
]
