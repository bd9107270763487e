"""Computing, bounding and certifying the functionality of graphs."""

from .graph import (
    BITSET_THRESHOLD,
    BipartiteGraph,
    Graph,
    complement,
    gen_bipartite,
    gen_gnp,
    induced_subgraph,
    named_family,
    read_bipartite,
    read_edge_list,
    write_bipartite,
    write_edge_list,
)
from .parameters import (
    EliminationOrder,
    common_neighbours,
    degeneracy,
    degrees,
    max_common_neighbours,
    max_degree,
    min_degree,
    symmetric_difference,
)
from .functionality import (
    FunctionalityWitness,
    confusing_pair,
    distinguishing_set_from_probe,
    extend_to_distinguishing,
    fun_upper_via_degeneracy,
    fun_upper_via_rep,
    graph_functionality_exact,
    is_distinguishing,
    is_function_of,
    is_function_of_transversal,
    repetition_number,
    vertex_functionality,
)
from .domination import (
    DominationParams,
    DominationTrace,
    greedy_paper_domination,
    greedy_simple_domination,
    is_dominating,
    min_dominating_exact,
    t_dominating_by_union,
)
from .witness import (
    LowerBoundParams,
    WitnessBudget,
    confusable_set,
    find_functional_vertex,
    lower_bound_pipeline,
    lower_certificate_check,
    peel_low_degree,
    upper_witness_for_vertex,
)
from .errors import BudgetExceeded, Infeasible, SizeLimitExceeded

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "BITSET_THRESHOLD",
    "BudgetExceeded",
    "common_neighbours",
    "complement",
    "confusable_set",
    "confusing_pair",
    "degeneracy",
    "degrees",
    "distinguishing_set_from_probe",
    "DominationParams",
    "DominationTrace",
    "EliminationOrder",
    "extend_to_distinguishing",
    "find_functional_vertex",
    "fun_upper_via_degeneracy",
    "fun_upper_via_rep",
    "FunctionalityWitness",
    "gen_bipartite",
    "gen_gnp",
    "Graph",
    "graph_functionality_exact",
    "greedy_paper_domination",
    "greedy_simple_domination",
    "induced_subgraph",
    "Infeasible",
    "is_distinguishing",
    "is_dominating",
    "is_function_of",
    "is_function_of_transversal",
    "lower_bound_pipeline",
    "lower_certificate_check",
    "LowerBoundParams",
    "max_common_neighbours",
    "max_degree",
    "min_degree",
    "min_dominating_exact",
    "named_family",
    "peel_low_degree",
    "read_bipartite",
    "read_edge_list",
    "repetition_number",
    "SizeLimitExceeded",
    "symmetric_difference",
    "t_dominating_by_union",
    "upper_witness_for_vertex",
    "vertex_functionality",
    "WitnessBudget",
    "write_bipartite",
    "write_edge_list",
]
