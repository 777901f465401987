"""Exact integer arithmetic on Cayley's cubic surface and its relatives.

The central object is the equation s*(x^2 + y^2 + z^2) - s^3 - 2xyz = 0
over positive integers.  Solutions come in chains driven by scaled
Chebyshev recurrences, are connected by conjugation moves, solve two
families of Pell equations, and contrast with Markov triples through the
continuant calculus.  Everything is computed exactly; no floats anywhere.
"""

from .errors import (
    BudgetExceededError,
    CayleyError,
    DegeneratePellError,
    NonIntegralFamilyError,
    NotASolutionError,
)
from .markov import (
    MAX_TREE_DEPTH,
    MarkovTriple,
    OverlapReport,
    continuant,
    continuant_drop_last,
    continuant_interior,
    continuant_power_sequence,
    markov_neighbor,
    markov_tree,
    markov_tree_dot,
    markov_value,
    sequence_overlap_search,
    splitting_identity_holds,
)
from .pell import (
    FORM_A,
    FORM_Z,
    PellInstance,
    PellSolution,
    family_one_instance,
    family_two_instance,
    pell_family_one,
    pell_family_two,
    pell_oracle,
    verify_pell,
)
from .search import (
    TAG_ORDER,
    Classification,
    classifications_to_csv,
    classifications_to_jsonl,
    classify,
    enumerate_solutions,
    family_membership,
    triples_to_csv,
    triples_to_jsonl,
)
from .sequences import (
    cheb_t,
    cheb_u,
    family_multiplier,
    lucas_u,
    lucas_v,
    scaled_cheb_t,
    scaled_cheb_u,
)
from .triples import (
    COMPONENT_NAMES,
    SolutionGraph,
    Triple,
    base_value,
    cayley_value,
    conjugate_component,
    euclid_index_path,
    family_triple,
    is_base,
    is_singular,
    neighbors,
    reduction_trace,
    solution_graph,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CayleyError",
    "DegeneratePellError",
    "NonIntegralFamilyError",
    "NotASolutionError",
    "MAX_TREE_DEPTH",
    "MarkovTriple",
    "OverlapReport",
    "continuant",
    "continuant_drop_last",
    "continuant_interior",
    "continuant_power_sequence",
    "markov_neighbor",
    "markov_tree",
    "markov_tree_dot",
    "markov_value",
    "sequence_overlap_search",
    "splitting_identity_holds",
    "FORM_A",
    "FORM_Z",
    "PellInstance",
    "PellSolution",
    "family_one_instance",
    "family_two_instance",
    "pell_family_one",
    "pell_family_two",
    "pell_oracle",
    "verify_pell",
    "TAG_ORDER",
    "Classification",
    "classifications_to_csv",
    "classifications_to_jsonl",
    "classify",
    "enumerate_solutions",
    "family_membership",
    "triples_to_csv",
    "triples_to_jsonl",
    "cheb_t",
    "cheb_u",
    "family_multiplier",
    "lucas_u",
    "lucas_v",
    "scaled_cheb_t",
    "scaled_cheb_u",
    "COMPONENT_NAMES",
    "SolutionGraph",
    "Triple",
    "base_value",
    "cayley_value",
    "conjugate_component",
    "euclid_index_path",
    "family_triple",
    "is_base",
    "is_singular",
    "neighbors",
    "reduction_trace",
    "solution_graph",
]
