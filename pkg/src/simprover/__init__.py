"""Saturation prover with conjecture-similarity clause selection."""

from .distance import (
    EMPTY_RELATED_DISTANCE,
    EditCosts,
    StructCosts,
    levenshtein,
    longest_related_prefix,
    min_distance_to_related,
    struct_distance,
    tree_edit_distance,
)
from .heuristic import decode_cost_code, parse_heuristic, print_heuristic
from .related import RelatedSet, build_related, contains
from .saturation import (
    Limits,
    ProofState,
    SaturationResult,
    factor,
    format_derivation,
    forward_subsumed,
    is_tautology,
    resolve,
    saturate,
    select_given,
    subsumes,
    verify_derivation,
)
from .terms import (
    ALF,
    UNI,
    Clause,
    Literal,
    Symbol,
    Term,
    const,
    func,
    normalize,
    pred,
    subterms,
    symbol_sequence,
    term_size,
    var,
)
from .tptp import ParseError, clause_to_cnf, parse_problem, problem_to_tptp
from .weights import (
    CEF,
    DocRegistry,
    Heuristic,
    SymbolWeights,
    WeightFnSpec,
    clause_weight,
    evaluate,
    extend,
    priority,
    register_document,
    weight_one_distance,
    weight_one_pref,
    weight_one_term,
    weight_one_tfidf,
)

__version__ = "0.1.0"
