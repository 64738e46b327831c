"""Deciding identities in finite additively idempotent semirings.

Terms are finite sets of nonempty words; identities can be settled by a
brute-force evaluation oracle over any finite semiring or by syntactic
criteria for the built-in algebras and their zero-adjunctions, with a
derivation calculus and the odd-cycle witness family on top.
"""

from .algebra import (
    BUILTIN_NAMES,
    AxiomViolation,
    Congruence,
    CongruenceViolation,
    FiniteSemiring,
    adjoin_zero,
    builtin,
    find_isomorphism,
    is_isomorphic,
    quotient,
    semiring_from_json,
    semiring_to_json,
    tables_from_json,
    validate_ai_semiring,
    validate_congruence,
)
from .deciders import (
    CrossValReport,
    Verdict,
    cross_validate,
    holds_bruteforce,
    holds_d2,
    holds_s0_lift,
    holds_s7,
    holds_s7_0,
    random_identity,
)
from .derivation import (
    AxiomSet,
    ChainVerdict,
    DerivationChain,
    DerivationStep,
    SearchBounds,
    SearchOutcome,
    StepMismatch,
    apply_step,
    axioms_from_json,
    axioms_to_json,
    chain_from_json,
    chain_to_json,
    search_derivation,
    verify_chain,
)
from .errors import SizeLimitError
from .graphs import OddCycleSearch, TermGraph, odd_cycle, term_graph
from .parsing import ParseError, parse_identity, parse_term, parse_word
from .terms import (
    DELTA_VARIABLE_CAP,
    Identity,
    Term,
    Word,
    components,
    content,
    decompose,
    delta_sets,
    evaluate,
    filter_content_avoiding,
    filter_content_subset,
    format_word,
    is_linear,
    occurrences,
    substitute,
    word_length,
)
from .witness import (
    ConditionCheck,
    ConditionReport,
    FactCheck,
    WitnessPair,
    WitnessReport,
    check_axiom_conditions,
    check_witness_facts,
    make_witness,
)

__all__ = [
    "AxiomSet",
    "AxiomViolation",
    "BUILTIN_NAMES",
    "ChainVerdict",
    "ConditionCheck",
    "ConditionReport",
    "Congruence",
    "CongruenceViolation",
    "CrossValReport",
    "DELTA_VARIABLE_CAP",
    "DerivationChain",
    "DerivationStep",
    "FactCheck",
    "FiniteSemiring",
    "Identity",
    "OddCycleSearch",
    "ParseError",
    "SearchBounds",
    "SearchOutcome",
    "SizeLimitError",
    "StepMismatch",
    "Term",
    "TermGraph",
    "Verdict",
    "WitnessPair",
    "WitnessReport",
    "Word",
    "adjoin_zero",
    "apply_step",
    "axioms_from_json",
    "axioms_to_json",
    "builtin",
    "chain_from_json",
    "chain_to_json",
    "check_axiom_conditions",
    "check_witness_facts",
    "components",
    "content",
    "cross_validate",
    "decompose",
    "delta_sets",
    "evaluate",
    "filter_content_avoiding",
    "filter_content_subset",
    "find_isomorphism",
    "format_word",
    "holds_bruteforce",
    "holds_d2",
    "holds_s0_lift",
    "holds_s7",
    "holds_s7_0",
    "is_isomorphic",
    "is_linear",
    "make_witness",
    "occurrences",
    "odd_cycle",
    "parse_identity",
    "parse_term",
    "parse_word",
    "quotient",
    "random_identity",
    "search_derivation",
    "semiring_from_json",
    "semiring_to_json",
    "substitute",
    "tables_from_json",
    "term_graph",
    "validate_ai_semiring",
    "validate_congruence",
    "verify_chain",
    "word_length",
]

__version__ = "0.1.0"
