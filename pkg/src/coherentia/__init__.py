"""Coherence, Dutch books and probability axioms for finite many-valued logics."""

from .coherence import (
    AxiomSet,
    AxiomTemplate,
    BeliefAssignment,
    DutchBook,
    FormalInequality,
    check_coherence,
    evaluate_expression,
    extract_dutch_book,
    generate_axioms,
    parse_expression,
    parse_inequality,
    template_library,
    verify_axiom_completeness,
    verify_axiom_soundness,
    verify_dutch_book,
)
from .formula import Apply, Letter, parse_formula, render_formula
from .geometry import facet_enumeration, hull_membership
from .semantics import (
    check_equivalence_expressibility,
    cognitive_matrix,
    entails,
    enumerate_valuations,
    eval_formula,
    logically_equivalent,
    quotient_algebra,
)
from .truth import LogicSpec, builtin_logic, load_logic, validate_logic

__version__ = "0.1.0"
