"""Formal expressions, coherence verdicts, Dutch books and axiom systems."""

from .axioms import Axiom, AxiomSet, generate_axioms
from .beliefs import (
    BeliefAssignment,
    BeliefError,
    CoherenceVerdict,
    DutchBook,
    check_coherence,
    extract_dutch_book,
    load_beliefs,
    verify_dutch_book,
)
from .expressions import (
    Atom,
    Const,
    ExpressionError,
    FormalExpression,
    FormalInequality,
    Product,
    Sum,
    evaluate_expression,
    parse_expression,
    parse_inequality,
    render_expression,
)
from .templates import (
    TEMPLATES,
    AxiomTemplate,
    CompletenessReport,
    SoundnessReport,
    template_library,
    verify_axiom_completeness,
    verify_axiom_soundness,
)
