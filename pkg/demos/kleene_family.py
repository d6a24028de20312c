"""Three logics on one truth table: Kleene, LP and the symmetric logic.

They share the tables for ~, & and | over {0, 1/2, 1}; only the
consequence relation differs.  Run: python demos/kleene_family.py
"""

import dataclasses

from coherentia import (
    builtin_logic,
    check_equivalence_expressibility,
    entails,
    generate_axioms,
    parse_formula,
    render_formula,
)
from coherentia.coherence import template_library, verify_axiom_completeness
from coherentia.formula import HOLE
from coherentia.truth import EquivalenceScheme

kl, lp, sl = (builtin_logic(n) for n in ("kleene", "lp", "symmetric"))
contradiction, q = parse_formula("p & ~p", kl), parse_formula("q", kl)

print("Kleene explodes:", entails(kl, contradiction, q))
print("LP does not:    ", entails(lp, contradiction, q))

# Mutual entailment is too weak for Kleene logic: all contradictions entail
# each other vacuously.  Adding the negation context repairs it.
bare = dataclasses.replace(kl, equivalence=EquivalenceScheme((HOLE,)))
report = check_equivalence_expressibility(bare, ["p", "q"])
print("Kleene, contexts [_]:      holds =", report.holds, "| witness", [render_formula(f, kl) for f in report.witness])
print("Kleene, contexts [_, ~_]:  holds =", check_equivalence_expressibility(kl, ["p", "q"]).holds)

# The cognitive load is e(a) = a, so all three share one polytope.
for spec in (kl, lp, sl):
    print(spec.name, "|", "; ".join(generate_axioms(spec, ["p"]).lines()))

print("SL1-SL4 on SL:", verify_axiom_completeness(sl, ["p"], template_library(["SL1", "SL2", "SL3", "SL4"])).status)
print("SL2-4 + KLP1 on KL:", verify_axiom_completeness(kl, ["p"], template_library(["SL2", "SL3", "SL4", "KLP1"])).status)
