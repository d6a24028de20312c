"""Recovering the classical probability axioms from geometry alone.

Run: python demos/classical_axioms.py
"""

from coherentia import builtin_logic, generate_axioms, quotient_algebra, verify_axiom_completeness
from coherentia.coherence import template_library

spec = builtin_logic("classical")

# Over one letter there are only four formulas up to equivalence.
q = quotient_algebra(spec, ["p"])
print("classes:", q.rendered())

# Each valuation gives a 0/1 point over those four classes; the facets of
# their convex hull are, read back as formulas, a complete axiom set.
axioms = generate_axioms(spec, ["p"])
for line in axioms.lines():
    print("  ", line)

# Two letters: 16 classes, still a small polytope.
print(len(generate_axioms(spec, ["p", "q"]).axioms), "axioms over {p, q}")

# The textbook axioms imply every facet ...
print("P1-P3:", verify_axiom_completeness(spec, ["p"], template_library(["P1", "P2", "P3"])).status)

# ... while normalization alone misses additivity, and the checker says which
# facet is missing and which belief function slips through.
report = verify_axiom_completeness(spec, ["p"], template_library(["P1"]))
witness = ", ".join(f"B({k})={v}" for k, v in report.witness.items())
print("P1 alone:", report.status, "| missing", report.missing["text"], "| witness", witness)
