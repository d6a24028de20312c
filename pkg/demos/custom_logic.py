"""A user-defined logic: Kleene tables, but a half-true claim is fully believed.

Run: python demos/custom_logic.py
"""

from pathlib import Path

from coherentia import generate_axioms, load_logic

spec = load_logic(str(Path(__file__).with_name("optimist_kleene.json")))
axioms = generate_axioms(spec, ["p"])

print(spec.name, "over {p}:")
for line in axioms.lines():
    print("  ", line)
print("logical axiom:", axioms.logical_axiom)
# With e(1/2) = 1 the negation pair no longer sums to one: B(p) + B(~p) >= 1.
