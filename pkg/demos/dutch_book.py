"""Incoherent beliefs and the bets that exploit them.

Run: python demos/dutch_book.py
"""

from coherentia import (
    BeliefAssignment,
    builtin_logic,
    check_coherence,
    extract_dutch_book,
    render_formula,
    verify_dutch_book,
)

classical = builtin_logic("classical")

fair = BeliefAssignment.from_texts(classical, {"p": "3/10", "~p": "7/10"})
verdict = check_coherence(classical, fair)
print("B(p)=3/10, B(~p)=7/10 coherent?", verdict.coherent)
for valuation, weight in verdict.mixture():
    print(f"   weight {weight} on {valuation.describe(classical)}")

greedy = BeliefAssignment.from_texts(classical, {"p": "3/10", "~p": "4/5"})
verdict = check_coherence(classical, greedy)
print("B(p)=3/10, B(~p)=4/5 coherent?", verdict.coherent, "| breaks", verdict.violated["text"])

# Buying both bets at these prices costs 11/10 and pays exactly 1 back.
book = extract_dutch_book(classical, greedy, verdict)
for formula, stake in book.stakes().items():
    print(f"   stake {stake} on {render_formula(formula, classical)}")
print("guaranteed loss:", book.guaranteed_loss_bound)
print("best case for the bettor:", verify_dutch_book(classical, greedy, book))

# In the symmetric logic a half-true p makes ~p half-true as well, yet full
# confidence in both is still exploitable.
symmetric = builtin_logic("symmetric")
both = BeliefAssignment.from_texts(symmetric, {"p": "1", "~p": "1"})
book = extract_dutch_book(symmetric, both, check_coherence(symmetric, both))
print("symmetric B(p)=B(~p)=1, guaranteed loss:", book.guaranteed_loss_bound)
