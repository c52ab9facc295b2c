"""
A pair with defect one
======================

alpha lives on strands 2..n and beta = a_1^2 on strands 1, 2.  Both have
omega = 0 but alpha beta is conjugate to Delta^2 Delta_R^-2, which has
omega = 1, so omega is not a homomorphism and its defect is at least 1.
"""

from braidtwist import defect_search, defect_witness, lemma_witness

for n in (3, 4, 5):
    a, b = lemma_witness(n)
    print(f"n={n}  alpha={a}  beta={b}  gap in {defect_witness(a, b, 32)}")

# random pairs never certify a larger gap
best = defect_search(4, sample_count=200, max_length=10, k=16, seed=1, include_lemma=False)
print("best random pair:", best.alpha, "|", best.beta, "gap in", best.interval)
