"""
Rewriting sigma_1-positive braids, and slice-Bennequin checks
=============================================================

A braid with a word containing a_1 but not a_1^-1 is conjugate to
Delta^{2l} prod L_i R_i, where the L_i avoid a_{n-1} and the R_i avoid a_1.
Quasipositive braids give exact chi_4, against which the FDTC bounds are
checked.
"""

import random

from braidtwist import decompose, parse_word, verify_decomposition
from braidtwist.bennequin import Status, parse_factorization, random_factorization, run_all_checks

u = parse_word("1 2 1 2", 3)
d = decompose(u)
print("decomposition of a1 a2 a1 a2:", d.to_json(), "verified:", verify_decomposition(d, u))

u = parse_word("2 -2 1 2 -1 1 3", 4)
d = decompose(u, find_positive_word=True)
print("after handle reduction:", d.to_json(), "verified:", verify_decomposition(d, u))

f = parse_factorization("2:1;:2;1 -2:1", 3)
for r in run_all_checks(f, k=16):
    print(r.to_json())

rng = random.Random(0)
tally = {s: 0 for s in Status}
for _ in range(40):
    for r in run_all_checks(random_factorization(rng, 4, 6, 4), k=16):
        tally[r.status] += 1
print({s.value: c for s, c in tally.items()})
