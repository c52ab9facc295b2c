"""
Braid words and the word problem
================================

Braids are stored as signed generator indices with the strand count attached.
Equality is decided by the left-greedy normal form.
"""

from braidtwist import are_equal, delta, full_twist, parse_word, to_normal_form
from braidtwist.words import bar, closure_components, concat, delta_small, power, underlying_permutation

# the braid relation a_1 a_2 a_1 = a_2 a_1 a_2
u = parse_word("1 2 1", 3)
v = parse_word("2 1 2", 3)
print("a1 a2 a1 == a2 a1 a2:", are_equal(u, v))

# normal forms: Delta^inf followed by simple factors (as permutations)
for text in ["1 2 1 2 1 2", "1 -2", "-1 -1 2"]:
    nf = to_normal_form(parse_word(text, 3))
    print(f"{text:>14}  inf={nf.infimum:2d}  sup={nf.supremum:2d}  factors={[f.images for f in nf.factors]}")

# delta^n is the full twist, and conjugating by Delta reverses indices
for n in range(2, 7):
    assert are_equal(power(delta_small(n), n), full_twist(n))
w = parse_word("1 -2 3", 4)
print("Delta w == bar(w) Delta:", are_equal(concat(delta(4), w), concat(bar(w), delta(4))))

# closure data
print("permutation of a1 a2:", underlying_permutation(parse_word("1 2", 3)).images)
print("components of the closure of Delta^2 in B_4:", closure_components(full_twist(4)))
