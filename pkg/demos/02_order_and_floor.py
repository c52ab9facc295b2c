"""
The Dehornoy order and the floor
================================

A braid is positive when some word for it has a_i, no a_i^-1 and no lower
generators.  Handle reduction produces such a word, and the floor locates a
braid between consecutive powers of the central full twist.
"""

from braidtwist import compare, dehornoy_floor, handle_reduce, order_sign, parse_word
from braidtwist.words import concat, embed, full_twist, identity, power

u = parse_word("1 2 -1", 3)
print("handle reduction of 1 2 -1 ->", handle_reduce(u))
print("sign:", order_sign(u))

# compare(u, v) is the sign of u^-1 v, so GT reads "v is bigger than u"
print("a1 against 1:", compare(identity(3), parse_word("1", 3)))
print("a1 against a1^-1:", compare(parse_word("-1", 3), parse_word("1", 3)))

# the floor of Delta^2 is 1; multiplying by Delta^2 adds one
for text in ["1", "-1", "1 2 1 2 1 2", "2 2 2 -1"]:
    b = parse_word(text, 3)
    shifted = concat(power(full_twist(3), 2), b)
    print(f"floor({text}) = {dehornoy_floor(b)}, floor(Delta^4 * ({text})) = {dehornoy_floor(shifted)}")

# braids on the last n-1 strands sit strictly between Delta^-2 and Delta^2
g = embed(parse_word("1 1 -2 1 2 2", 3), "shift")
print("embedded", g, "has floor", dehornoy_floor(g))
