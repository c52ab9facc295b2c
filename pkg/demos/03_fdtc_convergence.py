"""
Enclosing the fractional Dehn twist coefficient
===============================================

floor(b^k) / k converges to omega(b), and every k gives a rigorous interval
of width 1/k.  Here we watch the intervals for delta = a_1 ... a_{n-1} close in
on 1/n.
"""

from fractions import Fraction

import numpy as np

from braidtwist import floor_interval
from braidtwist.words import delta_small

n = 4
d = delta_small(n)
ks = np.arange(1, 25)
rows = [floor_interval(d, int(k)) for k in ks]

print(f"omega(delta) in B_{n} should be 1/{n}")
print("  k        lo        hi")
for k, iv in zip(ks, rows):
    print(f"{k:3d}  {str(iv.lo):>8}  {str(iv.hi):>8}")

# the running intersection is already tight
lo = max(iv.lo for iv in rows)
hi = min(iv.hi for iv in rows)
print("intersection:", f"[{lo}, {hi}]", "contains 1/4:", lo <= Fraction(1, n) <= hi)

# widths shrink like 1/k
widths = np.array([float(iv.width) for iv in rows])
print("k * width:", np.unique(np.round(ks * widths, 12)))
