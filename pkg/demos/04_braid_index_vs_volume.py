"""
Braid index grows, volume bound does not
========================================

Twisting two strands of T(p, q) gives links whose braid index is min(p, q)
while the volume bound never exceeds 10 v3.
"""

from math import gcd

from ttlink.bounds import volume_bound_ttl
from ttlink.tlink import TwistedTorusParams, braid_index, component_count, lorenz_dual

print(" p   q  index  bound(v3)")
for p, q in [(3, 4), (5, 7), (11, 13), (23, 29), (47, 49)]:
    t = TwistedTorusParams(p, q, 2, 3)
    print(f"{p:>2} {q:>3} {braid_index(t):>6} {volume_bound_ttl(t).v3_units!s:>10}")

# a shared factor makes the twisted region sit inside a satellite pattern
t = TwistedTorusParams(6, 4, 2, 3)
print("\n", t, "gcd", gcd(6, 4), "bound", volume_bound_ttl(t).v3_units)

# Lorenz duality exchanges q and r for positive standard roots
a = TwistedTorusParams(5, 3, 2, 4)
b = lorenz_dual(a)
print("\n", a, "<->", b)
print("braid index", braid_index(a), braid_index(b))
print("components", component_count(a), component_count(b))
