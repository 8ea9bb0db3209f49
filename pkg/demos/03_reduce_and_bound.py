"""
From (p, q, r, s) to a tetrahedron count
========================================

Reduce the torus slope of the surgery parent, then count tetrahedra and
read off a volume upper bound in units of v3.
"""

from ttlink.bounds import V3, best_bound, volume_bound_tlink, volume_bound_ttl
from ttlink.reduction import reduce
from ttlink.roots import RootSubset
from ttlink.tlink import Stage, TLinkSpec, TwistedTorusParams, parse_spec

m = reduce(3, 7, 5, 0)
print("reduce(3,7,5,0):", m.to_dict(), "ratio", m.ratio())

m = reduce(9, 7, 5, 3)
print("reduce(9,7,5,3): slots", m.slot_pair, "s' =", m.s_prime, "cf =", m.cf)

for root in ("delta", "{1}", "{1,3}"):
    params = parse_spec(f"T(9,7,5,3,{root})")
    b = volume_bound_ttl(params)
    print(f"{str(params):<12} root {root:<6} {b.tetrahedra} tetrahedra -> {b.decimal:.4f}"
          f"  (closed form {b.theorem_units} v3)")

# for large parameters the reduction does the heavy lifting
big = TwistedTorusParams(1_000_003, 777_777, 6, 1_000_001)
print("\n", big, volume_bound_ttl(big).to_dict())

# a T-link with two twisting regions
spec = TLinkSpec(9, 7, (Stage(5, 3, RootSubset(5, ())), Stage(3, 1)))
b = volume_bound_tlink(spec)
print("\n", spec, b.tetrahedra, "tetrahedra; closed form", b.theorem_units, "v3")

# the duality bound can beat the count when q is small
p = TwistedTorusParams(40, 3, 30, 29)
print("\n", p, "count:", volume_bound_ttl(p).v3_units, "best:", best_bound(p).v3_units, "v3")
print("v3 =", V3)
