"""
Faces of a braid projection
===========================

Build the planar complex of beta^s with both ends pinched, count its faces,
and compare with the census predicted from the root's peripheral profile.
"""

from ttlink.diagram import build_projection, census_violations, face_census_bruteforce, face_census_closed
from ttlink.roots import RootSubset, enumerate_subsets, peripheral_profile, standard_bar_root

cx = build_projection(standard_bar_root(5), 3)
print(f"v={cx.v} e={cx.e} f={cx.f}  chi={cx.euler_characteristic}")
print(cx.dump())

census = face_census_bruteforce(standard_bar_root(5), 3)
print("brute-force census:", census.to_dict())
print("closed-form census:", face_census_closed(standard_bar_root(5), 3).to_dict())

# a generic root has more bigons at the ends and so some peripheral quadrilaterals
J = RootSubset(6, (1, 3))
print("\nprofile of", J, "->", peripheral_profile(J))
for s in range(1, 5):
    c = face_census_bruteforce(J, s)
    print(f"s={s}: {c.to_dict()} violations={census_violations(c, 6, s)}")

# full oracle sweep over small cases
bad = [(J, s) for r in range(3, 8) for J in enumerate_subsets(r) for s in range(1, 7)
       if face_census_bruteforce(J, s) != face_census_closed(J, s)]
print("\nmismatches in the r <= 7, s <= 6 sweep:", bad)
