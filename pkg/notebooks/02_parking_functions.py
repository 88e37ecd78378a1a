"""
Parking functions, polyominoes and the map between them
=======================================================
"""

from theta_park.structures import enumerate_pf, iota, iota_inverse
from theta_park.structures.render import tikz_pair

pfs = list(enumerate_pf((2,), (1, 1)))
print(len(pfs), "parking functions")

for p in pfs:
    r = iota(p)
    # area and e-composition survive the trip
    print(p.P, p.Q, p.w, "area", p.area(), "->", r.P, r.Q, "area", r.area())
    assert iota_inverse(r) == p

# a drawing; paste into a LaTeX document with tikz loaded
print(tikz_pair(pfs[0]))
