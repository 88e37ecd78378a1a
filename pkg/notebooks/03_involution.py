"""
Cancelling signs with the involution
====================================

Sum sign * q^weight over labeled tableau sequences of a fixed type; the
involution pairs off everything except the fixed points.
"""

from collections import Counter

from theta_park.structures import fixed_points, lc_enumerate, lc_weight_sign, psi
from theta_park.symfun import xi_expand_t1

lam, eta, gamma = (2, 1), (1, 1, 1), (1,)
W = 6

signed, survivors = Counter(), Counter()
for T in lc_enumerate(lam, eta, gamma, W):
    w, s = lc_weight_sign(T)
    signed[w] += s
    if psi(T) == T:
        survivors[w] += 1

print("signed sum    ", [signed[k] for k in range(W + 1)])
print("fixed points  ", [survivors[k] for k in range(W + 1)])
print("generated     ", sorted(Counter(lc_weight_sign(T)[0] for T in fixed_points(lam, eta, gamma)).items()))
print("coefficient   ", xi_expand_t1("e", lam, gamma)[eta])
