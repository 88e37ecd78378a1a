"""
Leaving t generic
=================

Modified Macdonald polynomials from fillings, the Xi operator at generic
(q, t), and the sign pattern after q -> 1 + u.
"""

from theta_park.macdonald import epositivity_check, ht_full, qt_symmetry_report, xi_full

# Ht_21 in the monomial basis
for lam, c in ht_full((2, 1)).coeffs.items():
    print(lam, c)

# specializing t=1 recovers the e-expansion from the first demo
for eta, c in xi_full((1, 1), (2,)).items():
    print(eta, c)

print(qt_symmetry_report((2, 1), (1,)))

rep = epositivity_check((2, 1), (1,))
print("all nonnegative:", rep.all_nonnegative)
for eta, terms in rep.coefficients.items():
    print(eta, terms)
