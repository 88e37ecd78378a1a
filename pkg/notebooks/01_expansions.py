"""
Two ways to the same e-expansion
================================

The t=1 coefficients computed from symmetric functions, then the same
numbers read off parking functions.
"""

from theta_park import combinatorial_expansion, xi_expand_t1

# symmetric-function side: forgotten functions, word vectors, monomials
oracle = xi_expand_t1("e", (1, 1), (2,))
print(oracle.to_text())

# combinatorial side: q^area grouped by e-composition
paths = combinatorial_expansion("e", (1, 1), (2,))
print(paths == oracle)

# Schur version uses lattice words on the conjugate shape
print(xi_expand_t1("s", (2, 1), (1,)).to_text())

# e_n is fixed
for n in range(1, 6):
    print(n, xi_expand_t1("e", (n,), ()).to_text())
