"""Exact computations around Delta_{m_gamma} Xi e_lambda at t = 1: the
symmetric-function side, the gamma-parking-function side, and the
combinatorics linking them."""
from .combinatorics import (
    comaj_block,
    conjugate,
    enumerate_vectors,
    lattice_word_syt,
    multiplicity_type,
    partitions,
    rearrangements,
    word_stats,
)
from .qalgebra import (
    NonPolynomial,
    QPoly,
    QRat,
    assert_polynomial,
    forgotten_principal,
    q_analogs,
    substitute_q,
)
from .symfun import (
    EExpansion,
    SymFunc,
    basis_convert,
    macdonald_t1,
    monomial_principal,
    pair_h_t1,
    pair_s_t1,
    xi_expand_t1,
)
from .macdonald import epositivity_check, ht_full, mu_constants, xi_full
from .structures import combinatorial_expansion, extended_delta_map, iota, phi, psi

__version__ = "0.1.0"
