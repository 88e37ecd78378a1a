"""Modified Macdonald polynomials at generic (q, t) and the Xi operator.

Ht_mu comes from the inv/maj filling formula on the French diagram, so no
linear solve is needed to build the basis. Coefficients live in the field
QT = Frac(Z[q, t]); everything is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import comb
from typing import Sequence

from .combinatorics import (
    Partition,
    arm,
    cells,
    coarm,
    coleg,
    conjugate,
    leg,
    letters_of_content,
    multiset_permutations,
    partitions,
)
from .qalgebra import QT, NonPolynomial, q_sym, qt_at_t1, qt_polynomial_terms, t_sym
from .symfun import EExpansion, SymFunc, as_eexpansion, basis_convert

DEGREE_CAP = 5

# SymFunc with QT coefficients
SymFuncQT = SymFunc


class DegreeTooLarge(ValueError):
    pass


def _check_degree(n: int, cap: int | None) -> None:
    if n > (DEGREE_CAP if cap is None else cap):
        raise DegreeTooLarge(f"degree {n} exceeds cap {DEGREE_CAP if cap is None else cap}")


# --------------------------------------------------------------------------
# Ht_mu by fillings
# --------------------------------------------------------------------------

def filling_stats(mu: Partition, sigma: dict[tuple[int, int], int]) -> tuple[int, int]:
    """(inv, maj) of a filling given as {(col, row): entry}."""
    maj = 0
    arm_des = 0
    for (c, r), x in sigma.items():
        if r > 1 and x > sigma[(c, r - 1)]:
            maj += leg(mu, c, r) + 1
            arm_des += arm(mu, c, r)
    # reading order: top row first, left to right
    order = sorted(sigma, key=lambda cell: (-cell[1], cell[0]))
    pos = {cell: i for i, cell in enumerate(order)}
    inversions = 0
    for (c, r) in sigma:
        for (c2, r2) in sigma:
            attacking = (r2 == r and c2 > c) or (r2 == r - 1 and c2 < c)
            if attacking and pos[(c, r)] < pos[(c2, r2)] and sigma[(c, r)] > sigma[(c2, r2)]:
                inversions += 1
    return inversions - arm_des, maj


@cache
def _ht_cached(mu: Partition) -> SymFunc:
    n = sum(mu)
    diagram = list(cells(mu))
    coeffs = {}
    for lam in partitions(n):
        total = QT(0)
        for word in multiset_permutations(letters_of_content(lam)):
            inv, maj = filling_stats(mu, dict(zip(diagram, word)))
            total += q_sym ** inv * t_sym ** maj
        coeffs[lam] = total
    return SymFunc("m", n, coeffs)


def ht_full(mu: Partition, cap: int | None = None) -> SymFunc:
    """Monomial expansion of the modified Macdonald polynomial Ht_mu."""
    mu = tuple(mu)
    _check_degree(sum(mu), cap)
    return _ht_cached(mu)


def ht_pair_h(mu: Partition, lam: Partition, cap: int | None = None):
    """<h_lam, Ht_mu>, which is the m_lam coefficient."""
    return ht_full(mu, cap).coeffs.get(tuple(lam), QT(0))


# --------------------------------------------------------------------------
# per-mu constants
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class MuConstants:
    mu: Partition
    B: object
    Pi: object
    w: object
    M: object


@cache
def mu_constants(mu: Partition) -> MuConstants:
    mu = tuple(mu)
    if not mu:
        raise ValueError("mu must be nonempty")
    B, Pi, w = QT(0), QT(1), QT(1)
    for c, r in cells(mu):
        a_, l_ = coarm(mu, c, r), coleg(mu, c, r)
        a, l = arm(mu, c, r), leg(mu, c, r)
        B += q_sym ** a_ * t_sym ** l_
        if (c, r) != (1, 1):
            Pi *= 1 - q_sym ** a_ * t_sym ** l_
        w *= (q_sym ** a - t_sym ** (l + 1)) * (t_sym ** l - q_sym ** (a + 1))
    return MuConstants(mu, B, Pi, w, (1 - q_sym) * (1 - t_sym))


def monomials_of(x) -> list:
    """A polynomial with nonnegative integer coefficients as a list of monomials."""
    out = []
    for (a, b), c in qt_polynomial_terms(x).items():
        if c < 0:
            raise ValueError("alphabet must have nonnegative coefficients")
        out.extend([q_sym ** a * t_sym ** b] * c)
    return out


def monomial_plethysm(gamma: Partition, alphabet: Sequence) -> object:
    """m_gamma evaluated at the given list of monomials."""
    gamma = tuple(gamma)
    n = len(alphabet)
    if len(gamma) > n:
        return QT(0)
    total = QT(0)
    for expo in multiset_permutations(list(gamma) + [0] * (n - len(gamma))):
        term = QT(1)
        for x, e in zip(alphabet, expo):
            if e:
                term *= x ** e
        total += term
    return total


# --------------------------------------------------------------------------
# Xi
# --------------------------------------------------------------------------

def xi_full(lam: Partition, gamma: Partition = (), cap: int | None = None) -> dict[Partition, object]:
    """e-coefficients of Delta_{m_gamma} Xi e_lam at generic q, t."""
    lam, gamma = tuple(lam), tuple(gamma)
    n = sum(lam)
    _check_degree(n, cap)
    total = {p: QT(0) for p in partitions(n)}
    for mu in partitions(n):
        k = mu_constants(mu)
        pair = ht_pair_h(mu, lam, cap)
        if not pair:
            continue
        scale = k.M * k.B * k.Pi / k.w * pair * monomial_plethysm(gamma, monomials_of(k.B))
        if not scale:
            continue
        for p, c in ht_full(mu, cap).coeffs.items():
            total[p] += scale * c
    e = basis_convert(SymFunc("m", n, total), "e", bound=max(n, DEGREE_CAP))
    out = {}
    for eta, c in e.coeffs.items():
        if c.denom != 1 and not c.denom.is_ground:
            raise NonPolynomial(c, c.denom)
        out[eta] = c
    return out


def xi_full_at_t1(lam: Partition, gamma: Partition = (), cap: int | None = None) -> EExpansion:
    n = sum(lam)
    return as_eexpansion(SymFunc("e", n, {eta: qt_at_t1(c) for eta, c in xi_full(lam, gamma, cap).items()}))


def swap_qt(x):
    """x(q, t) -> x(t, q)."""
    ring = QT.ring
    num = ring({(b, a): c for (a, b), c in x.numer.terms()})
    den = ring({(b, a): c for (a, b), c in x.denom.terms()})
    return QT(num) / QT(den)


def qt_symmetry_report(lam: Partition, gamma: Partition = ()) -> dict[Partition, bool]:
    """Which e-coefficients are symmetric in q and t (reported, never asserted)."""
    return {eta: swap_qt(c) == c for eta, c in xi_full(lam, gamma).items()}


# --------------------------------------------------------------------------
# q -> 1 + u
# --------------------------------------------------------------------------

def shift_q(x) -> dict[tuple[int, int], int]:
    """Polynomial in q, t rewritten in u = q - 1: {(u-exp, t-exp): coeff}."""
    out: dict[tuple[int, int], int] = {}
    for (a, b), c in qt_polynomial_terms(x).items():
        for j in range(a + 1):
            key = (j, b)
            out[key] = out.get(key, 0) + c * comb(a, j)
    return {k: v for k, v in sorted(out.items()) if v}


@dataclass
class PositivityReport:
    lam: Partition
    gamma: Partition
    coefficients: dict[Partition, list[tuple[int, int, int]]]
    all_nonnegative: bool

    def negatives(self) -> list[tuple[Partition, int, int, int]]:
        return [(eta, a, b, c) for eta, trip in self.coefficients.items() for a, b, c in trip if c < 0]

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "gamma": list(self.gamma),
            "coefficients": [{"eta": list(eta), "terms": [list(t) for t in trip]}
                             for eta, trip in self.coefficients.items()],
            "all_nonnegative": self.all_nonnegative,
        }


def epositivity_check(lam: Partition, gamma: Partition = (), cap: int | None = None) -> PositivityReport:
    lam, gamma = tuple(lam), tuple(gamma)
    coeffs = {}
    for eta, c in sorted(xi_full(lam, gamma, cap).items()):
        coeffs[eta] = [(a, b, v) for (a, b), v in shift_q(c).items()]
    ok = all(v >= 0 for trip in coeffs.values() for _, _, v in trip)
    return PositivityReport(lam, gamma, coeffs, ok)


def ht_conjugate_symmetric(mu: Partition) -> bool:
    """Ht_mu(q, t) == Ht_mu'(t, q)."""
    a, b = ht_full(mu), ht_full(conjugate(tuple(mu)))
    return all(swap_qt(b.coeffs.get(p, QT(0))) == c for p, c in a.coeffs.items())
