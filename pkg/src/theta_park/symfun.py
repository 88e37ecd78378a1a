"""Homogeneous symmetric functions in the m, e, h, s bases and the t=1
expansion of the Delta-Xi expressions in the e basis.

Coefficients can be anything supporting ``+`` and ``*`` with ints: QPoly,
QRat, Fractions, or elements of the (q, t) field.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import permutations
from typing import Callable, Iterable, Mapping

from .combinatorics import (
    Partition,
    compositions,
    conjugate,
    enumerate_vectors,
    multiplicities,
    partition_key,
    partitions,
    revmaj,
    standard_tableaux,
    comaj_block,
    to_partition,
)
from .qalgebra import (
    ZERO,
    QPoly,
    QRat,
    assert_polynomial,
    forgotten_principal,
    one_minus_q_pow,
    q_pochhammer_partition,
)

BASES = ("m", "e", "h", "s")
DEFAULT_DEGREE_BOUND = 8


class DegreeTooLarge(ValueError):
    pass


# --------------------------------------------------------------------------
# transition matrices into the monomial basis
# --------------------------------------------------------------------------

def _product_into_m(lam: Partition, mu: Partition, zero_one: bool) -> int:
    """Number of matrices (0-1 if zero_one) with row sums lam, column sums mu."""

    @cache
    def rec(i: int, caps: tuple[int, ...]) -> int:
        if i == len(lam):
            return int(not any(caps))
        total = 0
        for row in _row_fillings(lam[i], caps, zero_one):
            total += rec(i + 1, tuple(c - r for c, r in zip(caps, row)))
        return total

    return rec(0, tuple(mu))


def _row_fillings(k: int, caps: tuple[int, ...], zero_one: bool):
    def gen(j, rem):
        if j == len(caps):
            if rem == 0:
                yield ()
            return
        top = min(caps[j], rem, 1 if zero_one else rem)
        for x in range(top + 1):
            for rest in gen(j + 1, rem - x):
                yield (x,) + rest

    yield from gen(0, k)


@cache
def jacobi_trudi(lam: Partition) -> dict[Partition, int]:
    """s_lam as an integer combination of h_nu via det(h_{lam_i - i + j})."""
    k = len(lam)
    out: dict[Partition, int] = {}
    for perm in permutations(range(k)):
        parts = [lam[i] - i + perm[i] for i in range(k)]
        if any(p < 0 for p in parts):
            continue
        sign = _perm_sign(perm)
        key = to_partition(parts)
        out[key] = out.get(key, 0) + sign
    return {p: c for p, c in out.items() if c}


def _perm_sign(perm) -> int:
    sign, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@cache
def to_m_matrix(basis: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Row lam holds the m-coefficients of b_lam, columns in canonical order."""
    parts = partitions(n)
    if basis == "m":
        return tuple(tuple(int(a == b) for b in parts) for a in parts)
    if basis in ("e", "h"):
        zo = basis == "e"
        return tuple(tuple(_product_into_m(lam, mu, zo) for mu in parts) for lam in parts)
    if basis == "s":
        H = to_m_matrix("h", n)
        idx = {p: i for i, p in enumerate(parts)}
        rows = []
        for lam in parts:
            row = [0] * len(parts)
            for nu, c in jacobi_trudi(lam).items():
                for j, x in enumerate(H[idx[nu]]):
                    row[j] += c * x
            rows.append(tuple(row))
        return tuple(rows)
    raise ValueError(f"unknown basis {basis!r}")


@cache
def from_m_matrix(basis: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Inverse of to_m_matrix; integral for all four bases."""
    A = [[Fraction(x) for x in row] for row in to_m_matrix(basis, n)]
    size = len(A)
    inv = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for col in range(size):
        piv = next(r for r in range(col, size) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(size):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    assert all(x.denominator == 1 for row in inv for x in row)
    return tuple(tuple(int(x) for x in row) for row in inv)


# --------------------------------------------------------------------------
# SymFunc
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SymFunc:
    basis: str
    degree: int
    coeffs: Mapping[Partition, object] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for p, c in self.coeffs.items():
            p = tuple(p)
            if sum(p) != self.degree:
                raise ValueError(f"{p} has size {sum(p)}, expected {self.degree}")
            if c:
                clean[p] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items(), key=lambda kv: partition_key(kv[0]))))

    def __getitem__(self, p):
        return self.coeffs.get(tuple(p), 0)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            other = basis_convert(other, self.basis)
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if other.basis != self.basis:
            other = basis_convert(other, self.basis)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out[p] + c if p in out else c
        return SymFunc(self.basis, self.degree, out)

    def __neg__(self):
        return SymFunc(self.basis, self.degree, {p: -c for p, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a) -> "SymFunc":
        return SymFunc(self.basis, self.degree, {p: c * a for p, c in self.coeffs.items()})

    def map_coeffs(self, f: Callable) -> "SymFunc":
        return SymFunc(self.basis, self.degree, {p: f(c) for p, c in self.coeffs.items()})

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c}){self.basis}{list(p)}" for p, c in self.coeffs.items())


def basis_element(basis: str, lam: Partition) -> SymFunc:
    return SymFunc(basis, sum(lam), {tuple(lam): 1})


def basis_convert(f: SymFunc, target: str, bound: int = DEFAULT_DEGREE_BOUND) -> SymFunc:
    if f.degree > bound:
        raise DegreeTooLarge(f"degree {f.degree} exceeds bound {bound}")
    if target == f.basis:
        return f
    n = f.degree
    parts = partitions(n)
    idx = {p: i for i, p in enumerate(parts)}
    # source -> m
    src = to_m_matrix(f.basis, n)
    in_m: list = [0] * len(parts)
    for p, c in f.coeffs.items():
        row = src[idx[p]]
        for j, x in enumerate(row):
            if x:
                in_m[j] = in_m[j] + c * x
    if target == "m":
        return SymFunc("m", n, dict(zip(parts, in_m)))
    inv = from_m_matrix(target, n)
    out: list = [0] * len(parts)
    for i, c in enumerate(in_m):
        if not c:
            continue
        for j, x in enumerate(inv[i]):
            if x:
                out[j] = out[j] + c * x
    return SymFunc(target, n, dict(zip(parts, out)))


# --------------------------------------------------------------------------
# e-expansions with polynomial coefficients
# --------------------------------------------------------------------------

class EExpansion(dict):
    """Partition eta -> QPoly, zero coefficients omitted."""

    def __init__(self, degree: int, items: Mapping | Iterable = ()):
        super().__init__()
        self.degree = degree
        for eta, poly in dict(items).items():
            if poly:
                self[tuple(eta)] = poly

    def canonical(self) -> list[tuple[Partition, QPoly]]:
        return sorted(self.items(), key=lambda kv: partition_key(kv[0]))

    def __eq__(self, other):
        if isinstance(other, EExpansion):
            return self.degree == other.degree and dict.__eq__(self, other)
        return dict.__eq__(self, other)

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": "e",
            "terms": [{"eta": list(eta), "poly": p.to_json()} for eta, p in self.canonical()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "EExpansion":
        if data.get("basis", "e") != "e":
            raise ValueError("only e-basis expansions are supported")
        items = {tuple(t["eta"]): QPoly.from_json(t["poly"]) for t in data["terms"]}
        return cls(int(data["degree"]), items)

    def to_text(self) -> str:
        if not self:
            return "0"
        return "\n".join(f"e_{_subscript(eta)}: {p}" for eta, p in self.canonical())

    def diff(self, other: "EExpansion") -> list[tuple[Partition, QPoly, QPoly]]:
        keys = sorted(set(self) | set(other), key=partition_key)
        return [(k, self.get(k, ZERO), other.get(k, ZERO)) for k in keys if self.get(k, ZERO) != other.get(k, ZERO)]


def _subscript(eta: Partition) -> str:
    if any(x > 9 for x in eta):
        return "{" + ",".join(map(str, eta)) + "}"
    return "".join(map(str, eta))


def as_eexpansion(f: SymFunc) -> EExpansion:
    if f.basis != "e":
        f = basis_convert(f, "e")
    return EExpansion(f.degree, {p: assert_polynomial(QRat._coerce(c)) for p, c in f.coeffs.items()})


# --------------------------------------------------------------------------
# t = 1 specializations
# --------------------------------------------------------------------------

def _check_size(a, b):
    if sum(a) != sum(b):
        raise ValueError(f"size mismatch: |{tuple(a)}| != |{tuple(b)}|")


@cache
def forgotten_vector_sum(eta: Partition, beta: tuple[int, ...]) -> QRat:
    """Sum over nu in PR(eta, beta) of prod_i f_{nu^i}[1/(1-q)]."""
    total = QRat(0)
    for nu in enumerate_vectors("PR", eta, beta):
        term = QRat(1)
        for part in nu:
            term = term * forgotten_principal(part)
        total = total + term
    return total


def macdonald_t1(mu: Partition) -> SymFunc:
    """Ht_mu[X; q, 1] in the e basis, coefficients QPoly."""
    mu = tuple(mu)
    n = sum(mu)
    scale = q_pochhammer_partition(mu)
    coeffs = {}
    for eta in partitions(n):
        s = forgotten_vector_sum(eta, mu)
        if s:
            coeffs[eta] = assert_polynomial(s * scale)
    return SymFunc("e", n, coeffs)


@cache
def pair_h_t1(mu: tuple[int, ...], lam: Partition) -> QPoly:
    """<Ht_mu, h_lam> at t=1: revmaj generating function of WV(lam, mu)."""
    _check_size(mu, lam)
    return QPoly.from_exponents(sum(revmaj(w) for w in wv) for wv in enumerate_vectors("WV", lam, mu))


@cache
def pair_s_t1(mu: tuple[int, ...], lam: Partition, route: str = "syt") -> QPoly:
    """<Ht_mu, s_lam> at t=1, by standard tableaux (``syt``) or lattice words (``lw``)."""
    _check_size(mu, lam)
    if route == "syt":
        return QPoly.from_exponents(comaj_block(T, mu) for T in standard_tableaux(tuple(lam)))
    if route == "lw":
        return QPoly.from_exponents(sum(revmaj(w) for w in wv) for wv in enumerate_vectors("LW", lam, mu))
    raise ValueError(f"unknown route {route!r}")


def _u(labels, length):
    return sum(x * (length - j) for j, x in enumerate(labels, start=1))


@cache
def monomial_principal(gamma: Partition, beta: tuple[int, ...]) -> QPoly:
    """m_gamma evaluated at the alphabet {q^j : 0 <= j < beta_i} over all i."""
    gamma = tuple(gamma)
    if len(gamma) > sum(beta):
        return ZERO
    return QPoly.from_exponents(
        sum(_u(l, len(l)) for l in lv) for lv in enumerate_vectors("WV", multiplicities(gamma), beta)
    )


def _word_factor(kind: str, lam: Partition, beta: tuple[int, ...]) -> QPoly:
    if kind == "e":
        return pair_h_t1(beta, lam)
    if kind == "s":
        return pair_s_t1(beta, conjugate(lam), "lw")
    raise ValueError(f"unknown kind {kind!r}")


def xi_expand_t1(kind: str, lam: Partition, gamma: Partition, bound: int = DEFAULT_DEGREE_BOUND) -> EExpansion:
    """e-expansion of the t=1 Delta_{m_gamma} Xi e_lam (or s_lam)."""
    lam, gamma = tuple(lam), tuple(gamma)
    n = sum(lam)
    if n > bound:
        raise DegreeTooLarge(f"degree {n} exceeds bound {bound}")
    # beta-dependent factors, shared by every eta
    prefactor: dict[tuple[int, ...], QPoly] = {}
    for beta in compositions(n):
        a = _word_factor(kind, lam, beta)
        if not a:
            continue
        b = monomial_principal(gamma, beta)
        if not b:
            continue
        sign = -1 if (n - len(beta)) % 2 else 1
        prefactor[beta] = a * b * one_minus_q_pow(beta[0]) * sign
    out = {}
    for eta in partitions(n):
        total = QRat(0)
        for beta, pre in prefactor.items():
            if len(beta) > len(eta):
                continue  # PR(eta, beta) is empty
            fv = forgotten_vector_sum(eta, beta)
            if fv:
                total = total + fv * pre
        if total:
            out[eta] = assert_polynomial(total)
    return EExpansion(n, out)
