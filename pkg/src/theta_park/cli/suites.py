"""Verification suites behind ``theta-park verify``.

Each suite splits into independent jobs; a job returns a list of failure
messages (empty when it passes). Jobs are top-level functions so they can be
shipped to worker processes.
"""
from __future__ import annotations

import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from ..combinatorics import hook_length_count, partitions, to_partition
from ..macdonald import epositivity_check, ht_full, xi_full_at_t1
from ..qalgebra import QPoly, QRat, forgotten_principal, one_minus_q_pow, qt_at_t1
from ..structures.cct import (
    cct_enumerate,
    fixed_points,
    lc_enumerate,
    lc_weight_sign,
    phi,
    phi_inverse,
    psi,
)
from ..structures.extended_delta import check_extended_delta
from ..structures.paths import (
    ASC,
    DES,
    area_gf,
    ascent_polyominoes,
    combinatorial_expansion,
    e_composition,
    enumerate_pf,
    iota,
    iota_inverse,
    north_runs,
    polyominoes,
)
from ..symfun import EExpansion, basis_convert, macdonald_t1, pair_h_t1, pair_s_t1, xi_expand_t1


def thread_count(default: int = 1) -> int:
    raw = os.environ.get("THETA_PARK_THREADS")
    if raw is None:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        return default


def run_jobs(fn: Callable, jobs: list, threads: int = 1) -> list:
    """fn over jobs, results in job order whatever the parallelism."""
    if threads <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, jobs))


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self, timings: bool = False) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.name}: {self.checked} checked, {len(self.failures)} failed"
        if timings:
            out += f" ({self.seconds:.2f} s)"
        return out


def _parts_upto(n_max: int, start: int = 1):
    for n in range(start, n_max + 1):
        yield from partitions(n)


def _expansion_diff(a: EExpansion, b: EExpansion, tag) -> list[str]:
    d = a.diff(b)
    if not d:
        return []
    eta, x, y = d[0]
    return [f"{tag}: eta={eta} oracle={x} combinatorial={y}"]


# --------------------------------------------------------------------------
# jobs
# --------------------------------------------------------------------------

def job_theorem(args) -> list[str]:
    kind, lam, gamma = args
    return _expansion_diff(xi_expand_t1(kind, lam, gamma), combinatorial_expansion(kind, lam, gamma),
                           f"kind={kind} lambda={lam} gamma={gamma}")


def job_xi_en(n: int) -> list[str]:
    want = EExpansion(n, {(n,): QPoly.const(1)})
    out = []
    if xi_expand_t1("e", (n,), ()) != want:
        out.append(f"oracle Xi e_{n} != e_{n}")
    if combinatorial_expansion("e", (n,), ()) != want:
        out.append(f"combinatorial Xi e_{n} != e_{n}")
    return out


def job_involution(args) -> list[str]:
    lam, eta, gamma, wmax = args
    signed, fixed = Counter(), Counter()
    out = []
    for T in lc_enumerate(lam, eta, gamma, wmax):
        U = psi(T)
        w, s = lc_weight_sign(T)
        w2, s2 = lc_weight_sign(U)
        if psi(U) != T:
            out.append(f"psi not an involution at {T}")
        if w != w2:
            out.append(f"psi changes weight at {T}")
        if U == T:
            fixed[w] += 1
        elif s2 != -s:
            out.append(f"psi keeps sign off the fixed points at {T}")
        signed[w] += s
        if len(out) > 3:
            return out
    direct = Counter(lc_weight_sign(T)[0] for T in fixed_points(lam, eta, gamma))
    D = xi_expand_t1("e", lam, gamma).get(eta, QPoly())
    for k in range(wmax + 1):
        if not signed[k] == fixed[k] == direct[k] == D[k]:
            out.append(f"type {lam},{eta},{gamma} degree {k}: signed {signed[k]}, fixed {fixed[k]}, "
                       f"generated {direct[k]}, coefficient {D[k]}")
    return out


def job_phi(args) -> list[str]:
    lam, eta, gamma = args
    out, seen = [], set()
    for T in fixed_points(lam, eta, gamma):
        p = phi(T)
        if phi_inverse(p) != T:
            out.append(f"phi_inverse(phi(T)) != T for {T}")
        if p.area() != lc_weight_sign(T)[0]:
            out.append(f"area != weight for {T}")
        if to_partition(north_runs(p.P)) != tuple(eta):
            out.append(f"phi changes eta for {T}")
        seen.add(p)
    target = [p for p in ascent_polyominoes(lam, gamma) if to_partition(north_runs(p.P)) == tuple(eta)]
    if len(seen) != len(target) or not seen <= set(target):
        out.append(f"type {lam},{eta},{gamma}: {len(seen)} images vs {len(target)} polyominoes")
    return out


def job_iota(args) -> list[str]:
    lam, gamma = args
    out, seen = [], set()
    for p in enumerate_pf(gamma, lam):
        r = iota(p)
        if iota_inverse(r) != p:
            out.append(f"iota round trip fails at {p}")
        if r.area() != p.area():
            out.append(f"iota changes area at {p}")
        if north_runs(r.P) != e_composition(p):
            out.append(f"iota changes eta at {p}")
        seen.add(r)
    target = set(ascent_polyominoes(lam, gamma))
    if seen != target:
        out.append(f"lambda={lam} gamma={gamma}: {len(seen)} images vs {len(target)} polyominoes")
    return out


def job_bijection(args) -> list[str]:
    return (job_phi if args[0] == "phi" else job_iota)(args[1:])


def job_specialization(mu) -> list[str]:
    n = sum(mu)
    out = []
    m = basis_convert(macdonald_t1(mu), "m")
    for lam in partitions(n):
        if QRat(m.coeffs.get(lam, 0)) != QRat(pair_h_t1(mu, lam)):
            out.append(f"macdonald_t1{mu} m_{lam} differs from the word sum")
        for route in ("syt", "lw"):
            if pair_s_t1(mu, lam, route)(1) != hook_length_count(lam):
                out.append(f"pair_s_t1({mu},{lam},{route}) at q=1 != f^lambda")
    if n <= 5:
        H = ht_full(mu)
        for lam, c in H.coeffs.items():
            if qt_at_t1(c) != QRat(m.coeffs.get(lam, 0)):
                out.append(f"ht_full{mu} at t=1 differs at m_{lam}")
    return out


FORGOTTEN_DEGREE = 12


def job_forgotten(mu) -> list[str]:
    n = sum(mu)
    sign = -1 if (n - len(mu)) % 2 else 1
    series = [sign * x for x in forgotten_principal(mu).series(FORGOTTEN_DEGREE)]
    all_c = Counter(C.size for C in cct_enumerate(mu, FORGOTTEN_DEGREE))
    zero_c = Counter(C.size for C in cct_enumerate(mu, FORGOTTEN_DEGREE, first_zero=True))
    bc = [all_c[k] for k in range(FORGOTTEN_DEGREE + 1)]
    bbar = [zero_c[k] for k in range(FORGOTTEN_DEGREE + 1)]
    out = []
    if series != bc:
        out.append(f"forgotten_principal{mu} series {series} vs CCT count {bc}")
    shifted = (QPoly(bc) * one_minus_q_pow(n)).c[: FORGOTTEN_DEGREE + 1]
    shifted = list(shifted) + [0] * (FORGOTTEN_DEGREE + 1 - len(shifted))
    if shifted != bbar:
        out.append(f"(1-q^{n}) bC{mu} != first-column-zero count")
    return out


def job_extended_delta(args) -> list[str]:
    n, k, m = args
    r = check_extended_delta(n, k, m)
    bad = [key for key in ("injective", "into_targets", "stats_preserved", "gf_equal") if not r[key]]
    return [f"n={n} k={k} m={m}: {', '.join(bad)}"] if bad else []


def job_twocar(args) -> list[str]:
    n, m = args
    content = (n, m) if m else (n,)
    a = area_gf(enumerate_pf((), content))
    b = area_gf(polyominoes(m + 1, n + 1))
    return [] if a == b else [f"n={n} m={m}: {a} vs {b}"]


def job_looks_right(args) -> list[str]:
    lam, gamma = args
    a = combinatorial_expansion("e", lam, gamma, ASC)
    b = combinatorial_expansion("e", lam, gamma, DES)
    d = a.diff(b)
    return [] if not d else [f"lambda={lam} gamma={gamma}: asc {d[0][1]} vs des {d[0][2]} at {d[0][0]}"]


def job_conjecture(args) -> list[str]:
    lam, gamma = args
    out = []
    at_t1 = xi_full_at_t1(lam, gamma)
    if at_t1 != xi_expand_t1("e", lam, gamma):
        out.append(f"xi_full{lam},{gamma} at t=1 disagrees with the t=1 expansion")
    if at_t1 != combinatorial_expansion("e", lam, gamma):
        out.append(f"xi_full{lam},{gamma} at t=1 disagrees with the parking-function sum")
    rep = epositivity_check(lam, gamma)
    for eta, a, b, c in rep.negatives():
        out.append(f"COUNTEREXAMPLE lambda={lam} gamma={gamma} eta={eta}: u^{a} t^{b} coefficient {c}")
    return out


# --------------------------------------------------------------------------
# suites
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Suite:
    name: str
    n_max: int
    m_max: int
    job: Callable
    jobs: Callable  # (n_max, m_max, weight_max) -> list


def _pairs(n_max, m_max):
    return [(lam, g) for lam in _parts_upto(n_max) for m in range(m_max + 1) for g in partitions(m)]


def _triples(n_max, m_max):
    return [(lam, eta, g) for n in range(1, n_max + 1) for lam in partitions(n) for eta in partitions(n)
            for m in range(m_max + 1) for g in partitions(m)]


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("theorem1", 5, 3, job_theorem, lambda n, m, w: [("e",) + p for p in _pairs(n, m)]),
    Suite("theorem2", 4, 2, job_theorem, lambda n, m, w: [("s",) + p for p in _pairs(n, m)]),
    Suite("xi_en", 7, 0, job_xi_en, lambda n, m, w: list(range(1, n + 1))),
    Suite("involution", 3, 2, job_involution, lambda n, m, w: [t + (w,) for t in _triples(n, m)]),
    Suite("bijection", 4, 2, job_bijection,
          lambda n, m, w: [("phi",) + t for t in _triples(n, m)] + [("iota",) + p for p in _pairs(n, m)]),
    Suite("specialization", 6, 0, job_specialization, lambda n, m, w: list(_parts_upto(n))),
    Suite("forgotten", 5, 0, job_forgotten, lambda n, m, w: list(_parts_upto(n))),
    Suite("extended_delta", 5, 2, job_extended_delta,
          lambda n, m, w: [(a, k, b) for a in range(1, n + 1) for b in range(m + 1) for k in range(a + 1)]),
    Suite("twocar", 7, 7, job_twocar,
          lambda n, m, w: [(a, b) for a in range(n + 1) for b in range(m + 1) if 1 <= a + b <= n]),
    Suite("looks_right", 4, 2, job_looks_right, lambda n, m, w: _pairs(n, m)),
    Suite("conjecture", 4, 2, job_conjecture, lambda n, m, w: _pairs(n, m)),
]}

DEFAULT_WEIGHT_MAX = 6


def run_suite(name: str, n_max: int | None = None, m_max: int | None = None,
              weight_max: int | None = None, threads: int = 1) -> SuiteResult:
    suite = SUITES[name]
    n = suite.n_max if n_max is None else n_max
    m = suite.m_max if m_max is None else m_max
    w = DEFAULT_WEIGHT_MAX if weight_max is None else weight_max
    jobs = suite.jobs(n, m, w)
    t0 = time.perf_counter()
    results = run_jobs(suite.job, jobs, threads)
    fails = [msg for r in results for msg in r]
    return SuiteResult(name, len(jobs), fails, time.perf_counter() - t0)


def run_suites(names: Iterable[str] | None = None, **kw) -> list[SuiteResult]:
    return [run_suite(nm, **kw) for nm in (names or SUITES)]
