from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from theta_park.combinatorics import partitions
from theta_park.qalgebra import QPoly, forgotten_principal, one_minus_q_pow
from theta_park.structures import (
    ASC,
    CCT,
    DES,
    CannotJoin,
    CannotSplit,
    LabeledCCT,
    LatticePathPair,
    NotAFixedPoint,
    area_gf,
    ascent_polyominoes,
    can_join,
    cct_enumerate,
    combinatorial_expansion,
    e_composition,
    e_composition_area,
    enumerate_pf,
    fixed_points,
    iota,
    iota_inverse,
    is_fixed_point,
    join,
    lc_enumerate,
    lc_type,
    lc_weight_sign,
    phi,
    phi_inverse,
    psi,
    split,
)
from theta_park.structures.paths import gamma_of_dyck, north_runs, polyomino_gamma, polyominoes
from theta_park.symfun import xi_expand_t1

# the worked sequence of three labeled tableaux
WORKED = (
    LabeledCCT(CCT((1, 2), (0, 1, 1)), (2, 1, 2), (0, 2, 0)),
    LabeledCCT(CCT((1,), (1,)), (4,), (1,)),
    LabeledCCT(CCT((1, 3, 1), (1, 2, 2, 2, 2)), (3, 4, 1, 3, 1), (2, 0, 4, 3, 0)),
)

# a bar-free fixed point with blocks (3), (1), (4), (1)
FIXED = (
    LabeledCCT(CCT((3,), (0, 0, 0)), (2, 4, 3), (0, 2, 0)),
    LabeledCCT(CCT((1,), (2,)), (1,), (2,)),
    LabeledCCT(CCT((4,), (0,) * 4), (3, 1, 1, 2), (2, 1, 1, 0)),
    LabeledCCT(CCT((1,), (2,)), (2,), (3,)),
)

SPLITTABLE = LabeledCCT(CCT((3, 1, 1), (1, 1, 1, 1, 2)), (7, 4, 7, 7, 5), (0, 0, 2, 0, 3))

PF_SIZE8 = LatticePathPair("NNNENEENNEENENEEE", "EENENENENENENENEN", (2, 4, 7, 5, 1, 3, 8, 6))
ECOMP = LatticePathPair("NNNENEENNEENE" + "E" * 7, "EEENENEEENEENENEENEN", (1, 4, 5, 3, 1, 2, 5))


# column-composition tableaux

def test_cct_single_column():
    assert sorted(C.c for C in cct_enumerate((1,), 3)) == [(0,), (1,), (2,), (3,)]


def test_cct_rejects_step_inside_block():
    with pytest.raises(ValueError):
        CCT((2,), (0, 1))
    with pytest.raises(ValueError):
        CCT((1, 1), (2, 1))


@pytest.mark.parametrize("mu", [p for n in range(1, 5) for p in partitions(n)])
def test_cct_generating_function(mu):
    N = 10
    n = sum(mu)
    sign = -1 if (n - len(mu)) % 2 else 1
    counts = Counter(C.size for C in cct_enumerate(mu, N))
    assert [counts[k] for k in range(N + 1)] == [sign * x for x in forgotten_principal(mu).series(N)]
    zero = Counter(C.size for C in cct_enumerate(mu, N, first_zero=True))
    shifted = QPoly([counts[k] for k in range(N + 1)]) * one_minus_q_pow(n)
    assert [zero[k] for k in range(N + 1)] == [shifted[k] for k in range(N + 1)]


# weight, sign, split and join

def test_worked_weight_and_sign():
    assert lc_weight_sign(WORKED) == (40, -1)
    assert [item.weight() for item in WORKED] == [5, 1, 34]
    assert lc_type(WORKED) == ((3, 2, 2, 2), (3, 2, 1, 1, 1, 1), (4, 3, 2, 2, 1))
    assert lc_weight_sign(()) == (0, 1)


def test_worked_split():
    head, tail = split(SPLITTABLE)
    assert head == LabeledCCT(CCT((3,), (1, 1, 1)), (7, 4, 7), (0, 0, 2))
    # the tail gains 3 cells per column
    assert tail.C.c == (4, 5)
    assert join(head, tail) == SPLITTABLE
    assert head.weight() + tail.weight() == SPLITTABLE.weight()


def test_single_block_cannot_split():
    with pytest.raises(CannotSplit):
        split(FIXED[0])


def test_join_requires_room():
    a, b = FIXED[0], FIXED[1]
    assert not can_join(a, b)
    with pytest.raises(CannotJoin):
        join(a, b)


labeled_cct = st.builds(
    lambda alpha, hs, w, l: LabeledCCT(CCT.from_blocks(alpha, sorted(hs[: len(alpha)])),
                                       w[: sum(alpha)], l[: sum(alpha)]),
    st.lists(st.integers(1, 2), min_size=2, max_size=3),
    st.lists(st.integers(0, 3), min_size=3, max_size=3),
    st.lists(st.integers(1, 3), min_size=6, max_size=6),
    st.lists(st.integers(0, 3), min_size=6, max_size=6),
)


@settings(max_examples=200)
@given(labeled_cct)
def test_join_split_round_trip(S):
    head, tail = split(S)
    assert can_join(head, tail)
    assert join(head, tail) == S
    assert head.weight() + tail.weight() == S.weight()
    assert head.sign() * tail.sign() == -S.sign()


# the involution

def test_psi_fixes_bar_free_sequence():
    assert is_fixed_point(FIXED)
    assert psi(FIXED) == FIXED
    assert psi(()) == ()


def test_psi_on_worked_sequence():
    U = psi(WORKED)
    assert U != WORKED
    assert psi(U) == WORKED
    assert lc_weight_sign(U) == (40, 1)


@pytest.mark.parametrize("lam, eta, gamma", [((2,), (2,), (1,)), ((1, 1), (2,), (2,)), ((2, 1), (1, 1, 1), (1,)),
                                             ((3,), (2, 1), ())])
def test_psi_slice(lam, eta, gamma):
    signed, fixed = Counter(), Counter()
    for T in lc_enumerate(lam, eta, gamma, 6):
        U = psi(T)
        assert psi(U) == T
        w, s = lc_weight_sign(T)
        assert lc_weight_sign(U)[0] == w
        if U == T:
            fixed[w] += 1
        else:
            assert lc_weight_sign(U)[1] == -s
        signed[w] += s
    D = xi_expand_t1("e", lam, gamma).get(eta, QPoly())
    assert all(signed[k] == fixed[k] == D[k] for k in range(7))


def test_fixed_points_empty_when_gamma_too_long():
    assert list(fixed_points((1,), (1,), (1, 1))) == []


# phi

def test_phi_worked():
    p = phi(FIXED)
    assert p.P == "NNN" + "E" + "N" + "E" * 5 + "NNNN" + "EEE" + "N" + "E" * 5 + "E"
    assert [len(r) for r in p.P.split("N") if r] == [1, 5, 3, 6]
    assert p.area() == lc_weight_sign(FIXED)[0]
    assert phi_inverse(p) == FIXED
    assert polyomino_gamma(p) == (3, 2, 2, 2, 1, 1)


def test_phi_rejects_non_fixed_points():
    with pytest.raises(NotAFixedPoint):
        phi(WORKED)


@pytest.mark.parametrize("lam", [p for n in range(1, 4) for p in partitions(n)])
def test_phi_bijection(lam):
    n = sum(lam)
    for m in range(3):
        for g in partitions(m):
            images = set()
            for eta in partitions(n):
                for T in fixed_points(lam, eta, g):
                    p = phi(T)
                    assert phi_inverse(p) == T
                    assert p.area() == lc_weight_sign(T)[0]
                    images.add(p)
            assert images == set(ascent_polyominoes(lam, g))


# path pairs

def test_polyomino_area_20():
    p = LatticePathPair("NNNEENNEEEEENNEEEEEENEE", "EEEENNENEEEENEENNEEENEN")
    assert p.is_polyomino()
    assert p.area() == 20


def test_single_column_path():
    p = LatticePathPair("NNNE", "ENNN", (1, 2, 3))
    assert e_composition_area(p) == ((3,), 0)


def test_ecomp_prunes_three_steps():
    assert gamma_of_dyck(ECOMP) == (2, 1, 1, 1)
    eta, area = e_composition_area(ECOMP)
    assert eta == (4, 2, 1)
    assert area == ECOMP.area()


def test_pf_size8():
    assert PF_SIZE8.area() == 10
    r = iota(PF_SIZE8)
    assert r == LatticePathPair("NNNNENNEENNEE", "EENENNNENENNN", PF_SIZE8.w)
    assert r.area() == 10
    assert iota_inverse(r) == PF_SIZE8
    assert north_runs(r.P) == e_composition(PF_SIZE8)


def test_increasing_word_loses_only_the_top_step():
    # every position below the top is an ascent; the top one never is
    for p in enumerate_pf((), (1, 1, 1)):
        if p.w != (1, 2, 3):
            continue
        r = iota(p)
        assert r.width == p.width - 1
        assert r.p_rows[:-2] == p.p_rows[:-2]
        assert r.q_rows[:-2] == p.q_rows[:-2]


def test_worked_pf_family():
    pfs = list(enumerate_pf((2,), (1, 1)))
    assert len(pfs) == 10
    got = combinatorial_expansion("e", (1, 1), (2,))
    assert got == xi_expand_t1("e", (1, 1), (2,))


@pytest.mark.parametrize("n", range(1, 6))
def test_classical_parking_count(n):
    assert len(list(enumerate_pf((), (1,) * n))) == (n + 1) ** (n - 1)


def test_json_round_trip():
    d = PF_SIZE8.to_json()
    assert d["area"] == 10 and d["eta"] == list(e_composition(PF_SIZE8))
    assert LatticePathPair.from_json(d) == PF_SIZE8
    with pytest.raises(ValueError):
        LatticePathPair.from_json({"P": "NE"})


@pytest.mark.parametrize("lam", [p for n in range(1, 5) for p in partitions(n)])
def test_iota_on_families(lam):
    for m in range(3):
        for g in partitions(m):
            images = set()
            for p in enumerate_pf(g, lam):
                r = iota(p)
                assert iota_inverse(r) == p
                assert r.area() == p.area()
                assert north_runs(r.P) == e_composition(p)
                images.add(r)
            assert images == set(ascent_polyominoes(lam, g))


@pytest.mark.parametrize("lam", [p for n in range(1, 5) for p in partitions(n)])
def test_asc_and_des_labelings_agree(lam):
    for m in range(3):
        for g in partitions(m):
            assert combinatorial_expansion("e", lam, g, ASC) == combinatorial_expansion("e", lam, g, DES)


@pytest.mark.parametrize("n, m", [(a, b) for a in range(6) for b in range(6) if 1 <= a + b <= 6])
def test_two_car(n, m):
    content = (n, m) if m else (n,)
    assert area_gf(enumerate_pf((), content)) == area_gf(polyominoes(m + 1, n + 1))
