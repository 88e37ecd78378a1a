from itertools import product
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from theta_park.combinatorics import (
    arm,
    arrangement_count,
    coarm,
    coleg,
    comaj_block,
    compositions,
    conjugate,
    enumerate_vectors,
    hook_length_count,
    is_lattice_word,
    is_standard,
    lattice_word_syt,
    lattice_words,
    leg,
    multinomial,
    multiplicity_type,
    partitions,
    rearrangements,
    revmaj,
    standard_tableaux,
    syt_lattice_word,
    word_stats,
)

words = st.lists(st.integers(0, 5), max_size=9)


def small_words(max_len=6, alphabet=4):
    for n in range(max_len + 1):
        yield from product(range(1, alphabet + 1), repeat=n)


# word statistics

@pytest.mark.parametrize("w, want", [((2, 1, 2), 1), ((3, 4, 1, 3, 1), 6)])
def test_revmaj_worked_values(w, want):
    assert word_stats(w).revmaj == want


@pytest.mark.parametrize("w", [(), (5,)])
def test_stats_vanish_without_adjacent_pairs(w):
    s = word_stats(w)
    assert (s.maj, s.comaj, s.revmaj, s.revcomaj) == (0, 0, 0, 0)


def test_reverse_statistics_brute_force():
    for w in small_words():
        s, r = word_stats(w), word_stats(w[::-1])
        assert s.revmaj == r.maj
        assert s.revcomaj == r.comaj


@given(words)
def test_maj_plus_comaj(w):
    s = word_stats(w)
    assert s.maj + s.comaj == len(s.des_set) * len(w)
    assert s.asc_set.isdisjoint(s.des_set)
    strict = {i for i in range(1, len(w)) if w[i - 1] != w[i]}
    assert s.asc_set | s.des_set == strict
    assert revmaj(w) == s.revmaj


def test_multiplicity_type():
    w = (2, 4, 3, 1, 3, 1, 1, 2, 2)
    assert multiplicity_type(w)[1:] == (3, 3, 2, 1)
    assert multiplicity_type(()) == ()


@given(words)
def test_multiplicities_sum_to_length(w):
    assert sum(multiplicity_type(w)) == len(w)


# partitions, rearrangements

def test_partition_counts():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(compositions(5)) == 16


def test_rearrangements():
    assert list(rearrangements((4,))) == [(4,)]
    assert sorted(rearrangements((2, 1))) == [(1, 2), (2, 1)]
    mu = (3, 2, 2, 2, 1, 1, 1)
    got = list(rearrangements(mu))
    assert len(got) == len(set(got)) == 140 == factorial(7) // (factorial(3) * factorial(3))


@pytest.mark.parametrize("mu", [p for n in range(1, 8) for p in partitions(n)])
def test_rearrangement_count_is_multinomial(mu):
    assert len(set(rearrangements(mu))) == arrangement_count(mu)


def test_cell_statistics():
    # cell (column 3, row 2) of (4,4,3)
    assert (arm((4, 4, 3), 3, 2), leg((4, 4, 3), 3, 2)) == (1, 1)
    assert (coarm((4, 4, 3), 3, 2), coleg((4, 4, 3), 3, 2)) == (2, 1)


@given(st.integers(1, 9).flatmap(lambda n: st.sampled_from(partitions(n))))
def test_conjugate_is_an_involution(p):
    assert conjugate(conjugate(p)) == p
    assert sum(conjugate(p)) == sum(p)


# word vectors

def test_wv_single_part():
    for n in range(1, 6):
        assert list(enumerate_vectors("WV", (n,), (n,))) == [((1,) * n,)]


def test_pr_contains_worked_vector():
    # the parts of this vector rearrange to (3,2,1,1,1,1), not (4,3,1,1)
    v = ((2, 1), (1,), (3, 1, 1))
    assert v in set(enumerate_vectors("PR", (3, 2, 1, 1, 1, 1), (3, 1, 5)))
    assert v not in set(enumerate_vectors("PR", (4, 3, 1, 1), (3, 1, 5)))


@pytest.mark.parametrize("alpha, beta", [((2, 1), (2, 1)), ((1, 1), (3,)), ((2,), (1, 2, 1)), ((3, 1), (2, 2))])
def test_wv_count(alpha, beta):
    got = list(enumerate_vectors("WV", alpha, beta))
    zeros = sum(beta) - sum(alpha)
    assert len(got) == len(set(got)) == multinomial(list(alpha) + [zeros])


def test_pr_cr_members():
    for v in enumerate_vectors("CR", (2, 1, 1), (2, 2)):
        assert [sum(x) for x in v] == [2, 2]
        assert sorted(p for x in v for p in x) == [1, 1, 2]
    assert all(all(list(x) == sorted(x, reverse=True) for x in v)
               for v in enumerate_vectors("PR", (2, 1, 1), (2, 2)))


def test_unsatisfiable_is_empty():
    assert list(enumerate_vectors("WV", (3,), (1, 1))) == []
    assert list(enumerate_vectors("LW", (2,), (3,))) == []


def test_lw_concatenates_to_lattice_words():
    for v in enumerate_vectors("LW", (2, 1), (1, 2)):
        assert is_lattice_word(sum(v, ()))


# tableaux

def test_lattice_word_shape_432():
    T = lattice_word_syt((1, 1, 2, 1, 3, 2, 1, 3, 2))
    assert tuple(map(len, T)) == (4, 3, 2)
    assert T == ((1, 2, 4, 7), (3, 6, 9), (5, 8))
    assert lattice_word_syt((1,)) == ((1,),)


def test_non_lattice_word_rejected():
    with pytest.raises(ValueError):
        lattice_word_syt((2, 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_lattice_word_round_trip(n):
    for lam in partitions(n):
        ws = list(lattice_words(lam))
        assert len(ws) == hook_length_count(lam)
        for w in ws:
            T = lattice_word_syt(w)
            assert is_standard(T)
            assert syt_lattice_word(T) == w
            assert lattice_word_syt(syt_lattice_word(T)) == T


@pytest.mark.parametrize("n", range(1, 7))
def test_comaj_block_is_revmaj_of_vector(n):
    for lam in partitions(n):
        for T in standard_tableaux(lam):
            w = syt_lattice_word(T)
            assert comaj_block(T, (1,) * n) == 0
            for beta in compositions(n):
                pieces, pos = [], 0
                for b in beta:
                    pieces.append(w[pos:pos + b])
                    pos += b
                assert comaj_block(T, beta) == sum(revmaj(x) for x in pieces)


def test_comaj_block_size_mismatch():
    with pytest.raises(ValueError):
        comaj_block(((1, 2),), (3,))
