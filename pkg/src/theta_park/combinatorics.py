"""Partitions, compositions, words and the statistics built on them.

Partitions and compositions are plain tuples of ints. Words are tuples of
nonnegative ints; statistics use 1-based positions, so position ``i``
refers to the pair ``(w[i-1], w[i])``.
"""
from __future__ import annotations

from collections import Counter
from functools import cache
from math import factorial, prod
from typing import Iterable, Iterator, NamedTuple, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Word = tuple[int, ...]
WordVector = tuple[Word, ...]


# --------------------------------------------------------------------------
# partitions and compositions
# --------------------------------------------------------------------------

def partition_key(p: Sequence[int]):
    """Sort key: length first, then reverse-lex."""
    return (len(p), tuple(-x for x in p))


@cache
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in canonical order."""
    if n < 0:
        return ()
    if max_part is None:
        max_part = n

    def gen(rem, top):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, top), 0, -1):
            for rest in gen(rem - first, first):
                yield (first,) + rest

    return tuple(sorted(gen(n, max_part), key=partition_key))


@cache
def compositions(n: int) -> tuple[Composition, ...]:
    """All compositions of n (2^(n-1) of them, or the empty one for n=0)."""
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        out.extend((first,) + rest for rest in compositions(n - first))
    return tuple(out)


def is_partition(p: Sequence[int]) -> bool:
    return all(x > 0 for x in p) and all(a >= b for a, b in zip(p, p[1:]))


def to_partition(parts: Iterable[int]) -> Partition:
    """Sort a multiset of positive parts into a partition (zeros dropped)."""
    return tuple(sorted((x for x in parts if x), reverse=True))


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def multiplicities(p: Sequence[int]) -> tuple[int, ...]:
    """m(p) = (m_1, m_2, ..., m_max): how many parts equal each value."""
    if not p:
        return ()
    c = Counter(p)
    return tuple(c[i] for i in range(1, max(p) + 1))


def multinomial(counts: Iterable[int]) -> int:
    counts = list(counts)
    return factorial(sum(counts)) // prod(factorial(c) for c in counts)


def arrangement_count(p: Sequence[int]) -> int:
    """|R(p)|: number of distinct rearrangements."""
    return multinomial(Counter(p).values())


# cell statistics, French convention: cell (col, row), both 1-based from the
# bottom-left corner, row r of the diagram has p[r-1] cells.

def _check_cell(p: Partition, col: int, row: int) -> None:
    if not (1 <= row <= len(p) and 1 <= col <= p[row - 1]):
        raise ValueError(f"cell ({col},{row}) not in {p}")


def arm(p: Partition, col: int, row: int) -> int:
    _check_cell(p, col, row)
    return p[row - 1] - col


def leg(p: Partition, col: int, row: int) -> int:
    _check_cell(p, col, row)
    return conjugate(p)[col - 1] - row


def coarm(p: Partition, col: int, row: int) -> int:
    _check_cell(p, col, row)
    return col - 1


def coleg(p: Partition, col: int, row: int) -> int:
    _check_cell(p, col, row)
    return row - 1


def cells(p: Partition) -> Iterator[tuple[int, int]]:
    """Cells as (col, row), row by row from the bottom."""
    for r, length in enumerate(p, start=1):
        for c in range(1, length + 1):
            yield (c, r)


# --------------------------------------------------------------------------
# words
# --------------------------------------------------------------------------

class WordStats(NamedTuple):
    asc_set: frozenset[int]
    des_set: frozenset[int]
    maj: int
    comaj: int
    revmaj: int
    revcomaj: int


def ascents(w: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] < w[i])


def descents(w: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def revmaj(w: Sequence[int]) -> int:
    n = len(w)
    return sum(n - i for i in range(1, n) if w[i - 1] < w[i])


def asc_count(w: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(w)) if w[i - 1] < w[i])


def word_stats(w: Sequence[int]) -> WordStats:
    n = len(w)
    asc, des = ascents(w), descents(w)
    return WordStats(
        asc_set=asc,
        des_set=des,
        maj=sum(des),
        comaj=sum(n - i for i in des),
        revmaj=sum(n - i for i in asc),
        revcomaj=sum(asc),
    )


def multiplicity_type(w: Sequence[int]) -> tuple[int, ...]:
    """(m_0(w), m_1(w), ...) up to the largest letter."""
    if not w:
        return ()
    c = Counter(w)
    return tuple(c[i] for i in range(max(w) + 1))


def content(w: Sequence[int]) -> tuple[int, ...]:
    """Multiplicities of the positive letters, (m_1, m_2, ...)."""
    return multiplicity_type(w)[1:]


def multiset_permutations(items: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of a multiset, in lexicographic order."""
    a = sorted(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def rearrangements(mu: Sequence[int]) -> Iterator[Composition]:
    """R(mu): each distinct rearrangement of the parts once."""
    return multiset_permutations(mu)


def split_word(w: Sequence[int], beta: Sequence[int]) -> WordVector:
    out, pos = [], 0
    for b in beta:
        out.append(tuple(w[pos:pos + b]))
        pos += b
    return tuple(out)


def letters_of_content(alpha: Sequence[int], zeros: int = 0) -> list[int]:
    """Multiset with ``alpha[i-1]`` copies of letter i plus some zeros."""
    out = [0] * zeros
    for i, a in enumerate(alpha, start=1):
        out.extend([i] * a)
    return out


def is_lattice_word(w: Sequence[int]) -> bool:
    seen = Counter()
    for x in w:
        if x < 1 or (x > 1 and seen[x - 1] <= seen[x]):
            return False
        seen[x] += 1
    return True


def lattice_words(lam: Partition) -> Iterator[Word]:
    """Lattice words of content lam (letters 1..ℓ(lam))."""
    n = sum(lam)
    counts = [0] * len(lam)
    word: list[int] = []

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        for r in range(len(lam)):
            if counts[r] < lam[r] and (r == 0 or counts[r - 1] > counts[r]):
                counts[r] += 1
                word.append(r + 1)
                yield from rec()
                word.pop()
                counts[r] -= 1

    yield from rec()


def _vectors_from_parts(parts: Sequence[int], beta: Sequence[int], sorted_blocks: bool):
    """Vectors of compositions (or partitions) of each beta_i, using up parts."""
    pool = Counter(parts)

    def block(total, top):
        # compositions of total from pool; partitions if sorted_blocks
        if total == 0:
            yield ()
            return
        for v in sorted(pool, reverse=True):
            if pool[v] and v <= total and v <= top:
                pool[v] -= 1
                for rest in block(total - v, v if sorted_blocks else total):
                    yield (v,) + rest
                pool[v] += 1

    def rec(i):
        if i == len(beta):
            if not +pool:
                yield ()
            return
        for b in block(beta[i], beta[i]):
            for rest in rec(i + 1):
                yield (b,) + rest

    yield from rec(0)


def enumerate_vectors(mode: str, alpha: Sequence[int], beta: Sequence[int]) -> Iterator[WordVector]:
    """Members of WV, CR, PR or LW indexed by (alpha, beta).

    WV: words of lengths beta whose letters have content alpha, padded with
        zeros up to |beta| letters.
    CR: vectors of compositions w^i of beta_i whose parts rearrange alpha.
    PR: same with partitions.
    LW: WV vectors whose concatenation is a lattice word of content alpha.
    """
    beta = tuple(beta)
    n = sum(beta)
    if mode == "WV":
        zeros = n - sum(alpha)
        if zeros < 0:
            return
        for w in multiset_permutations(letters_of_content(alpha, zeros)):
            yield split_word(w, beta)
    elif mode == "LW":
        if sum(alpha) != n:
            return
        for w in lattice_words(tuple(alpha)):
            yield split_word(w, beta)
    elif mode in ("CR", "PR"):
        if sum(alpha) != n:
            return
        yield from _vectors_from_parts(alpha, beta, sorted_blocks=(mode == "PR"))
    else:
        raise ValueError(f"unknown mode {mode!r}")


# --------------------------------------------------------------------------
# standard Young tableaux
# --------------------------------------------------------------------------

SYT = tuple[tuple[int, ...], ...]


def lattice_word_syt(w: Sequence[int]) -> SYT:
    """Entry i goes in row w_i (rows counted from the bottom)."""
    if not is_lattice_word(w):
        raise ValueError(f"{tuple(w)} is not a lattice word")
    rows: list[list[int]] = []
    for i, r in enumerate(w, start=1):
        if r > len(rows):
            rows.append([])
        rows[r - 1].append(i)
    return tuple(tuple(r) for r in rows)


def syt_lattice_word(T: SYT) -> Word:
    n = sum(len(r) for r in T)
    w = [0] * n
    for r, row in enumerate(T, start=1):
        for x in row:
            w[x - 1] = r
    return tuple(w)


def is_standard(T: SYT) -> bool:
    n = sum(len(r) for r in T)
    if sorted(x for r in T for x in r) != list(range(1, n + 1)):
        return False
    if not is_partition([len(r) for r in T]):
        return False
    rows_ok = all(a < b for r in T for a, b in zip(r, r[1:]))
    cols_ok = all(T[i][j] < T[i + 1][j] for i in range(len(T) - 1) for j in range(len(T[i + 1])))
    return rows_ok and cols_ok


def standard_tableaux(shape: Partition) -> Iterator[SYT]:
    for w in lattice_words(shape):
        yield lattice_word_syt(w)


def hook_length_count(shape: Partition) -> int:
    """f^shape by the hook length formula."""
    n = sum(shape)
    hooks = prod(arm(shape, c, r) + leg(shape, c, r) + 1 for c, r in cells(shape))
    return factorial(n) // hooks


def comaj_block(T: SYT, mu: Sequence[int]) -> int:
    """Cut 1..n into consecutive blocks of sizes mu; for each j with j, j+1
    in the same block and j+1 in a higher row, add (end of block) - j."""
    n = sum(len(r) for r in T)
    if n != sum(mu):
        raise ValueError("tableau size differs from |mu|")
    row_of = syt_lattice_word(T)
    total, end = 0, 0
    for b in mu:
        start, end = end + 1, end + b
        for j in range(start, end):
            if row_of[j] > row_of[j - 1]:
                total += end - j
    return total
