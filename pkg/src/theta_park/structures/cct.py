"""Column-composition tableaux, labeled sequences of them, the split/join
moves, the sign-reversing involution psi, its fixed points, and the map phi
from fixed points to labeled polyominoes.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from ..combinatorics import (
    Composition,
    Partition,
    Word,
    compositions,
    enumerate_vectors,
    multiplicities,
    rearrangements,
    split_word,
    to_partition,
)
from .paths import ASC, LatticePathPair, SubsetPicker, north_runs, rows_to_steps


class CannotSplit(ValueError):
    pass


class CannotJoin(ValueError):
    pass


@dataclass(frozen=True)
class CCT:
    """Composition alpha of the base row and column heights c.

    Heights are constant inside a block of alpha and weakly increase across blocks.
    """

    alpha: Composition
    c: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "c", tuple(self.c))
        if sum(self.alpha) != len(self.c) or any(a <= 0 for a in self.alpha):
            raise ValueError(f"bad CCT shape {self.alpha} / {self.c}")
        bars = set(self.bar_positions())
        for i in range(1, len(self.c)):
            lo, hi = self.c[i - 1], self.c[i]
            if hi < lo or (hi > lo and i not in bars):
                raise ValueError(f"heights {self.c} do not fit blocks {self.alpha}")
        if self.c and self.c[0] < 0:
            raise ValueError("negative height")

    def bar_positions(self) -> list[int]:
        out, s = [], 0
        for a in self.alpha[:-1]:
            s += a
            out.append(s)
        return out

    @property
    def size(self) -> int:
        return sum(self.c)

    def __len__(self):
        return len(self.c)

    @property
    def type(self) -> Partition:
        return to_partition(self.alpha)

    @classmethod
    def from_blocks(cls, alpha: Sequence[int], heights: Sequence[int]) -> "CCT":
        return cls(tuple(alpha), tuple(h for a, h in zip(alpha, heights) for _ in range(a)))


def cct_enumerate(mu: Partition, max_size: int, first_zero: bool = False) -> Iterator[CCT]:
    """Every CCT of type mu with size <= max_size (with c_1 = 0 if first_zero)."""
    for alpha in rearrangements(mu):
        for heights in _block_heights(alpha, max_size, 0, first_zero):
            yield CCT.from_blocks(alpha, heights)


def _block_heights(alpha, budget, low, first_zero):
    if not alpha:
        yield ()
        return
    a, rest = alpha[0], alpha[1:]
    h = low
    # every later column is at least h tall
    while h * sum(alpha) <= budget and (h == 0 or not first_zero):
        for tail in _block_heights(rest, budget - a * h, h, False):
            yield (h,) + tail
        h += 1


@dataclass(frozen=True)
class LabeledCCT:
    C: CCT
    w: Word
    l: Word

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(self.w))
        object.__setattr__(self, "l", tuple(self.l))
        if not (len(self.w) == len(self.l) == len(self.C)):
            raise ValueError("word, labels and base row differ in length")

    def __len__(self):
        return len(self.C)

    @property
    def c_first(self) -> int:
        return self.C.c[0]

    @property
    def c_last(self) -> int:
        return self.C.c[-1]

    def weight(self, picker: SubsetPicker = ASC) -> int:
        n = len(self.w)
        return self.C.size + picker.rho(self.w) + sum(x * (n - j) for j, x in enumerate(self.l, start=1))

    def sign(self) -> int:
        return -1 if (len(self.C.alpha) - 1) % 2 else 1

    def can_split(self) -> bool:
        return len(self.C.alpha) > 1


LCSeq = tuple[LabeledCCT, ...]


def lc_weight_sign(T: Sequence[LabeledCCT], picker: SubsetPicker = ASC) -> tuple[int, int]:
    weight, sign = 0, 1
    for item in T:
        weight += item.weight(picker)
        sign *= item.sign()
    return weight, sign


def lc_type(T: Sequence[LabeledCCT]) -> tuple[Partition, Partition, Partition]:
    """(lambda, eta, gamma) read off a sequence."""
    letters = [x for item in T for x in item.w]
    lam = multiplicities(letters)
    eta = to_partition(a for item in T for a in item.C.alpha)
    gamma = to_partition(x for item in T for x in item.l)
    return lam, eta, gamma


def _cross(S1: LabeledCCT, S2: LabeledCCT, picker: SubsetPicker) -> int:
    return picker.count(S1.w + S2.w[:1])


def split(S: LabeledCCT, picker: SubsetPicker = ASC) -> tuple[LabeledCCT, LabeledCCT]:
    if not S.can_split():
        raise CannotSplit("no vertical bar to split at")
    a1 = S.C.alpha[0]
    d = picker.count(S.w[: a1 + 1])
    lift = d + sum(S.l[:a1])
    head = LabeledCCT(CCT((a1,), S.C.c[:a1]), S.w[:a1], S.l[:a1])
    tail = LabeledCCT(CCT(S.C.alpha[1:], tuple(x + lift for x in S.C.c[a1:])), S.w[a1:], S.l[a1:])
    return head, tail


def can_join(S1: LabeledCCT, S2: LabeledCCT, picker: SubsetPicker = ASC) -> bool:
    if S1.can_split():
        return False
    return S2.c_first >= S1.c_last + _cross(S1, S2, picker) + sum(S1.l)


def join(S1: LabeledCCT, S2: LabeledCCT, picker: SubsetPicker = ASC) -> LabeledCCT:
    if not can_join(S1, S2, picker):
        raise CannotJoin("join inequality fails")
    drop = _cross(S1, S2, picker) + sum(S1.l)
    C = CCT(S1.C.alpha + S2.C.alpha, S1.C.c + tuple(x - drop for x in S2.C.c))
    return LabeledCCT(C, S1.w + S2.w, S1.l + S2.l)


def psi(T: Sequence[LabeledCCT], picker: SubsetPicker = ASC) -> LCSeq:
    T = tuple(T)
    for i in range(len(T)):
        if T[i].can_split():
            return T[:i] + split(T[i], picker) + T[i + 1:]
        if i + 1 < len(T) and can_join(T[i], T[i + 1], picker):
            return T[:i] + (join(T[i], T[i + 1], picker),) + T[i + 2:]
    return T


def is_fixed_point(T: Sequence[LabeledCCT], picker: SubsetPicker = ASC) -> bool:
    return psi(T, picker) == tuple(T)


# --------------------------------------------------------------------------
# enumeration
# --------------------------------------------------------------------------

def _word_vectors(lam, beta, words):
    mode = "LW" if words == "lattice" else "WV"
    return enumerate_vectors(mode, lam, beta)


def lc_enumerate(lam: Partition, eta: Partition, gamma: Partition, max_weight: int,
                 picker: SubsetPicker = ASC, words: str = "content") -> Iterator[LCSeq]:
    """Every sequence of type (lam, eta, gamma) with weight <= max_weight."""
    n = sum(eta)
    for beta in compositions(n):
        if len(beta) > len(eta):
            continue
        nus = list(enumerate_vectors("PR", eta, beta))
        if not nus:
            continue
        labelled = []
        for wv in _word_vectors(lam, beta, words):
            for lv in enumerate_vectors("WV", multiplicities(gamma), beta):
                base = sum(picker.rho(wi) + sum(x * (len(li) - j) for j, x in enumerate(li, 1))
                           for wi, li in zip(wv, lv))
                if base <= max_weight:
                    labelled.append((base, wv, lv))
        if not labelled:
            continue
        budget = max_weight - min(b for b, _, _ in labelled)
        for nu in nus:
            per_block = [
                list(cct_enumerate(part, budget, first_zero=(i == 0)))
                for i, part in enumerate(nu)
            ]
            for cs in product(*per_block):
                size = sum(C.size for C in cs)
                if size > budget:
                    continue
                for base, wv, lv in labelled:
                    if base + size <= max_weight:
                        yield tuple(LabeledCCT(C, wi, li) for C, wi, li in zip(cs, wv, lv))


def fixed_points(lam: Partition, eta: Partition, gamma: Partition,
                 picker: SubsetPicker = ASC, words: str = "content") -> Iterator[LCSeq]:
    """The fixed points of psi of the given type, generated directly."""
    gamma = tuple(gamma)
    n = sum(eta)
    if len(gamma) > n:
        return
    for beta in rearrangements(eta):
        for wv in _word_vectors(lam, beta, words):
            for lv in enumerate_vectors("WV", multiplicities(gamma), beta):
                yield from _chain(beta, wv, lv, picker)


def _chain(beta, wv, lv, picker):
    r = len(beta)
    heights = [0]

    def rec(i):
        if i == r:
            yield tuple(
                LabeledCCT(CCT((beta[j],), (heights[j],) * beta[j]), wv[j], lv[j]) for j in range(r)
            )
            return
        # c^{i+1} < c^i + |S(w^i w^{i+1}_1)| + |l^i|
        top = heights[-1] + picker.count(wv[i - 1] + wv[i][:1]) + sum(lv[i - 1])
        for c in range(top):
            heights.append(c)
            yield from rec(i + 1)
            heights.pop()

    yield from rec(1)


# --------------------------------------------------------------------------
# phi
# --------------------------------------------------------------------------

class NotAFixedPoint(ValueError):
    pass


def phi(T: Sequence[LabeledCCT], picker: SubsetPicker = ASC) -> LatticePathPair:
    T = tuple(T)
    if not T or any(item.can_split() for item in T) or T[0].c_first != 0:
        raise NotAFixedPoint("phi needs a bar-free sequence starting at height 0")
    w = tuple(x for item in T for x in item.w)
    l = tuple(x for item in T for x in item.l)
    S = picker(w)
    q_rows = [l[i - 1] + (i in S) for i in range(1, len(w) + 1)]
    q_rows[0] += 1
    Q = rows_to_steps(q_rows + [0])
    parts = []
    for i, item in enumerate(T):
        nxt = T[i + 1] if i + 1 < len(T) else None
        s = item.c_last + picker.count(item.w + (nxt.w[:1] if nxt else ())) + sum(item.l)
        s -= nxt.c_first if nxt else 0
        if nxt is not None and s <= 0:
            raise NotAFixedPoint(f"item {i + 1} can join the next one")
        parts.append("N" * len(item) + "E" * s)
    return LatticePathPair("".join(parts) + "E", Q, w)


def phi_inverse(p: LatticePathPair, picker: SubsetPicker = ASC) -> LCSeq:
    if p.w is None:
        raise ValueError("phi_inverse needs labels")
    w = p.w
    S = picker(w)
    q_rows = p.q_rows
    l = [q_rows[i - 1] - (i == 1) - (i in S) for i in range(1, len(w) + 1)]
    if min(l) < 0:
        raise ValueError("not a labeled polyomino for this picker")
    beta = north_runs(p.P)
    # E-runs after each North run; the final run carries the closing E
    e_runs = [len(r) for r in p.P.split("N") if r][-len(beta):] if p.P.endswith("E") else []
    if p.P.startswith("E") or len(e_runs) != len(beta):
        raise ValueError("top path must start North and end East")
    e_runs[-1] -= 1
    wv, lv = split_word(w, beta), split_word(l, beta)
    heights = [0]
    for i in range(len(beta) - 1):
        c = heights[-1] + picker.count(wv[i] + wv[i + 1][:1]) + sum(lv[i]) - e_runs[i]
        heights.append(c)
    last = heights[-1] + picker.count(wv[-1]) + sum(lv[-1])
    if min(heights) < 0 or last != e_runs[-1]:
        raise ValueError("path is not in the image of phi")
    return tuple(LabeledCCT(CCT((b,), (h,) * b), wi, li) for b, h, wi, li in zip(beta, heights, wv, lv))
