"""Pairs of lattice paths: parallelogram polyominoes, gamma-Dyck paths,
their labelings, the e-composition, and the map iota.

A path from (0,0) to (width, height) is stored both as its step string and
as its East-step counts per horizontal line y = 0..height.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from ..combinatorics import (
    Partition,
    Word,
    ascents,
    conjugate,
    descents,
    is_lattice_word,
    multiset_permutations,
    to_partition,
)
from ..qalgebra import QPoly
from ..symfun import EExpansion


# --------------------------------------------------------------------------
# subset pickers
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SubsetPicker:
    """A rule S picking positions of a word; rho(w) = sum over S(w) of len(w) - i."""

    name: str
    pick: Callable[[Sequence[int]], frozenset]

    def __call__(self, w: Sequence[int]) -> frozenset:
        return self.pick(w)

    def rho(self, w: Sequence[int]) -> int:
        n = len(w)
        return sum(n - i for i in self.pick(w))

    def count(self, w: Sequence[int]) -> int:
        return len(self.pick(w))


ASC = SubsetPicker("asc", ascents)
DES = SubsetPicker("des", descents)
PICKERS = {"asc": ASC, "des": DES}


# --------------------------------------------------------------------------
# path encodings
# --------------------------------------------------------------------------

def rows_to_steps(east: Sequence[int]) -> str:
    """East counts per line y=0..n -> step string E^e0 N E^e1 N ... N E^en."""
    return "N".join("E" * e for e in east)


def steps_to_rows(steps: str) -> tuple[int, ...]:
    if set(steps) - {"N", "E"}:
        raise ValueError(f"bad step string {steps!r}")
    return tuple(len(run) for run in steps.split("N"))


def north_runs(steps: str) -> tuple[int, ...]:
    """Lengths of maximal runs of North steps, bottom to top."""
    return tuple(len(r) for r in steps.split("E") if r)


@dataclass(frozen=True)
class LatticePathPair:
    """Top path P, bottom path Q and optional labels w on the North steps of P."""

    P: str
    Q: str
    w: Word | None = None

    def __post_init__(self):
        if self.P.count("E") != self.Q.count("E") or self.P.count("N") != self.Q.count("N"):
            raise ValueError("paths end at different points")
        if self.w is not None:
            object.__setattr__(self, "w", tuple(self.w))
            if len(self.w) != self.height:
                raise ValueError("need one label per North step")

    @property
    def width(self) -> int:
        return self.P.count("E")

    @property
    def height(self) -> int:
        return self.P.count("N")

    @property
    def p_rows(self) -> tuple[int, ...]:
        return steps_to_rows(self.P)

    @property
    def q_rows(self) -> tuple[int, ...]:
        return steps_to_rows(self.Q)

    def is_polyomino(self) -> bool:
        """P strictly above Q away from the two endpoints."""
        if self.width == 0 or self.height == 0:
            return False
        return not (_points(self.P) & _points(self.Q)) - {(0, 0), (self.width, self.height)}

    def cells(self) -> int:
        xp = xq = total = 0
        for y, (a, b) in enumerate(zip(self.p_rows, self.q_rows)):
            if y == self.height:
                break
            xp += a
            xq += b
            total += xq - xp
        return total

    def area(self) -> int:
        return self.cells() - (self.width + self.height - 1)

    def to_json(self, picker: "SubsetPicker" = None) -> dict:
        d = {"P": self.P, "Q": self.Q, "w": list(self.w) if self.w is not None else None, "area": self.area()}
        if self.w is not None:
            d["eta"] = list(e_composition(self, picker or ASC))
        return d

    @classmethod
    def from_json(cls, d: dict) -> "LatticePathPair":
        try:
            P, Q = d["P"], d["Q"]
        except (KeyError, TypeError) as exc:
            raise ValueError("object JSON needs P and Q") from exc
        w = d.get("w")
        return cls(P, Q, tuple(w) if w is not None else None)


def _points(steps: str) -> set[tuple[int, int]]:
    x = y = 0
    pts = {(0, 0)}
    for s in steps:
        if s == "E":
            x += 1
        else:
            y += 1
        pts.add((x, y))
    return pts


# --------------------------------------------------------------------------
# predicates
# --------------------------------------------------------------------------

def gamma_of_dyck(p: LatticePathPair) -> Partition | None:
    """gamma if (P, Q) is a gamma-Dyck path, else None."""
    if not p.is_polyomino() or "NN" in p.Q or not p.Q.startswith("E"):
        return None
    rows = p.q_rows[:-1]
    parts = [rows[0] - 2] + [r - 1 for r in rows[1:]]
    if min(parts) < 0:
        return None
    gamma = to_partition(parts)
    if p.width != sum(gamma) + p.height + 1:
        return None
    return gamma


def labels_fit_columns(P: str, w: Sequence[int], picker: SubsetPicker = ASC) -> bool:
    """Consecutive North steps i, i+1 of P in one column need i in S(w)."""
    S = picker(w)
    i = 0
    for a, b in zip(P, P[1:]):
        if a == "N":
            i += 1
            if b == "N" and i not in S:
                return False
    return True


def is_labeled_dyck(p: LatticePathPair, picker: SubsetPicker = ASC) -> bool:
    return p.w is not None and gamma_of_dyck(p) is not None and labels_fit_columns(p.P, p.w, picker)


def polyomino_gamma(p: LatticePathPair, picker: SubsetPicker = ASC) -> Partition | None:
    """gamma for an S-labeled polyomino, None if the labeled condition fails."""
    if p.w is None or not p.is_polyomino() or not p.Q.startswith("E"):
        return None
    S = picker(p.w)
    rows = p.q_rows
    beta = [rows[i - 1] - (i == 1) - (i in S) for i in range(1, p.height + 1)]
    if min(beta) < 0:
        return None
    return to_partition(beta)


# --------------------------------------------------------------------------
# e-composition, iota
# --------------------------------------------------------------------------

def _non_picked(w: Sequence[int], picker: SubsetPicker) -> list[int]:
    S = picker(w)
    return [i for i in range(1, len(w) + 1) if i not in S]


def iota(p: LatticePathPair, picker: SubsetPicker = ASC) -> LatticePathPair:
    """Drop one East step of P on y=i and one of Q on y=i-1 for each i not in S(w)."""
    if p.w is None:
        raise ValueError("iota needs a labeled path")
    pr, qr = list(p.p_rows), list(p.q_rows)
    for i in _non_picked(p.w, picker):
        if pr[i] < 1 or qr[i - 1] < 1 + (i == 1):
            raise ValueError(f"malformed labeled path at row {i}")
        pr[i] -= 1
        qr[i - 1] -= 1
    return LatticePathPair(rows_to_steps(pr), rows_to_steps(qr), p.w)


def iota_inverse(p: LatticePathPair, picker: SubsetPicker = ASC) -> LatticePathPair:
    if p.w is None:
        raise ValueError("iota_inverse needs a labeled path")
    pr, qr = list(p.p_rows), list(p.q_rows)
    for i in _non_picked(p.w, picker):
        pr[i] += 1
        qr[i - 1] += 1
    return LatticePathPair(rows_to_steps(pr), rows_to_steps(qr), p.w)


def e_composition(p: LatticePathPair, picker: SubsetPicker = ASC) -> tuple[int, ...]:
    """North runs of P after pruning the first East step above each non-picked position."""
    pr = list(p.p_rows)
    for i in _non_picked(p.w, picker):
        pr[i] -= 1
        if pr[i] < 0:
            raise ValueError("labels do not fit the top path")
    return north_runs(rows_to_steps(pr))


def e_composition_area(p: LatticePathPair, picker: SubsetPicker = ASC) -> tuple[tuple[int, ...], int]:
    return e_composition(p, picker), p.area()


# --------------------------------------------------------------------------
# enumeration
# --------------------------------------------------------------------------

def top_paths(q_rows: Sequence[int]) -> Iterator[str]:
    """All P lying strictly above the bottom path with the given row counts."""
    n = len(q_rows) - 1
    width = sum(q_rows)
    # g[x]: height of Q's East step in column x
    g = [y for y, e in enumerate(q_rows) for _ in range(e)]
    if width == 0:
        return
    h: list[int] = []

    def rec(x: int, low: int):
        if x == width - 1:
            h.append(n)
            yield _heights_to_steps(h)
            h.pop()
            return
        for y in range(max(low, g[x + 1] + 1), n + 1):
            h.append(y)
            yield from rec(x + 1, y)
            h.pop()

    yield from rec(0, 0)


def _heights_to_steps(h: Sequence[int]) -> str:
    out, prev = [], 0
    for y in h:
        out.append("N" * (y - prev) + "E")
        prev = y
    return "".join(out)


def dyck_bottoms(gamma: Partition, n: int) -> Iterator[str]:
    """Bottom paths of gamma-Dyck paths of height n."""
    gamma = tuple(gamma)
    if len(gamma) > n:
        return
    for arr in multiset_permutations(list(gamma) + [0] * (n - len(gamma))):
        rows = [a + 1 for a in arr]
        rows[0] += 1
        yield rows_to_steps(rows + [0])


def gamma_dyck_paths(gamma: Partition, n: int) -> Iterator[LatticePathPair]:
    for Q in dyck_bottoms(gamma, n):
        for P in top_paths(steps_to_rows(Q)):
            yield LatticePathPair(P, Q)


def _letters(content: Sequence[int]) -> list[int]:
    return [i for i, a in enumerate(content, start=1) for _ in range(a)]


def _increasing_fillings(runs: Sequence[int], counts: dict[int, int]) -> Iterator[Word]:
    """Words filling the runs with strictly increasing letters, using up counts."""
    avail = sorted(counts)

    def choose(k, start, acc):
        if k == 0:
            yield tuple(acc)
            return
        for j in range(start, len(avail)):
            v = avail[j]
            if counts[v]:
                counts[v] -= 1
                acc.append(v)
                yield from choose(k - 1, j + 1, acc)
                acc.pop()
                counts[v] += 1

    def rec(r):
        if r == len(runs):
            yield ()
            return
        for block in choose(runs[r], 0, []):
            for rest in rec(r + 1):
                yield block + rest

    yield from rec(0)


def labelings(P: str, content: Sequence[int], mode: str = "content", picker: SubsetPicker = ASC) -> Iterator[Word]:
    """Label words for the North steps of P.

    mode "content": strictly increasing up columns, content as given.
    mode "lattice": same, restricted to lattice words.
    mode "S": any word of that content with i in S(w) whenever steps i, i+1 share a column.
    """
    if mode in ("content", "lattice"):
        counts = {i: a for i, a in enumerate(content, start=1) if a}
        for w in _increasing_fillings(north_runs(P), counts):
            if mode == "content" or is_lattice_word(w):
                yield w
    elif mode == "S":
        for w in multiset_permutations(_letters(content)):
            if labels_fit_columns(P, w, picker):
                yield w
    else:
        raise ValueError(f"unknown labeling mode {mode!r}")


def enumerate_pf(gamma: Partition, content: Sequence[int], mode: str = "content",
                 picker: SubsetPicker = ASC) -> Iterator[LatticePathPair]:
    """gamma-parking functions of the given content (height = sum of content)."""
    n = sum(content)
    if n < 1:
        return
    for base in gamma_dyck_paths(gamma, n):
        for w in labelings(base.P, content, mode, picker):
            yield LatticePathPair(base.P, base.Q, w)


def ascent_polyominoes(lam: Sequence[int], gamma: Partition, picker: SubsetPicker = ASC,
                       words: str = "content") -> Iterator[LatticePathPair]:
    """All S-labeled polyominoes with label content lam and bottom-path type gamma."""
    n = sum(lam)
    gamma = tuple(gamma)
    if len(gamma) > n or n < 1:
        return
    word_iter = (
        multiset_permutations(_letters(lam)) if words == "content"
        else (w for w in multiset_permutations(_letters(lam)) if is_lattice_word(w))
    )
    for w in word_iter:
        S = picker(w)
        for l in multiset_permutations(list(gamma) + [0] * (n - len(gamma))):
            rows = [l[i - 1] + (i in S) for i in range(1, n + 1)]
            rows[0] += 1
            q_rows = rows + [0]
            Q = rows_to_steps(q_rows)
            for P in top_paths(q_rows):
                yield LatticePathPair(P, Q, w)


def polyominoes(width: int, height: int) -> Iterator[LatticePathPair]:
    """All (unlabeled) parallelogram polyominoes in a width x height box."""
    if width < 1 or height < 1:
        return
    # bottom paths start with E and end with N
    for inner in multiset_permutations("E" * (width - 1) + "N" * (height - 1)):
        Q = "E" + "".join(inner) + "N"
        for P in top_paths(steps_to_rows(Q)):
            yield LatticePathPair(P, Q)


def area_gf(objs) -> QPoly:
    return QPoly.from_exponents(p.area() for p in objs)


def combinatorial_expansion(kind: str, lam: Partition, gamma: Partition,
                            picker: SubsetPicker = ASC) -> EExpansion:
    """Group q^area by sorted e-composition over PF (kind e) or lattice PF of lam' (kind s).

    With a non-ascent picker (kind e only) the S-labeled gamma-Dyck paths are used.
    """
    lam, gamma = tuple(lam), tuple(gamma)
    n = sum(lam)
    if kind == "e":
        mode, content = ("content" if picker is ASC else "S"), lam
    elif kind == "s":
        if picker is not ASC:
            raise ValueError("the Schur expansion uses ascents")
        mode, content = "lattice", conjugate(lam)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    buckets: dict[Partition, list[int]] = defaultdict(list)
    for p in enumerate_pf(gamma, content, mode, picker):
        eta = to_partition(e_composition(p, picker))
        buckets[eta].append(p.area())
    return EExpansion(n, {eta: QPoly.from_exponents(a) for eta, a in buckets.items()})


def polyomino_expansion(lam: Partition, gamma: Partition, picker: SubsetPicker = ASC) -> EExpansion:
    """Same grouping over S-labeled polyominoes (eta read straight off P)."""
    n = sum(lam)
    buckets: dict[Partition, list[int]] = defaultdict(list)
    for p in ascent_polyominoes(lam, gamma, picker):
        buckets[to_partition(north_runs(p.P))].append(p.area())
    return EExpansion(n, {eta: QPoly.from_exponents(a) for eta, a in buckets.items()})
