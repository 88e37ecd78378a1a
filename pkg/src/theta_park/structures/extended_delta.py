"""Colored gamma-parking functions of content (n) and the map onto Dyck paths
with marked valleys and decorated double falls.

Source objects: the bottom path E N^n gets n-k green East steps in distinct
rows and m blue East steps anywhere (green before blue inside a row); the top
path is any path strictly above it.

Target objects: Dyck paths of size n+m with m marked valleys and k decorated
double falls. A double fall is an East step followed by another East step;
the last East step always counts. Area is taken over undecorated columns.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from ..combinatorics import Partition, to_partition
from .paths import LatticePathPair, north_runs, rows_to_steps, top_paths


class InvalidColoring(ValueError):
    pass


@dataclass(frozen=True)
class ColoredParking:
    """green[i] in {0, 1} and blue[i] >= 0 East steps inserted in row i+1."""

    green: tuple[int, ...]
    blue: tuple[int, ...]
    P: str

    def __post_init__(self):
        object.__setattr__(self, "green", tuple(self.green))
        object.__setattr__(self, "blue", tuple(self.blue))
        if len(self.green) != len(self.blue) or not self.green:
            raise InvalidColoring("need one green flag and one blue count per row")
        if any(g not in (0, 1) for g in self.green) or min(self.blue) < 0:
            raise InvalidColoring(f"bad coloring {self.green} / {self.blue}")
        try:
            ok = LatticePathPair(self.P, self.Q).is_polyomino()
        except ValueError:
            ok = False
        if not ok:
            raise InvalidColoring(f"{self.P} is not strictly above {self.Q}")

    @property
    def n(self) -> int:
        return len(self.green)

    @property
    def k(self) -> int:
        return self.n - sum(self.green)

    @property
    def m(self) -> int:
        return sum(self.blue)

    @property
    def q_rows(self) -> tuple[int, ...]:
        rows = [g + b for g, b in zip(self.green, self.blue)] + [0]
        rows[0] += 1
        return tuple(rows)

    @property
    def Q(self) -> str:
        return rows_to_steps(self.q_rows)

    def bottom_tokens(self) -> str:
        """Q with colors: 'E' first step, 'g' green, 'b' blue, 'N' north."""
        out = "E"
        for g, b in zip(self.green, self.blue):
            out += "g" * g + "b" * b + "N"
        return out

    @property
    def width(self) -> int:
        return sum(self.q_rows)

    def area(self) -> int:
        return LatticePathPair(self.P, self.Q).area()

    def eta(self) -> Partition:
        # every label is 1, so the e-composition is the North runs of P
        return to_partition(north_runs(self.P))


@dataclass(frozen=True)
class DecoratedDyck:
    """Dyck path with marked valleys (indices of North steps) and decorated
    double falls (column indices of East steps)."""

    steps: str
    valleys: tuple[int, ...]
    decorated: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "valleys", tuple(sorted(self.valleys)))
        object.__setattr__(self, "decorated", tuple(sorted(self.decorated)))
        h = 0
        for s in self.steps:
            h += 1 if s == "N" else -1
            if h < 0 or s not in "NE":
                raise ValueError(f"{self.steps} is not a Dyck path")
        if h:
            raise ValueError(f"{self.steps} is not a Dyck path")
        if not set(self.valleys) <= set(valley_positions(self.steps)):
            raise ValueError("marked step is not a valley")
        if not set(self.decorated) <= set(double_falls(self.steps)):
            raise ValueError("decorated step is not a double fall")

    @property
    def size(self) -> int:
        return len(self.steps) // 2

    def area(self) -> int:
        total, h, col = 0, 0, 0
        skip = set(self.decorated)
        for s in self.steps:
            if s == "N":
                h += 1
                continue
            if col not in skip:
                total += h - col - 1
            col += 1
        return total

    def eta(self) -> Partition:
        """North runs, with marked valleys left out of the count."""
        runs, cur = [], 0
        marked = set(self.valleys)
        for i, s in enumerate(self.steps):
            if s == "E":
                runs.append(cur)
                cur = 0
            elif i not in marked:
                cur += 1
        return to_partition(runs + [cur])

    def to_json(self) -> dict:
        return {"steps": self.steps, "valleys": list(self.valleys),
                "decorated": list(self.decorated), "area": self.area(), "eta": list(self.eta())}


def valley_positions(steps: str) -> list[int]:
    return [i for i in range(1, len(steps)) if steps[i] == "N" and steps[i - 1] == "E"]


def double_falls(steps: str) -> list[int]:
    padded = steps + "E"
    cols = [i for i, s in enumerate(steps) if s == "E"]
    return [j for j, i in enumerate(cols) if padded[i + 1] == "E"]


# --------------------------------------------------------------------------
# the map
# --------------------------------------------------------------------------

def _line_start(P: str, x: int) -> int:
    """Index in P just after its x-th East step (0 for x = 0)."""
    if x == 0:
        return 0
    seen = 0
    for i, s in enumerate(P):
        if s == "E":
            seen += 1
            if seen == x:
                return i + 1
    raise ValueError(f"P has fewer than {x} East steps")


def extended_delta_map(p: ColoredParking) -> DecoratedDyck:
    """Insert marked North steps for blue steps and starred columns for rows
    without green, then slide each star one column left.

    A blue step in column c puts a marked North step on line c-1 of P. A blue
    step in column 1 (possible only when row 1 has no green) has no such line;
    it uses the last line instead, and the starred column of row 1 then goes
    after the final East step rather than at x = 1.
    """
    W = p.width
    Q: list[str] = []
    marked_lines = []
    wrap = False
    for t in p.bottom_tokens():
        if t == "b":
            c = sum(1 for s in Q if s != "N")
            wrap |= c == 1
            marked_lines.append(c - 1 if c > 1 else W - 1)
            Q.append("N")
        Q.append(t)

    star_lines = []
    e_seen = 0
    for i, t in enumerate(Q):
        if t != "N":
            e_seen += 1
        elif i and Q[i - 1] == "N":
            star_lines.append(e_seen)
    if not p.green[0]:
        star_lines.append(W if wrap else 1)

    # stars sit before marked steps on the same line
    inserts = sorted([(_line_start(p.P, x), 0, "*") for x in star_lines]
                     + [(_line_start(p.P, x), 1, "n") for x in marked_lines])
    out: list[str] = []
    j = 0
    for i in range(len(p.P) + 1):
        while j < len(inserts) and inserts[j][0] == i:
            out.append(inserts[j][2])
            j += 1
        if i < len(p.P):
            out.append(p.P[i])

    if out[-1] not in "E*":
        raise AssertionError("top path must end East")
    cols = [t for t in out if t in "E*"]
    decorated = [j - 1 for j, t in enumerate(cols) if t == "*"]
    body = out[:-1]
    steps = "".join("N" if t in "Nn" else "E" for t in body)
    valleys = [i for i, t in enumerate(body) if t == "n"]
    return DecoratedDyck(steps, tuple(valleys), tuple(decorated))


# --------------------------------------------------------------------------
# enumeration
# --------------------------------------------------------------------------

def _weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for a in range(total + 1):
        for rest in _weak_compositions(total - a, parts - 1):
            yield (a,) + rest


def colored_parking_functions(n: int, k: int, m: int) -> Iterator[ColoredParking]:
    if not 0 <= k <= n or m < 0 or n < 1:
        return
    for rows in combinations(range(n), n - k):
        green = tuple(int(i in rows) for i in range(n))
        for blue in _weak_compositions(m, n):
            q_rows = [g + b for g, b in zip(green, blue)] + [0]
            q_rows[0] += 1
            for P in top_paths(q_rows):
                yield ColoredParking(green, blue, P)


def _dyck_paths(N: int) -> Iterator[str]:
    def rec(s, x, y):
        if x == N:
            yield s
            return
        if y < N:
            yield from rec(s + "N", x, y + 1)
        if x < y:
            yield from rec(s + "E", x + 1, y)

    yield from rec("", 0, 0)


def decorated_dyck_paths(n: int, k: int, m: int) -> Iterator[DecoratedDyck]:
    for steps in _dyck_paths(n + m):
        for V in combinations(valley_positions(steps), m):
            for F in combinations(double_falls(steps), k):
                yield DecoratedDyck(steps, V, F)


def eta_area_counts(objs) -> Counter:
    """Multiset of (eta, area) over a family."""
    return Counter((o.eta(), o.area()) for o in objs)


def check_extended_delta(n: int, k: int, m: int) -> dict:
    """Map every source object and compare against the target family."""
    targets = set(decorated_dyck_paths(n, k, m))
    sources = list(colored_parking_functions(n, k, m))
    images = {}
    stat_ok = True
    for s in sources:
        t = extended_delta_map(s)
        stat_ok &= (t.eta(), t.area()) == (s.eta(), s.area())
        images[t] = s
    return {
        "sources": len(sources),
        "targets": len(targets),
        "injective": len(images) == len(sources),
        "into_targets": set(images) <= targets,
        "stats_preserved": stat_ok,
        "gf_equal": eta_area_counts(sources) == eta_area_counts(targets),
    }
