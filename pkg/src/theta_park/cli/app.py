"""theta-park: expansions, enumerations, verification suites, conjecture
reports and figure rendering from the shell.

Exit codes: 0 success, 1 invalid input, 2 pipeline disagreement or a
negative conjecture coefficient; ``verify`` exits with the number of failing
suites.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from ..combinatorics import is_partition, partitions
from ..macdonald import DEGREE_CAP, epositivity_check
from ..structures.cct import cct_enumerate, fixed_points
from ..structures.extended_delta import colored_parking_functions, decorated_dyck_paths, extended_delta_map
from ..structures.paths import PICKERS, ascent_polyominoes, combinatorial_expansion, enumerate_pf
from ..structures.render import render
from ..symfun import EExpansion, xi_expand_t1
from .suites import SUITES, run_suite, thread_count

MAX_EXIT = 100
CONJECTURE_N_MAX = 4


class InputError(ValueError):
    pass


def parse_partition(text: str) -> tuple[int, ...]:
    """'3,1,1' -> (3, 1, 1); '' -> ()."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"not a comma-separated list of integers: {text!r}") from exc
    if not is_partition(parts):
        raise InputError(f"not a partition (positive, weakly decreasing): {text!r}")
    return parts


@dataclass
class RunConfig:
    command: str
    kind: str = "e"
    lam: tuple[int, ...] = ()
    gamma: tuple[int, ...] = ()
    eta: tuple[int, ...] = ()
    n_max: int | None = None
    m_max: int | None = None
    weight_max: int | None = None
    fmt: str = "text"
    threads: int = 1
    picker: str = "asc"

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        get = lambda k, d=None: getattr(ns, k, d)  # noqa: E731
        return cls(
            command=ns.command,
            kind=get("kind", "e") or "e",
            lam=parse_partition(get("lam") or ""),
            gamma=parse_partition(get("gamma") or ""),
            eta=parse_partition(get("eta") or ""),
            n_max=get("n_max"),
            m_max=get("m_max"),
            weight_max=get("weight_max"),
            fmt=get("format", "text") or "text",
            threads=thread_count(get("threads") or 1),
            picker=get("picker", "asc") or "asc",
        )


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# --------------------------------------------------------------------------
# expand
# --------------------------------------------------------------------------

def cmd_expand(cfg: RunConfig, pipeline: str = "both") -> int:
    if not cfg.lam:
        raise InputError("--lambda must be a nonempty partition")
    if cfg.kind == "s" and cfg.picker != "asc":
        raise InputError("kind s uses the ascent labeling only")
    results: dict[str, EExpansion] = {}
    if pipeline in ("oracle", "both"):
        results["oracle"] = xi_expand_t1(cfg.kind, cfg.lam, cfg.gamma)
    if pipeline in ("combinatorial", "both"):
        results["combinatorial"] = combinatorial_expansion(cfg.kind, cfg.lam, cfg.gamma, PICKERS[cfg.picker])
    first = next(iter(results.values()))
    diff = first.diff(results["combinatorial"]) if len(results) == 2 else []
    if cfg.fmt == "json":
        payload = first.to_json()
        payload["pipeline"] = pipeline
        payload["diff"] = [{"eta": list(e), "oracle": a.to_json(), "combinatorial": b.to_json()}
                           for e, a, b in diff]
        _emit(json.dumps(payload))
    else:
        _emit(first.to_text())
    if diff:
        for eta, a, b in diff:
            print(f"disagreement at lambda={cfg.lam} gamma={cfg.gamma} eta={eta}: oracle {a}, "
                  f"combinatorial {b}", file=sys.stderr)
        return 2
    return 0


# --------------------------------------------------------------------------
# enumerate
# --------------------------------------------------------------------------

def _lcseq_json(T) -> list[dict]:
    return [{"alpha": list(x.C.alpha), "c": list(x.C.c), "w": list(x.w), "l": list(x.l)} for x in T]


def cmd_enumerate(cfg: RunConfig, what: str, count_only: bool, n: int, k: int, m: int,
                  max_size: int) -> int:
    picker = PICKERS[cfg.picker]
    if what in ("pf", "lpf"):
        content = cfg.lam
        if what == "lpf":
            items = (p.to_json(picker) for p in enumerate_pf(cfg.gamma, content, "lattice"))
        else:
            items = (p.to_json(picker) for p in enumerate_pf(cfg.gamma, content, "content", picker))
    elif what == "polyominoes":
        items = (p.to_json() for p in ascent_polyominoes(cfg.lam, cfg.gamma, picker))
    elif what == "fixed-points":
        if sum(cfg.eta) != sum(cfg.lam):
            raise InputError("--eta and --lambda must have the same size")
        items = (_lcseq_json(T) for T in fixed_points(cfg.lam, cfg.eta, cfg.gamma, picker))
    elif what == "cct":
        items = ({"alpha": list(C.alpha), "c": list(C.c)} for C in cct_enumerate(cfg.lam, max_size))
    elif what == "colored":
        items = ({"green": list(p.green), "blue": list(p.blue), "P": p.P, "Q": p.Q,
                  "area": p.area(), "eta": list(p.eta()), "image": extended_delta_map(p).to_json()}
                 for p in colored_parking_functions(n, k, m))
    elif what == "decorated":
        items = (d.to_json() for d in decorated_dyck_paths(n, k, m))
    else:
        raise InputError(f"unknown family {what!r}")
    total = 0
    for obj in items:
        total += 1
        if not count_only:
            _emit(json.dumps(obj))
    if count_only:
        _emit(str(total))
    return 0


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------

def cmd_verify(cfg: RunConfig, names: Sequence[str], timings: bool) -> int:
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise InputError(f"unknown suite(s): {', '.join(unknown)}")
    failed = 0
    for name in names or list(SUITES):
        r = run_suite(name, cfg.n_max, cfg.m_max, cfg.weight_max, cfg.threads)
        _emit(r.line(timings))
        for msg in r.failures[:10]:
            _emit(f"  {msg}")
        failed += not r.passed
    return min(failed, MAX_EXIT)


# --------------------------------------------------------------------------
# conjecture
# --------------------------------------------------------------------------

def cmd_conjecture(cfg: RunConfig) -> int:
    if cfg.lam:
        jobs = [(cfg.lam, cfg.gamma)]
    else:
        n_max = CONJECTURE_N_MAX if cfg.n_max is None else cfg.n_max
        m_max = 2 if cfg.m_max is None else cfg.m_max
        jobs = [(lam, g) for n in range(1, min(n_max, DEGREE_CAP) + 1) for lam in partitions(n)
                for mm in range(m_max + 1) for g in partitions(mm)]
    status = 0
    for lam, gamma in jobs:
        rep = epositivity_check(lam, gamma)
        if cfg.fmt == "json":
            _emit(json.dumps(rep.to_json()))
        else:
            flag = "nonnegative" if rep.all_nonnegative else "NEGATIVE"
            _emit(f"lambda={','.join(map(str, lam))} gamma={','.join(map(str, gamma))}: {flag}")
        for eta, a, b, c in rep.negatives():
            print(f"counterexample: lambda={lam} gamma={gamma} eta={eta} u^{a} t^{b} -> {c}", file=sys.stderr)
            status = 2
    return status


# --------------------------------------------------------------------------
# render
# --------------------------------------------------------------------------

def cmd_render(cfg: RunConfig, source: str | None) -> int:
    try:
        if source in (None, "-"):
            obj = json.load(sys.stdin)
        else:
            with open(source, encoding="utf-8") as fh:
                obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read object JSON: {exc}") from exc
    fmt = cfg.fmt if cfg.fmt in ("tikz", "svg") else "tikz"
    sys.stdout.write(render(obj, fmt, PICKERS[cfg.picker]))
    return 0


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    # usage errors are invalid input: exit 1, keeping 2 for disagreements
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="theta-park", description=__doc__.split("\n\n")[0])
    ap.add_argument("--threads", type=int, default=None,
                    help="worker processes (THETA_PARK_THREADS overrides)")
    sub = ap.add_subparsers(dest="command", required=True)

    def selectors(p, eta=False):
        p.add_argument("--lambda", "--mu", dest="lam", default="", help="partition, e.g. 2,1")
        p.add_argument("--gamma", default="", help="partition, '' for empty")
        if eta:
            p.add_argument("--eta", default="")
        p.add_argument("--picker", choices=sorted(PICKERS), default="asc")

    e = sub.add_parser("expand", help="e-expansion of Delta_{m_gamma} Xi e_lambda (or s_lambda) at t=1")
    e.add_argument("--kind", choices=["e", "s"], default="e")
    selectors(e)
    e.add_argument("--pipeline", choices=["oracle", "combinatorial", "both"], default="both")
    e.add_argument("--format", choices=["json", "text"], default="text")

    n = sub.add_parser("enumerate", help="list objects of a family as JSON lines")
    n.add_argument("family", choices=["pf", "lpf", "polyominoes", "fixed-points", "cct", "colored", "decorated"])
    selectors(n, eta=True)
    n.add_argument("--count", action="store_true", help="print only the number of objects")
    n.add_argument("--n", type=int, default=1)
    n.add_argument("--k", type=int, default=0)
    n.add_argument("--m", type=int, default=0)
    n.add_argument("--max-size", type=int, default=4, help="size bound for cct")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suites", nargs="*", help=f"any of: {', '.join(SUITES)} (default all)")
    v.add_argument("--n-max", type=int)
    v.add_argument("--m-max", type=int)
    v.add_argument("--weight-max", type=int)
    v.add_argument("--timings", action="store_true")

    c = sub.add_parser("conjecture", help="e-positivity report after q -> 1+u")
    selectors(c)
    c.add_argument("--n-max", type=int)
    c.add_argument("--m-max", type=int)
    c.add_argument("--format", choices=["json", "text"], default="text")

    r = sub.add_parser("render", help="draw an object given as JSON (file or stdin)")
    r.add_argument("source", nargs="?", default=None)
    r.add_argument("--format", choices=["tikz", "svg"], default="tikz")
    r.add_argument("--picker", choices=sorted(PICKERS), default="asc")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # usage error or --help
        return exc.code if isinstance(exc.code, int) else 1
    commands = {
        "expand": lambda cfg: cmd_expand(cfg, ns.pipeline),
        "enumerate": lambda cfg: cmd_enumerate(cfg, ns.family, ns.count, ns.n, ns.k, ns.m, ns.max_size),
        "verify": lambda cfg: cmd_verify(cfg, ns.suites, ns.timings),
        "conjecture": cmd_conjecture,
        "render": lambda cfg: cmd_render(cfg, ns.source),
    }
    try:
        code = commands[ns.command](RunConfig.from_args(ns))
        sys.stdout.flush()
        return code
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the final flush
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0
