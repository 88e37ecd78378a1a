"""TikZ and SVG drawings of path pairs and decorated Dyck paths.

Output is a pure function of the object, so the same input always gives the
same bytes.
"""
from __future__ import annotations

from typing import Sequence

from .extended_delta import DecoratedDyck
from .paths import ASC, LatticePathPair, SubsetPicker

SCALE = 20  # svg pixels per unit


def _walk(steps: str, start=(0, 0)) -> list[tuple[int, int]]:
    x, y = start
    pts = [(x, y)]
    for s in steps:
        if s == "E":
            x += 1
        else:
            y += 1
        pts.append((x, y))
    return pts


def _coords(pts: Sequence[tuple[float, float]]) -> str:
    return " -- ".join(f"({_num(x)},{_num(y)})" for x, y in pts)


def _num(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else f"{v:g}"


def pruned_steps(p: LatticePathPair, picker: SubsetPicker = ASC) -> list[tuple[float, float]]:
    """Midpoints of the East steps of P dropped when reading the e-composition."""
    if p.w is None:
        return []
    S = picker(p.w)
    rows = p.p_rows
    out = []
    for i in range(1, len(p.w) + 1):
        if i not in S:
            if rows[i] < 1:
                raise ValueError(f"no East step on line {i} to mark")
            out.append((sum(rows[:i]) + 0.5, i))
    return out


def _label_spots(p: LatticePathPair) -> list[tuple[float, float, int]]:
    if p.w is None:
        return []
    rows = p.p_rows
    return [(sum(rows[:i]) + 0.5, i - 0.5, p.w[i - 1]) for i in range(1, p.height + 1)]


def _check_drawable(p: LatticePathPair) -> None:
    if p.P and not p.is_polyomino():
        raise ValueError("top path touches or crosses the bottom path")


def tikz_pair(p: LatticePathPair, picker: SubsetPicker = ASC, marks: bool = True) -> str:
    if not p.P:
        return "\\begin{tikzpicture}\n\\end{tikzpicture}\n"
    _check_drawable(p)
    top, bottom = _walk(p.P), _walk(p.Q)
    lines = [
        "\\begin{tikzpicture}[scale=1]",
        f"\\draw[gray!60, thin] (0,0) grid ({p.width},{p.height});",
        f"\\filldraw[yellow, opacity=0.3] {_coords(bottom + top[::-1][1:])};",
        f"\\draw[red, line width=1.6pt] {_coords(top)};",
        f"\\draw[green, line width=1.6pt] {_coords(bottom)};",
    ]
    for x, y, a in _label_spots(p):
        lines.append(f"\\node at ({_num(x)},{_num(y)}) {{${a}$}};")
    if marks:
        for x, y in pruned_steps(p, picker):
            lines.append(f"\\node at ({_num(x)},{_num(y)}) {{$\\times$}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def _svg_points(pts, H) -> str:
    return " ".join(f"{_num(x * SCALE)},{_num((H - y) * SCALE)}" for x, y in pts)


def svg_pair(p: LatticePathPair, picker: SubsetPicker = ASC, marks: bool = True) -> str:
    if not p.P:
        return '<svg xmlns="http://www.w3.org/2000/svg" width="0" height="0"></svg>\n'
    _check_drawable(p)
    W, H = p.width, p.height
    top, bottom = _walk(p.P), _walk(p.Q)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W * SCALE}" height="{H * SCALE}" '
           f'viewBox="0 0 {W * SCALE} {H * SCALE}">']
    for x in range(W + 1):
        out.append(f'<line x1="{x * SCALE}" y1="0" x2="{x * SCALE}" y2="{H * SCALE}" stroke="#ccc"/>')
    for y in range(H + 1):
        out.append(f'<line x1="0" y1="{y * SCALE}" x2="{W * SCALE}" y2="{y * SCALE}" stroke="#ccc"/>')
    out.append(f'<polygon points="{_svg_points(bottom + top[::-1][1:], H)}" fill="yellow" fill-opacity="0.3"/>')
    out.append(f'<polyline points="{_svg_points(top, H)}" fill="none" stroke="red" stroke-width="3"/>')
    out.append(f'<polyline points="{_svg_points(bottom, H)}" fill="none" stroke="green" stroke-width="3"/>')
    for x, y, a in _label_spots(p):
        out.append(f'<text x="{_num(x * SCALE)}" y="{_num((H - y) * SCALE)}" text-anchor="middle" '
                   f'dominant-baseline="central" font-size="{SCALE // 2}">{a}</text>')
    if marks:
        for x, y in pruned_steps(p, picker):
            out.append(f'<text x="{_num(x * SCALE)}" y="{_num((H - y) * SCALE)}" text-anchor="middle" '
                       f'dominant-baseline="central" font-size="{SCALE // 2}">&#215;</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def tikz_decorated(d: DecoratedDyck) -> str:
    """Dyck path in red over the diagonal; bullets on marked valleys, stars on decorated falls."""
    if not d.steps:
        return "\\begin{tikzpicture}\n\\end{tikzpicture}\n"
    N = d.size
    pts = _walk(d.steps)
    lines = [
        "\\begin{tikzpicture}[scale=1]",
        f"\\draw[gray!60, thin] (0,0) grid ({N},{N});",
        f"\\draw[dashed] (0,0) -- ({N},{N});",
        f"\\draw[red, line width=1.6pt] {_coords(pts)};",
    ]
    for i in d.valleys:
        (x, y) = pts[i]
        lines.append(f"\\node at ({_num(x)},{_num(y + 0.5)}) {{$\\bullet$}};")
    cols = [i for i, s in enumerate(d.steps) if s == "E"]
    for j in d.decorated:
        x, y = pts[cols[j]]
        lines.append(f"\\node at ({_num(x + 0.5)},{_num(y + 0.5)}) {{$\\ast$}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def render(obj: dict, fmt: str = "tikz", picker: SubsetPicker = ASC) -> str:
    """Draw an object given in its JSON form."""
    if not isinstance(obj, dict):
        raise ValueError("object JSON must be a mapping")
    if "steps" in obj:
        d = DecoratedDyck(obj["steps"], tuple(obj.get("valleys", ())), tuple(obj.get("decorated", ())))
        if fmt != "tikz":
            raise ValueError("decorated Dyck paths render to tikz only")
        return tikz_decorated(d)
    try:
        p = LatticePathPair.from_json(obj)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed object JSON: {exc}") from exc
    if fmt == "tikz":
        return tikz_pair(p, picker)
    if fmt == "svg":
        return svg_pair(p, picker)
    raise ValueError(f"unknown format {fmt!r}")
