"""Staircase and V-grid renderings (SVG and ASCII).

The V-grid marks each index pair (i, j), i <= j, with a star when its
product u_i*u_j survives into G(I^2) and with a dot otherwise; when
several pairs give the same monomial only the lexicographically first
pair gets the star.  The staircase draws the lattice region of a
bivariate ideal and, when the ideal is a recognized skeleton-plus-box
construct, overlays the [2t, 3t-1]^2 box.
"""

from __future__ import annotations

from .errors import ParameterError
from .monomial import Monomial, MonomialIdeal, contains_monomial, minimalize, multiply, power
from .tiny_squares import SortedBivariateIdeal

STAR = "star"
DOT = "dot"


def vgrid_cells(I: SortedBivariateIdeal) -> list[tuple[int, int, str]]:
    """Markers for every cell of V = {(i,j) : 1 <= i <= j <= m}."""
    m = I.m
    square = power(I.as_ideal(), 2)
    minimal = set(square.gens)
    starred: set[Monomial] = set()
    cells = []
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            p = multiply(I.u(i), I.u(j))
            if p in minimal and p not in starred:
                cells.append((i, j, STAR))
                starred.add(p)
            else:
                cells.append((i, j, DOT))
    return cells


def render_vgrid_ascii(I: SortedBivariateIdeal) -> str:
    m = I.m
    marks = {(i, j): k for i, j, k in vgrid_cells(I)}
    lines = []
    for j in range(m, 0, -1):
        row = [f"{j:3d} "]
        for i in range(1, m + 1):
            if i > j:
                row.append("  ")
            else:
                row.append(" *" if marks[(i, j)] == STAR else " .")
        lines.append("".join(row))
    lines.append("    " + "".join(f"{i:2d}" for i in range(1, m + 1)))
    return "\n".join(lines) + "\n"


def render_vgrid_svg(I: SortedBivariateIdeal) -> str:
    m = I.m
    cell = 28
    pad = 36
    size = pad * 2 + cell * m
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]

    def cx(i):
        return pad + (i - 1) * cell + cell // 2

    def cy(j):
        return size - pad - (j - 1) * cell - cell // 2

    for i, j, kind in vgrid_cells(I):
        if kind == STAR:
            out.append(
                f'<text x="{cx(i)}" y="{cy(j) + 5}" text-anchor="middle" '
                f'font-size="18">&#x2217;</text>'
            )
        else:
            out.append(f'<circle cx="{cx(i)}" cy="{cy(j)}" r="3" fill="black"/>')
    for i in range(1, m + 1):
        out.append(
            f'<text x="{cx(i)}" y="{size - pad + 16}" text-anchor="middle" '
            f'font-size="11">{i}</text>'
        )
        out.append(
            f'<text x="{pad - 14}" y="{cy(i) + 4}" text-anchor="middle" '
            f'font-size="11">{i}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def detect_skeleton_box(I: MonomialIdeal) -> int | None:
    """Return t when I looks like skeleton(2, t) plus monomials inside
    [2t, 3t-1]^2, else None."""
    if I.arity != 2:
        return None
    gens = set(g.exps for g in I.gens)
    a1 = max(a for a, _ in gens)
    if a1 % 4 != 0 or a1 == 0:
        return None
    t = a1 // 4
    needed = {(4 * t, 0), (0, 4 * t), (3 * t, t), (t, 3 * t)}
    if not needed <= gens:
        return None
    rest = gens - needed
    if all(2 * t <= a <= 3 * t - 1 and 2 * t <= b <= 3 * t - 1 for a, b in rest):
        return t
    return None


def _staircase_corners(I: MonomialIdeal) -> list[tuple[int, int]]:
    """Minimal generators as (a, b) pairs, a strictly decreasing."""
    M = I if I.minimal else minimalize(I.gens)
    return sorted((g.exps for g in M.gens), key=lambda p: -p[0])


def _staircase_path(corners: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Inner staircase boundary, from the y-axis side down to the x-axis."""
    m = len(corners)
    pts = [corners[m - 1]]
    for i in range(m - 2, -1, -1):
        a, b = corners[i]
        pts.append((a, pts[-1][1]))
        pts.append((a, b))
    return pts


def render_staircase_ascii(I: MonomialIdeal) -> str:
    if I.arity != 2:
        raise ParameterError("staircase requires arity 2")
    gens = set(g.exps for g in I.gens)
    xmax = max(a for a, _ in gens) + 1
    ymax = max(b for _, b in gens) + 1
    t = detect_skeleton_box(I)
    lines = []
    for y in range(ymax, -1, -1):
        row = []
        for x in range(xmax + 1):
            if (x, y) in gens:
                row.append("G")
            elif contains_monomial(I, Monomial((x, y))):
                row.append("#")
            elif t is not None and 2 * t <= x <= 3 * t - 1 and 2 * t <= y <= 3 * t - 1:
                row.append("+")
            else:
                row.append(".")
        lines.append("".join(row))
    return "\n".join(lines) + "\n"


def render_staircase_svg(I: MonomialIdeal) -> str:
    if I.arity != 2:
        raise ParameterError("staircase requires arity 2")
    t = detect_skeleton_box(I)
    xmax = max(g.exps[0] for g in I.gens)
    ymax = max(g.exps[1] for g in I.gens)
    span = max(xmax, ymax)
    scale = 440 / max(span, 1)
    pad = 40
    size = 440 + 2 * pad

    def px(x):
        return pad + x * scale

    def py(y):
        return size - pad - y * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="{px(0)}" y1="{py(0)}" x2="{px(span)}" y2="{py(0)}" stroke="black"/>',
        f'<line x1="{px(0)}" y1="{py(0)}" x2="{px(0)}" y2="{py(span)}" stroke="black"/>',
    ]

    # axis ticks: multiples of t for a recognized skeleton, data-driven otherwise
    if t is not None:
        ticks = [i * t for i in range(5)]
    else:
        step = max(span // 8, 1)
        ticks = list(range(0, span + 1, step))
    for v in ticks:
        out.append(
            f'<text x="{px(v)}" y="{py(0) + 16}" text-anchor="middle" font-size="10">{v}</text>'
        )
        out.append(
            f'<text x="{px(0) - 8}" y="{py(v) + 4}" text-anchor="end" font-size="10">{v}</text>'
        )

    path = _staircase_path(_staircase_corners(I))
    start = path[0]
    d = f"M {px(start[0]):.1f} {py(ymax):.1f} L " + " L ".join(
        f"{px(x):.1f} {py(y):.1f}" for x, y in path
    )
    # close along the axes directions
    end = path[-1]
    d += f" L {px(xmax):.1f} {py(end[1]):.1f}"
    out.append(f'<path d="{d}" fill="none" stroke="purple" stroke-width="2"/>')

    for g in I.gens:
        out.append(
            f'<circle cx="{px(g.exps[0]):.1f}" cy="{py(g.exps[1]):.1f}" r="3" fill="purple"/>'
        )

    if t is not None:
        out.append(
            f'<rect x="{px(2 * t):.1f}" y="{py(3 * t - 1):.1f}" '
            f'width="{(t - 1) * scale:.1f}" height="{(t - 1) * scale:.1f}" '
            f'fill="none" stroke="red" stroke-dasharray="4 3"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
