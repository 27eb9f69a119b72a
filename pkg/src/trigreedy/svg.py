"""SVG rendering of drawings.

Everything upstream is exact integer arithmetic; coordinates become
floats only here, at emission, formatted to six decimal places.  The
outer face renders as an equilateral triangle with the first corner on
top; SVG's y axis grows downward, so points are flipped against the
triangle's bounding height.
"""

from __future__ import annotations

import math

from .drawing import CartesianPlacement
from .realizer import Realizer
from .triangulation import Triangulation

#: stroke per tree index 1..3, plus the outer-face fallback at key 0
PALETTE = {0: "#888888", 1: "#d62728", 2: "#2ca02c", 3: "#1f77b4"}

_LEGEND = ((1, "T1"), (2, "T2"), (3, "T3"))


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def render_svg(
    tri: Triangulation,
    placement: CartesianPlacement,
    realizer: Realizer | None = None,
    scale: float = 400.0,
    vertex_radius: float = 3.0,
    margin: float = 20.0,
) -> str:
    """Render the drawing as a standalone SVG document string.

    When a realizer is given, its tree edges are colored per tree with a
    legend; the three outer edges always use the neutral stroke.
    """
    if scale <= 0:
        raise ValueError(f"need a positive scale, got {scale}")
    height = math.sqrt(3.0) / 2.0

    def point(v: int) -> tuple[float, float]:
        x, y = placement.point(v)
        return margin + scale * x, margin + scale * (height - y)

    tree_of: dict[tuple[int, int], int] = {}
    if realizer is not None:
        for child, parent, tree in realizer.labels():
            tree_of[(min(child, parent), max(child, parent))] = tree

    width = 2 * margin + scale
    total_height = 2 * margin + scale * height + (18.0 if realizer is not None else 0.0)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(total_height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(total_height)}">',
        f'<rect width="{_fmt(width)}" height="{_fmt(total_height)}" fill="white"/>',
    ]
    for u, v in tri.edges():
        xu, yu = point(u)
        xv, yv = point(v)
        stroke = PALETTE[tree_of.get((u, v), 0)]
        lines.append(
            f'<line x1="{_fmt(xu)}" y1="{_fmt(yu)}" x2="{_fmt(xv)}" y2="{_fmt(yv)}" '
            f'stroke="{stroke}" stroke-width="1.5"/>'
        )
    for v in range(tri.n):
        x, y = point(v)
        fill = "#000000" if v < 3 else "#555555"
        lines.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(vertex_radius)}" fill="{fill}"/>'
        )
    if realizer is not None:
        ly = 2 * margin + scale * height + 4.0
        lx = margin
        for tree, label in _LEGEND:
            lines.append(
                f'<line x1="{_fmt(lx)}" y1="{_fmt(ly)}" x2="{_fmt(lx + 24.0)}" y2="{_fmt(ly)}" '
                f'stroke="{PALETTE[tree]}" stroke-width="2.0"/>'
            )
            lines.append(
                f'<text x="{_fmt(lx + 28.0)}" y="{_fmt(ly + 4.0)}" '
                f'font-size="12" font-family="sans-serif">{label}</text>'
            )
            lx += 90.0
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
