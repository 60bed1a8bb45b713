"""SVG and ASCII pictures of HN polygons on shared axes."""

from __future__ import annotations

import math
from fractions import Fraction
from xml.sax.saxutils import escape

from .bundles import format_slope
from .polygons import HNPolygon, evaluate

COLORS = ["#c0392b", "#2471a3", "#1e8449", "#7d3c98", "#b9770e", "#17202a"]
MARKS = "*o+x#@"


def _bounds(polygons):
    xs = [x for P in polygons for x, _ in P.vertices]
    ys = [y for P in polygons for _, y in P.vertices]
    return 0, max(xs + [1]), min(ys + [0]), max(ys + [1])


def to_svg(polygons, labels=None, unit: int = 48, margin: int = 56) -> str:
    """SVG 1.1 document, y axis pointing up, integer gridlines, labelled vertices."""
    polygons = list(polygons)
    if not polygons:
        raise ValueError("nothing to draw")
    labels = list(labels or [f"P{i}" for i in range(len(polygons))])
    x0, x1, y0, y1 = _bounds(polygons)
    width = (x1 - x0) * unit + 2 * margin
    height = (y1 - y0) * unit + 2 * margin + 18 * len(polygons)

    def px(x, y):
        return margin + (x - x0) * unit, margin + (y1 - y) * unit

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g id="grid" stroke="#d5d8dc" stroke-width="1">',
    ]
    for x in range(x0, x1 + 1):
        (ax, ay), (bx, by) = px(x, y0), px(x, y1)
        out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
    for y in range(y0, y1 + 1):
        (ax, ay), (bx, by) = px(x0, y), px(x1, y)
        out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
    out.append("</g>")
    (ax, ay), (bx, by) = px(x0, 0), px(x1, 0)
    out.append(f'<line id="x-axis" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="#566573" stroke-width="1.5"/>')
    (ax, ay), (bx, by) = px(0, y0), px(0, y1)
    out.append(f'<line id="y-axis" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="#566573" stroke-width="1.5"/>')

    for k, (P, label) in enumerate(zip(polygons, labels)):
        color = COLORS[k % len(COLORS)]
        pts = " ".join(f"{a},{b}" for a, b in (px(x, y) for x, y in P.vertices))
        out.append(f'<g class="polygon" id="polygon-{k}">')
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="2.5"/>')
        for x, y in P.vertices:
            cx, cy = px(x, y)
            out.append(f'<circle cx="{cx}" cy="{cy}" r="3.5" fill="{color}"/>')
            text = f"({format_slope(Fraction(x))}, {format_slope(Fraction(y))})"
            out.append(
                f'<text x="{cx + 5}" y="{cy - 6 - 12 * k}" font-size="11" font-family="monospace" '
                f'fill="{color}">{escape(text)}</text>'
            )
        out.append("</g>")
        ly = height - margin // 2 - 18 * (len(polygons) - 1 - k)
        out.append(
            f'<text class="legend" x="{margin}" y="{ly}" font-size="13" font-family="monospace" '
            f'fill="{color}">{escape(label)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_ascii(polygons, labels=None, cols_per_unit: int = 4, rows_per_unit: int = 1) -> str:
    """Character plot; each polygon gets its own mark, later ones drawn on top."""
    polygons = list(polygons)
    if not polygons:
        raise ValueError("nothing to draw")
    labels = list(labels or [f"P{i}" for i in range(len(polygons))])
    x0, x1, y0, y1 = _bounds(polygons)
    ncols = (x1 - x0) * cols_per_unit + 1
    nrows = (y1 - y0) * rows_per_unit + 1
    grid = [[" "] * ncols for _ in range(nrows)]
    for c in range(0, ncols, cols_per_unit):
        for r in range(nrows):
            grid[r][c] = "."
    zero_row = y1 * rows_per_unit
    for c in range(ncols):
        grid[zero_row][c] = "-" if grid[zero_row][c] == " " else "+"
    for k, P in enumerate(polygons):
        mark = MARKS[k % len(MARKS)]
        for c in range(P.width * cols_per_unit + 1):
            y = evaluate(P, Fraction(c, cols_per_unit))
            r = (y1 * rows_per_unit) - math.floor(y * rows_per_unit + Fraction(1, 2))
            grid[r][c] = mark
    lines = []
    for r, row in enumerate(grid):
        y = Fraction(y1 * rows_per_unit - r, rows_per_unit)
        lines.append(f"{format_slope(y):>5} |" + "".join(row).rstrip())
    lines.append("      +" + "-" * ncols)
    axis = [" "] * ncols
    for x in range(x0, x1 + 1):
        s = str(x)
        pos = (x - x0) * cols_per_unit
        axis[pos:pos + len(s)] = s
    lines.append("       " + "".join(axis).rstrip())
    for k, label in enumerate(labels):
        lines.append(f"  {MARKS[k % len(MARKS)]}  {label}")
    return "\n".join(lines) + "\n"


def render(polygons, labels=None, fmt: str = "svg") -> str:
    if fmt == "svg":
        return to_svg(polygons, labels)
    if fmt == "ascii":
        return to_ascii(polygons, labels)
    raise ValueError(f"unknown format {fmt!r}")


__all__ = ["HNPolygon", "render", "to_ascii", "to_svg"]
