"""HN polygons as exact piecewise-linear lattice paths."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bundles import Bundle, hn_vectors
from .errors import InvalidPolygonError, OutOfRangeError


@dataclass(frozen=True)
class HNPolygon:
    """Upper-convex lattice path starting at the origin.

    ``vertices`` only lists genuine corners (plus both endpoints), so two
    polygons are equal iff their vertex tuples are.
    """

    vertices: tuple = ((0, 0),)

    def __post_init__(self):
        verts = tuple((x, y) for x, y in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts or verts[0] != (0, 0):
            raise InvalidPolygonError("polygon must start at (0, 0)")
        prev_slope = None
        for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
            if not all(isinstance(c, int) for c in (x1, y1)):
                raise InvalidPolygonError(f"vertex {(x1, y1)} is not a lattice point")
            if x1 <= x0:
                raise InvalidPolygonError("x-coordinates must be strictly increasing")
            s = Fraction(y1 - y0, x1 - x0)
            if prev_slope is not None and not s < prev_slope:
                raise InvalidPolygonError("segment slopes must be strictly decreasing")
            prev_slope = s

    @property
    def endpoint(self) -> tuple:
        return self.vertices[-1]

    @property
    def width(self) -> int:
        return self.vertices[-1][0]

    def segments(self) -> list:
        """Displacement vectors ``(dx, dy)`` of the segments, left to right."""
        return [(x1 - x0, y1 - y0) for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:])]


def polygon_of(V: Bundle) -> HNPolygon:
    x = y = 0
    verts = [(0, 0)]
    for v in hn_vectors(V):
        x += v.rank
        y += v.degree
        verts.append((x, y))
    return HNPolygon(tuple(verts))


def bundle_of(P) -> Bundle:
    """Inverse of :func:`polygon_of`; accepts an HNPolygon or a vertex list."""
    if not isinstance(P, HNPolygon):
        P = HNPolygon(tuple(P))
    pairs = []
    for dx, dy in P.segments():
        s = Fraction(dy, dx)
        pairs.append((s, dx // s.denominator))
    return Bundle(tuple(pairs))


def evaluate(P: HNPolygon, x) -> Fraction:
    x = Fraction(x)
    if x < 0 or x > P.width:
        raise OutOfRangeError(f"x = {x} outside [0, {P.width}]")
    verts = P.vertices
    for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
        if x <= x1:
            return y0 + Fraction(y1 - y0, x1 - x0) * (x - x0)
    return Fraction(verts[-1][1])


def breakpoints(P: HNPolygon, Q: HNPolygon) -> list:
    """Sorted union of the vertex x-coordinates of both polygons."""
    return sorted({x for x, _ in P.vertices} | {x for x, _ in Q.vertices})


def lies_on_or_below(P: HNPolygon, Q: HNPolygon) -> bool:
    """``P <= Q`` pointwise; polygons of different widths are incomparable (False)."""
    if P.width != Q.width:
        return False
    return all(evaluate(P, x) <= evaluate(Q, x) for x in breakpoints(P, Q))


def same_endpoints(P: HNPolygon, Q: HNPolygon) -> bool:
    return P.endpoint == Q.endpoint


def agreement_intervals(P: HNPolygon, Q: HNPolygon) -> list:
    """Maximal closed intervals ``(a, b)`` on which ``P`` and ``Q`` coincide.

    Isolated touching points come back as degenerate intervals ``(a, a)``.
    Both polygons must have the same width.
    """
    if P.width != Q.width:
        raise OutOfRangeError("agreement is only defined for polygons of equal width")
    xs = breakpoints(P, Q)
    eq = [evaluate(P, x) == evaluate(Q, x) for x in xs]
    out = []
    for i, x in enumerate(xs):
        if not eq[i]:
            continue
        # both pieces are linear between breakpoints, so agreeing at two
        # consecutive breakpoints means agreeing on the whole gap
        if out and i > 0 and eq[i - 1] and out[-1][1] == xs[i - 1]:
            out[-1] = (out[-1][0], x)
        else:
            out.append((x, x))
    return out


def slope_on_unit_interval(P: HNPolygon, i: int) -> Fraction:
    if not 1 <= i <= P.width:
        raise OutOfRangeError(f"unit interval [{i - 1}, {i}] outside [0, {P.width}]")
    return evaluate(P, i) - evaluate(P, i - 1)


def unit_slopes(P: HNPolygon) -> list:
    """Slopes on ``[0,1], [1,2], ...`` read directly off the segments."""
    out = []
    for dx, dy in P.segments():
        out.extend([Fraction(dy, dx)] * dx)
    return out


def has_vertex_at(P: HNPolygon, j: int) -> bool:
    return any(x == j for x, _ in P.vertices)
