"""Positive-part degrees ``deg(.)^{>=0}`` of tensor expressions.

``hom_degree(E, F)`` is ``deg(E^v (x) F)^{>=0}``, computed from HN vectors
by the cross-product sum.  ``hom_degree_oracle`` gets the same number the
slow way, by expanding the tensor product summand by summand; the two are
kept deliberately independent so that one can check the other.
"""

from __future__ import annotations

from fractions import Fraction

from .bundles import Bundle, dual, hn_vectors, mu_max, mu_min, tensor, truncate
from .errors import SlopeOrderError
from .polygons import bundle_of, polygon_of


def pos_part_degree(V: Bundle) -> int:
    return truncate(V, 0, ">=").degree


def hom_degree(E: Bundle, F: Bundle) -> int:
    total = 0
    for e in hn_vectors(E):
        for f in hn_vectors(F):
            # mu(e) <= mu(f), cross-multiplied (ranks are positive)
            if e.degree * f.rank <= f.degree * e.rank:
                total += e.cross(f)
    return total


def hom_degree_oracle(E: Bundle, F: Bundle) -> int:
    return pos_part_degree(tensor(dual(E), F))


def parallelogram_degree(E: Bundle, F: Bundle) -> int:
    """Cross product of the endpoints of ``HN(E)`` and ``HN(F)``.

    Only meaningful when every slope of ``E`` is at most every slope of ``F``.
    """
    if E.is_zero() or F.is_zero():
        raise SlopeOrderError("parallelogram_degree needs nonzero bundles")
    if mu_max(E) > mu_min(F):
        raise SlopeOrderError(f"mu_max(E) = {mu_max(E)} exceeds mu_min(F) = {mu_min(F)}")
    return E.rank * F.degree - E.degree * F.rank


def shoelace_area(points) -> Fraction:
    """Signed area of a closed polygon (counterclockwise positive)."""
    pts = list(points)
    twice = 0
    for (x0, y0), (x1, y1) in zip(pts, pts[1:] + pts[:1]):
        twice += x0 * y1 - x1 * y0
    return Fraction(twice, 2)


def chord_area(V: Bundle) -> Fraction:
    """Area between ``HN(V)`` and the segment joining its endpoints."""
    # the path runs left to right above the chord, i.e. clockwise
    return -shoelace_area(polygon_of(V).vertices)


def aut_degree(V: Bundle) -> int:
    """``deg(V^v (x) V)^{>=0}``; asserts agreement with twice the chord area."""
    value = hom_degree(V, V)
    area = 2 * chord_area(V)
    if area != value:
        raise AssertionError(f"aut degree {value} != twice chord area {area} for {V}")
    return value


def stretch(V: Bundle, C: int) -> Bundle:
    """Bundle whose HN polygon is ``HN(V)`` stretched vertically by ``C``."""
    if C < 1:
        raise ValueError("stretch factor must be a positive integer")
    P = polygon_of(V)
    return bundle_of(tuple((x, C * y) for x, y in P.vertices))


def relevant_part_identities(E: Bundle, F: Bundle, lam, lam_prime) -> tuple:
    """The three sides of the relevant-part identity, for ``lam <= mu_min(E)``
    and ``lam_prime >= mu_max(F)``."""
    return (
        hom_degree(E, F),
        hom_degree(E, truncate(F, lam, ">")),
        hom_degree(truncate(E, lam_prime, "<"), F),
    )

