"""Slopewise dominance, in truncation form and in HN-polygon form.

``E`` slopewise dominates ``F`` when ``rk(E^{>=mu}) >= rk(F^{>=mu})`` for
every rational ``mu``.  Strong dominance additionally asks that
``E^{>=mu}`` and ``F^{>=mu}`` be isomorphic whenever those ranks agree.
Truncation ranks are step functions of ``mu`` that only jump at HN slopes,
so checking ``mu`` over the slopes of both bundles decides the question.
"""

from __future__ import annotations

from fractions import Fraction

from .bundles import Bundle, dual, truncate
from .polygons import has_vertex_at, polygon_of, unit_slopes


def _thresholds(E: Bundle, F: Bundle) -> list:
    return sorted(set(E.slopes) | set(F.slopes), reverse=True)


def dominance_failure(E: Bundle, F: Bundle, strong: bool = False):
    """First threshold ``mu`` at which dominance of ``F`` by ``E`` breaks.

    Returns ``None`` when ``E`` dominates ``F`` (strongly, if asked).
    Above every slope both truncations vanish, so no sentinel check is needed
    beyond the slope set itself.
    """
    se, sf = E.summands, F.summands
    ie = jf = 0  # number of summands of slope >= mu
    rank_e = rank_f = 0
    for mu in _thresholds(E, F):
        while ie < len(se) and se[ie][0] >= mu:
            rank_e += se[ie][0].denominator * se[ie][1]
            ie += 1
        while jf < len(sf) and sf[jf][0] >= mu:
            rank_f += sf[jf][0].denominator * sf[jf][1]
            jf += 1
        if rank_e < rank_f:
            return mu
        if strong and rank_e == rank_f and se[:ie] != sf[:jf]:
            return mu
    return None


def slopewise_dominates(E: Bundle, F: Bundle) -> bool:
    return dominance_failure(E, F, strong=False) is None


def strongly_slopewise_dominates(E: Bundle, F: Bundle) -> bool:
    return dominance_failure(E, F, strong=True) is None


def polygon_dominance_failure(E: Bundle, F: Bundle, strong: bool = False):
    """Polygon-side check; returns ``None`` or a short reason string.

    Condition (i): on each ``[i-1, i]`` with ``i <= rk(F)`` the slope of
    ``HN(F)`` is at most that of ``HN(E)``.  Condition (ii), strong only: at a
    common integer vertex ``j`` the slope of ``HN(F)`` on ``[j-1, j]`` is at
    most the slope of ``HN(E)`` on ``[j, j+1]`` unless the polygons agree on
    ``[0, j]``.  When ``j = rk(E)`` there is no ``[j, j+1]`` for ``HN(E)``; the
    slope there is taken as minus infinity, so the test fails unless the
    polygons agree up to ``j``.
    """
    se = unit_slopes(polygon_of(E))
    sf = unit_slopes(polygon_of(F))
    for i in range(1, len(sf) + 1):
        if i > len(se):
            return f"HN(E) ends at x={len(se)} before HN(F) (x={len(sf)})"
        if sf[i - 1] > se[i - 1]:
            return f"slope {sf[i - 1]} of HN(F) on [{i - 1},{i}] exceeds slope {se[i - 1]} of HN(E)"
    if not strong:
        return None
    PE, PF = polygon_of(E), polygon_of(F)
    for j in range(1, len(sf) + 1):
        if not (has_vertex_at(PE, j) and has_vertex_at(PF, j)):
            continue
        if se[:j] == sf[:j]:
            continue
        if j == len(se):
            return f"common vertex at x={j} is the end of HN(E) and the polygons differ on [0,{j}]"
        if sf[j - 1] > se[j]:
            return (
                f"at common vertex x={j}: slope {sf[j - 1]} of HN(F) on [{j - 1},{j}] "
                f"exceeds slope {se[j]} of HN(E) on [{j},{j + 1}]"
            )
    return None


def dominates_via_polygons(E: Bundle, F: Bundle, strong: bool = False) -> bool:
    return polygon_dominance_failure(E, F, strong) is None


def surj_exists(E: Bundle, F: Bundle) -> bool:
    """Whether some surjection ``E -> F`` exists."""
    return strongly_slopewise_dominates(dual(E), dual(F))


def inj_exists(E: Bundle, F: Bundle) -> bool:
    """Whether ``E`` embeds in ``F``: the ambient bundle must dominate the sub."""
    return slopewise_dominates(F, E)


def explain(E: Bundle, F: Bundle, strong: bool = False, via_polygons: bool = False) -> dict:
    """Verdict plus a human-readable reason, for the command line."""
    if via_polygons:
        reason = polygon_dominance_failure(E, F, strong)
        return {"dominates": reason is None, "reason": reason}
    mu = dominance_failure(E, F, strong)
    if mu is None:
        return {"dominates": True, "reason": None}
    re_, rf = truncate(E, mu, ">=").rank, truncate(F, mu, ">=").rank
    if re_ < rf:
        reason = f"rank(E^>={mu}) = {re_} < rank(F^>={mu}) = {rf}"
    else:
        reason = f"rank(E^>={mu}) = rank(F^>={mu}) = {re_} but the truncations differ"
    return {"dominates": False, "reason": reason, "mu": Fraction(mu)}
