"""Dimensions of the moduli of bundle maps and extensions.

Only the integer values are modelled.  The stratum formulas return their
value whether or not the stratum is actually nonempty; deciding emptiness is
left to :mod:`ffbundles.dominance` and :mod:`ffbundles.sequences`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bundles import Bundle, as_slope, dual, mu_max, mu_min, stable, tensor
from .degrees import aut_degree, hom_degree, pos_part_degree
from .errors import IncompatibleExtensionError, IncompatibleKernelError, SlopeOrderError


@dataclass(frozen=True)
class StratumDims:
    total: int
    stratum: int

    @property
    def gap(self) -> int:
        return self.total - self.stratum


def h0_vanishes(V: Bundle) -> bool:
    return all(s < 0 for s in V.slopes)


def h1_vanishes(V: Bundle) -> bool:
    return all(s >= 0 for s in V.slopes)


def dim_hom(E: Bundle, F: Bundle) -> int:
    return hom_degree(E, F)


def dim_aut(V: Bundle) -> int:
    return aut_degree(V)


def dim_h1(E: Bundle) -> int:
    if not E.is_zero() and mu_max(E) >= 0:
        raise SlopeOrderError(f"dim_h1 needs mu_max < 0, got {mu_max(E)}")
    return pos_part_degree(dual(E))


def canonical_resolution(lam, m: int = 1) -> tuple:
    """``(O^(r-d), O(1)^(-d))`` for the sequence ``0 -> O(lam)^m -> O^(r-d) -> O(1)^(-d) -> 0``.

    Here ``r`` and ``d`` are the rank and degree of ``O(lam)^m``.
    """
    lam = as_slope(lam)
    if lam >= 0:
        raise SlopeOrderError(f"canonical resolution needs a negative slope, got {lam}")
    if m < 1:
        raise ValueError("multiplicity must be positive")
    r, d = m * lam.denominator, m * lam.numerator
    return stable(0, r - d), stable(1, -d)


def dim_surj_stratum(E: Bundle, F: Bundle, K: Bundle) -> int:
    if K.rank != E.rank - F.rank or K.degree != E.degree - F.degree:
        raise IncompatibleKernelError(
            f"kernel {K} has (rank, degree) ({K.rank}, {K.degree}), expected "
            f"({E.rank - F.rank}, {E.degree - F.degree})"
        )
    return hom_degree(E, F) + hom_degree(K, E) - hom_degree(K, F) - hom_degree(K, K)


def dim_ext_stratum(D: Bundle, F: Bundle, E: Bundle) -> int:
    if E.rank != D.rank + F.rank or E.degree != D.degree + F.degree:
        raise IncompatibleExtensionError(
            f"middle term {E} has (rank, degree) ({E.rank}, {E.degree}), expected "
            f"({D.rank + F.rank}, {D.degree + F.degree})"
        )
    return hom_degree(D, E) + hom_degree(E, F) - hom_degree(D, F) - hom_degree(E, E)


def slope_gap(D: Bundle, F: Bundle) -> bool:
    """``mu_max(D) < mu_min(F)``, vacuously true if either bundle is zero."""
    if D.is_zero() or F.is_zero():
        return True
    return mu_max(D) < mu_min(F)


def dim_ext_total(F: Bundle, D: Bundle) -> int:
    """Dimension of all extensions of ``F`` by ``D``."""
    if not slope_gap(D, F):
        raise SlopeOrderError(f"dim_ext_total needs mu_max(D) < mu_min(F); got D = {D}, F = {F}")
    return hom_degree(D, F)


def surj_stratum_dims(E: Bundle, F: Bundle, K: Bundle) -> StratumDims:
    return StratumDims(total=dim_hom(E, F), stratum=dim_surj_stratum(E, F, K))


def ext_stratum_dims(D: Bundle, F: Bundle, E: Bundle) -> StratumDims:
    return StratumDims(total=dim_ext_total(F, D), stratum=dim_ext_stratum(D, F, E))


def ext_total_via_h1(F: Bundle, D: Bundle) -> int:
    """Same number as :func:`dim_ext_total`, routed through ``dim_h1(F^v (x) D)``."""
    return dim_h1(tensor(dual(F), D))

