from fractions import Fraction as Q
from math import gcd

import pytest

from conftest import enumeration
from ffbundles.bundles import ZERO, dual, mu_max, mu_min, stable, tensor
from ffbundles.cli import parse_bundle as B
from ffbundles.degrees import hom_degree
from ffbundles.errors import IncompatibleExtensionError, IncompatibleKernelError, SlopeOrderError
from ffbundles.moduli import (
    StratumDims,
    canonical_resolution,
    dim_aut,
    dim_ext_stratum,
    dim_ext_total,
    dim_h1,
    dim_hom,
    dim_surj_stratum,
    ext_stratum_dims,
    ext_total_via_h1,
    h0_vanishes,
    h1_vanishes,
    slope_gap,
    surj_stratum_dims,
)


def test_cohomology_vanishing():
    assert h0_vanishes(B("O(-1/2)")) and not h1_vanishes(B("O(-1/2)"))
    assert not h0_vanishes(B("O(0)")) and h1_vanishes(B("O(0)"))
    V = B("O(1) + O(-1)")
    assert not h0_vanishes(V) and not h1_vanishes(V)


def test_dim_hom_and_aut():
    assert dim_hom(B("O(0)"), B("O(1)")) == 1
    assert dim_hom(B("O(1/2)^3"), B("O(1/2)^3")) == 0
    assert dim_hom(B("O(1)"), B("O(-1)")) == 0
    assert dim_aut(B("O(1) + O(0)")) == 1
    assert dim_aut(B("O(1) + O(-1)")) == 2
    assert dim_aut(B("O(-4/3)")) == 0


@pytest.mark.parametrize("E, want", [("O(-1)", 1), ("O(-1/2)^2", 2), ("O(-2) + O(-3)", 5), ("0", 0)])
def test_dim_h1(E, want):
    assert dim_h1(B(E)) == want


def test_dim_h1_needs_negative_slopes():
    with pytest.raises(SlopeOrderError):
        dim_h1(B("O(0)"))


@pytest.mark.parametrize(
    "lam, m, middle, quotient",
    [(-1, 1, "O(0)^2", "O(1)"), (Q(-1, 2), 1, "O(0)^3", "O(1)"), (Q(-2, 3), 2, "O(0)^10", "O(1)^4")],
)
def test_canonical_resolution_examples(lam, m, middle, quotient):
    assert canonical_resolution(lam, m) == (B(middle), B(quotient))


def test_canonical_resolution_balances():
    for r in range(1, 7):
        for s in range(1, 7):
            if gcd(r, s) != 1:
                continue
            for m in (1, 2, 3):
                sub = stable(Q(-s, r), m)
                mid, quo = canonical_resolution(Q(-s, r), m)
                assert mid.rank == sub.rank + quo.rank
                assert mid.degree == sub.degree + quo.degree
    with pytest.raises(SlopeOrderError):
        canonical_resolution(0)


def test_surj_stratum_examples():
    assert dim_surj_stratum(B("O(0)^2"), B("O(1)"), B("O(-1)")) == 2
    E = B("O(1) + O(-1/2)")
    assert dim_surj_stratum(E, ZERO, E) == 0
    with pytest.raises(IncompatibleKernelError):
        dim_surj_stratum(B("O(0)^2"), B("O(1)"), B("O(0)"))
    assert surj_stratum_dims(B("O(0)^2"), B("O(1)"), B("O(-1)")) == StratumDims(2, 2)


def test_ext_stratum_examples():
    assert dim_ext_stratum(B("O(0)"), B("O(1)"), B("O(1/2)")) == 1
    assert dim_ext_stratum(B("O(-1)"), B("O(1)"), B("O(1) + O(-1)")) == 0
    assert dim_ext_stratum(ZERO, B("O(2/3)"), B("O(2/3)")) == 0
    with pytest.raises(IncompatibleExtensionError):
        dim_ext_stratum(B("O(0)"), B("O(1)"), B("O(0)^2"))
    dims = ext_stratum_dims(B("O(0)"), B("O(1)"), B("O(1) + O(0)"))
    assert dims == StratumDims(1, 0) and dims.gap == 1


@pytest.mark.parametrize("D, F, want", [("O(0)", "O(1)", 1), ("O(-1)", "O(1)", 2), ("O(-1)^2", "O(0)", 2)])
def test_dim_ext_total(D, F, want):
    D, F = B(D), B(F)
    assert dim_ext_total(F, D) == ext_total_via_h1(F, D) == want


def test_dim_ext_total_needs_gap():
    assert not slope_gap(B("O(1)"), B("O(1)"))
    assert slope_gap(ZERO, B("O(1)"))
    with pytest.raises(SlopeOrderError):
        dim_ext_total(B("O(0)"), B("O(1)"))


def test_h1_duality_on_enumeration():
    vs = enumeration(3, -2, 2)
    for D in vs:
        for F in vs:
            if mu_max(D) < mu_min(F):
                assert dim_h1(tensor(dual(F), D)) == hom_degree(D, F)
            assert dim_hom(D, F) >= 0
            if mu_max(F) < mu_min(D):
                assert dim_hom(D, F) == 0
