from fractions import Fraction as Q

import pytest
from hypothesis import given

from conftest import bundles, enumeration
from ffbundles.bundles import ZERO, dual
from ffbundles.cli import parse_bundle as B
from ffbundles.dominance import (
    dominance_failure,
    dominates_via_polygons,
    explain,
    inj_exists,
    polygon_dominance_failure,
    slopewise_dominates,
    strongly_slopewise_dominates,
    surj_exists,
)


def test_slopewise_examples():
    assert slopewise_dominates(B("O(0)^2"), B("O(-1)"))
    assert slopewise_dominates(B("O(1/2) + O(-3)"), B("O(1/2) + O(-3)"))
    assert not slopewise_dominates(B("O(0)"), B("O(1)"))
    assert dominance_failure(B("O(0)"), B("O(1)")) == 1


def test_strong_examples():
    E, F = B("O(1) + O(-1)"), B("O(1) + O(-2)")
    assert slopewise_dominates(E, F)
    assert not strongly_slopewise_dominates(E, F)
    assert dominance_failure(E, F, strong=True) == -2
    assert strongly_slopewise_dominates(E, E)


def test_polygon_examples():
    E, F = B("O(1/2)^2"), B("O(0) + O(-1)")
    assert dominates_via_polygons(E, F, strong=True)
    assert strongly_slopewise_dominates(E, F)
    assert dominates_via_polygons(E, ZERO, strong=True)


def test_polygon_vertex_at_end_of_dominating_polygon():
    # common vertex at x = rk(E): only equal polygons survive the strong test
    E, F = B("O(1) + O(0)"), B("O(0)^2")
    assert slopewise_dominates(E, F)
    assert not strongly_slopewise_dominates(E, F)
    assert not dominates_via_polygons(E, F, strong=True)
    assert "end of HN(E)" in polygon_dominance_failure(E, F, strong=True)


def test_surj_and_inj():
    assert surj_exists(B("O(0)^2"), B("O(1)"))
    assert surj_exists(B("O(1/3) + O(-2)"), B("O(1/3) + O(-2)"))
    assert not surj_exists(B("O(0)"), B("O(0)^2"))
    assert inj_exists(B("O(-1)"), B("O(0)^2"))
    assert inj_exists(B("O(2/5)"), B("O(2/5)"))
    assert not inj_exists(B("O(1)"), B("O(0)^3"))


def test_explain():
    out = explain(B("O(0)"), B("O(1)"))
    assert out["dominates"] is False and out["mu"] == 1
    assert explain(B("O(1)"), B("O(0)"))["dominates"] is True
    assert "exceeds" in explain(B("O(0)"), B("O(1)"), via_polygons=True)["reason"]


# -- properties --------------------------------------------------------------


@given(bundles, bundles)
def test_polygon_form_agrees_random(E, F):
    for strong in (False, True):
        assert dominates_via_polygons(E, F, strong) == (dominance_failure(E, F, strong) is None)


def test_order_properties_on_enumeration():
    vs = enumeration(3, -1, 1)
    dom = {(E, F): slopewise_dominates(E, F) for E in vs for F in vs}
    strong = {(E, F): strongly_slopewise_dominates(E, F) for E in vs for F in vs}
    for E in vs:
        assert dom[E, E] and strong[E, E]
        for F in vs:
            if strong[E, F]:
                assert dom[E, F]
            if strong[E, F] and strong[F, E] and (E.rank, E.degree) == (F.rank, F.degree):
                assert E == F
            if not dom[E, F]:
                continue
            for G in vs:
                if dom[F, G]:
                    assert dom[E, G]


def test_surj_consequences_on_enumeration():
    vs = enumeration(3, -1, 1)
    for E in vs:
        for F in vs:
            if surj_exists(E, F):
                assert E.rank >= F.rank
                assert slopewise_dominates(dual(E), dual(F))
