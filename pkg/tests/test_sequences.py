from fractions import Fraction as Q
from math import gcd

import pytest

from conftest import enumeration
from ffbundles.bundles import ZERO, direct_sum, dual, stable
from ffbundles.cli import parse_bundle as B
from ffbundles.moduli import canonical_resolution
from ffbundles.sequences import (
    SlopeWindow,
    Verdict,
    check_nonsemistable_kernel_lemma,
    decide_extension,
    enumerate_bundles,
    extension_candidates,
    kernel_candidates,
    kernel_window,
    sweep_duality,
    sweep_kernel_lemma,
    sweep_step1,
    sweep_step2,
    sweep_strata,
    verify_key_inequality_extension,
    verify_key_inequality_kernel,
)


def names(vs):
    return sorted(str(V) for V in vs)


@pytest.mark.parametrize(
    "D, E, F, verdict",
    [
        ("O(-1)", "O(0)^2", "O(1)", Verdict.EXISTS),
        ("O(-1)", "O(1) + O(-1)", "O(1)", Verdict.EXISTS),
        ("O(-1)", "O(2) + O(-2)", "O(1)", Verdict.NOT_EXISTS),
        ("O(0)", "O(1/2)", "O(1)", Verdict.EXISTS),
        ("O(0)", "O(0)", "O(1)", Verdict.NOT_EXISTS),
    ],
)
def test_decide_examples(D, E, F, verdict):
    assert decide_extension(B(D), B(E), B(F)).verdict is verdict


def test_decide_flags():
    d = decide_extension(B("O(-1)"), B("O(2) + O(-2)"), B("O(1)"))
    assert (d.cond_dominance_kernel, d.cond_dominance_image, d.cond_polygon) == (False, False, False)
    d = decide_extension(B("O(0)"), B("O(0)"), B("O(1)"))
    assert not d.cond_polygon and "endpoint mismatch" in d.notes[0]
    d = decide_extension(B("O(1/2)"), B("O(1/2) + O(1/3)"), B("O(1/3)"))
    assert d.verdict is Verdict.UNKNOWN and not d.slope_gap_ok


def test_unknown_without_semistable_member():
    D, F = B("O(-1) + O(-2)"), B("O(1) + O(2)")
    d = decide_extension(D, D + F, F)
    assert d.verdict is Verdict.UNKNOWN
    assert d.hypothesis_semistable == "none"
    assert d.to_dict()["verdict"] == "Unknown"


def test_canonical_family_exists():
    for r in range(1, 6):
        for s in range(1, 6):
            if gcd(r, s) != 1:
                continue
            for m in (1, 2):
                mid, quo = canonical_resolution(Q(-s, r), m)
                assert decide_extension(stable(Q(-s, r), m), mid, quo).verdict is Verdict.EXISTS


def test_split_triples_pass_conditions():
    vs = enumeration(3, -1, 1)
    for D in vs:
        for F in vs:
            if D.rank + F.rank > 4 or not D.slopes[0] < F.slopes[-1]:
                continue
            d = decide_extension(D, D + F, F)
            assert d.cond_dominance_kernel and d.cond_dominance_image and d.cond_polygon
            semi = D.is_semistable() or F.is_semistable() or (D + F).is_semistable()
            assert d.verdict is (Verdict.EXISTS if semi else Verdict.UNKNOWN)


def test_enumeration_examples():
    w = SlopeWindow(-1, 1, 2)
    assert names(enumerate_bundles(2, 0, w)) == ["O(0)^2", "O(1) + O(-1)"]
    assert enumerate_bundles(1, 5, w) == []
    assert names(enumerate_bundles(2, 1, SlopeWindow(0, 1, 2))) == ["O(1) + O(0)", "O(1/2)"]


def test_enumeration_is_sorted_and_in_window():
    w = SlopeWindow(Q(-3, 2), 1, 5)
    vs = enumerate_bundles(5, -1, w)
    assert vs == sorted(vs, key=lambda V: V.sort_key())
    assert len(set(vs)) == len(vs)
    assert all(w.lo <= s <= w.hi for V in vs for s in V.slopes)
    assert all((V.rank, V.degree) == (5, -1) for V in vs)


def test_kernel_candidates_examples():
    assert kernel_candidates(B("O(0)^2"), B("O(1)")) == [B("O(-1)")]
    assert kernel_candidates(B("O(1/2)"), B("O(1)")) == [B("O(0)")]
    E = B("O(1) + O(-2/3)")
    assert kernel_candidates(E, E) == [ZERO]
    w = kernel_window(B("O(1) + O(0)"), 2, -1)
    assert (w.lo, w.hi) == (-2, 1)


def test_extension_candidates_examples():
    assert names(extension_candidates(B("O(0)"), B("O(1)"))) == ["O(1) + O(0)", "O(1/2)"]
    assert names(extension_candidates(B("O(-1)"), B("O(1)"))) == ["O(0)^2", "O(1) + O(-1)"]
    F = B("O(1/2) + O(-1)")
    assert extension_candidates(ZERO, F) == [F]


def test_step1_report_example():
    rep = verify_key_inequality_kernel(B("O(-1)"), B("O(0)^2"), B("O(1)"))
    assert rep.ok
    assert len(rep.rows) == 1
    row = rep.rows[0]
    assert (row.candidate, row.lhs, row.equality) == (B("O(-1)"), 0, True)


def test_step1_equality_away_from_d():
    # a second kernel type meets the bound: the surjection O(-2)^2 -> O(-1)
    # has kernel O(-3), so O(-1) + O(-2)^2 -> O(-1) can have kernel O(-1) + O(-3)
    rep = verify_key_inequality_kernel(B("O(-2)^2"), B("O(-1) + O(-2)^2"), B("O(-1)"))
    rows = {str(r.candidate): r for r in rep.rows}
    assert rows["O(-2)^2"].equality
    assert rows["O(-1) + O(-3)"].lhs == 0
    assert not rep.ok


def test_step2_report_example():
    rep = verify_key_inequality_extension(B("O(0)"), B("O(1/2)"), B("O(1)"))
    assert rep.ok
    rows = {str(r.candidate): r for r in rep.rows}
    assert (rows["O(1/2)"].lhs, rows["O(1/2)"].bound, rows["O(1/2)"].equality) == (1, 1, True)
    assert (rows["O(1) + O(0)"].lhs, rows["O(1) + O(0)"].equality) == (0, False)


def test_harness_preconditions_reported():
    rep = verify_key_inequality_kernel(B("O(-1) + O(-2)"), B("O(0)^3"), B("O(1)"))
    assert not rep.applicable and not rep.ok
    rep = verify_key_inequality_extension(B("O(-2)"), B("O(-1)^3"), B("O(0) + O(-1)"))
    assert not rep.applicable


def test_kernel_lemma_example():
    rep = check_nonsemistable_kernel_lemma(B("O(-1)^2"), B("O(1)"), B("O(0) + O(-2)"))
    assert rep.applicable and rep.ok


def test_small_sweeps():
    w = SlopeWindow(-1, 1, 3)
    for sweep in (sweep_step2, sweep_strata, sweep_duality, sweep_kernel_lemma):
        s = sweep(w)
        assert s.ok, s.violations[:1]
    s = sweep_step1(w)
    assert s.inequality_failures == 0
