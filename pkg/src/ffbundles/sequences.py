"""Short exact sequences ``0 -> D -> E -> F -> 0``.

Holds the decision procedure, the finite enumeration of HN types, the two
candidate sets used in the dimension-counting argument (kernels of
surjections ``E -> F`` and middle terms of extensions of ``F`` by ``D``) and
the sweep harnesses that check the two key inequalities exhaustively on
small ranks.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from .bundles import ZERO, Bundle, as_slope, direct_sum, dual, format_slope, mu_max, mu_min, truncate
from .degrees import hom_degree
from .dominance import inj_exists, strongly_slopewise_dominates
from .moduli import slope_gap
from .polygons import agreement_intervals, lies_on_or_below, polygon_of, same_endpoints


class Verdict(str, enum.Enum):
    EXISTS = "Exists"
    NOT_EXISTS = "NotExists"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SlopeWindow:
    lo: Fraction
    hi: Fraction
    max_rank: int = 1

    def __post_init__(self):
        object.__setattr__(self, "lo", as_slope(self.lo))
        object.__setattr__(self, "hi", as_slope(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty window [{self.lo}, {self.hi}]")
        if self.max_rank < 1:
            raise ValueError("max_rank must be at least 1")


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    cond_dominance_kernel: bool
    cond_dominance_image: bool
    cond_polygon: bool
    hypothesis_semistable: str  # "D", "E", "F" or "none"
    slope_gap_ok: bool
    notes: tuple = ()

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "cond_dominance_kernel": self.cond_dominance_kernel,
            "cond_dominance_image": self.cond_dominance_image,
            "cond_polygon": self.cond_polygon,
            "hypothesis_semistable": self.hypothesis_semistable,
            "slope_gap_ok": self.slope_gap_ok,
            "notes": list(self.notes),
        }


def conditions(D: Bundle, E: Bundle, F: Bundle) -> tuple:
    """The three necessary conditions, in order."""
    cond_i = strongly_slopewise_dominates(E, D)
    cond_ii = strongly_slopewise_dominates(dual(E), dual(F))
    PE, PDF = polygon_of(E), polygon_of(direct_sum(D, F))
    cond_iii = same_endpoints(PE, PDF) and lies_on_or_below(PE, PDF)
    return cond_i, cond_ii, cond_iii


def decide_extension(D: Bundle, E: Bundle, F: Bundle) -> Decision:
    notes = []
    cond_i, cond_ii, cond_iii = conditions(D, E, F)
    mismatch = E.rank != D.rank + F.rank or E.degree != D.degree + F.degree
    if mismatch:
        notes.append(
            f"endpoint mismatch: HN(E) ends at ({E.rank}, {E.degree}), "
            f"HN(D+F) at ({D.rank + F.rank}, {D.degree + F.degree})"
        )
    semistable = next((name for name, V in (("D", D), ("E", E), ("F", F)) if V.is_semistable()), "none")
    gap = slope_gap(D, F)
    if not cond_i:
        notes.append("E does not strongly slopewise dominate D")
    if not cond_ii:
        notes.append("E^v does not strongly slopewise dominate F^v")
    if not cond_iii and not mismatch:
        notes.append("HN(E) is not on or below HN(D+F)")
    if not (cond_i and cond_ii and cond_iii):
        verdict = Verdict.NOT_EXISTS
    elif semistable != "none" and gap:
        verdict = Verdict.EXISTS
    else:
        verdict = Verdict.UNKNOWN
        if semistable == "none":
            notes.append("none of D, E, F is semistable")
        if not gap:
            notes.append("mu_max(D) < mu_min(F) fails")
    return Decision(verdict, cond_i, cond_ii, cond_iii, semistable, gap, tuple(notes))


# -- enumeration -------------------------------------------------------------


def _candidate_slopes(max_den: int, lo: Fraction, hi: Fraction, below: Optional[Fraction]):
    out = set()
    for b in range(1, max_den + 1):
        for a in range(math.ceil(lo * b), math.floor(hi * b) + 1):
            if math.gcd(a, b) == 1:
                s = Fraction(a, b)
                if below is None or s < below:
                    out.add(s)
    return sorted(out, reverse=True)


@lru_cache(maxsize=None)
def _paths(r: int, d: int, lo: Fraction, hi: Fraction, below: Optional[Fraction]) -> tuple:
    if r == 0:
        return ((),) if d == 0 else ()
    top = hi if below is None else min(hi, below)
    # every remaining unit slope lies in [lo, top]
    if d < lo * r or d > top * r:
        return ()
    out = []
    for s in _candidate_slopes(r, lo, hi, below):
        b = s.denominator
        for m in range(1, r // b + 1):
            for rest in _paths(r - m * b, d - m * s.numerator, lo, hi, s):
                out.append(((s, m),) + rest)
    return tuple(out)


def enumerate_bundles(r: int, d: int, window: SlopeWindow) -> list:
    """All HN types of rank ``r`` and degree ``d`` with slopes in the window.

    Sorted lexicographically by polygon vertex list.
    """
    if r < 0:
        return []
    found = [Bundle(p) for p in _paths(r, d, window.lo, window.hi, None)]
    return sorted(found, key=Bundle.sort_key)


def all_bundles(window: SlopeWindow, min_rank: int = 1) -> list:
    """Every bundle of rank ``min_rank..window.max_rank`` with slopes in the window."""
    out = []
    for r in range(min_rank, window.max_rank + 1):
        for d in range(math.ceil(window.lo * r), math.floor(window.hi * r) + 1):
            out.extend(enumerate_bundles(r, d, window))
    return out


# -- candidate sets ----------------------------------------------------------


def kernel_window(E: Bundle, rank_k: int, degree_k: int) -> Optional[SlopeWindow]:
    """Slopes a kernel of given rank/degree inside ``E`` can possibly have.

    Upper end: a subbundle's slopes never exceed ``mu_max(E)``.  Lower end:
    with every other unit slope at most ``mu_max(E)``, the smallest one is at
    least ``degree - mu_max(E) * (rank - 1)``.
    """
    if rank_k < 1 or E.is_zero():
        return None
    hi = mu_max(E)
    lo = degree_k - hi * (rank_k - 1)
    if lo > hi:
        return None
    return SlopeWindow(lo, hi, rank_k)


def kernel_candidates(E: Bundle, F: Bundle) -> list:
    rk, dk = E.rank - F.rank, E.degree - F.degree
    if rk < 0:
        return []
    if rk == 0:
        return [ZERO] if dk == 0 else []
    w = kernel_window(E, rk, dk)
    if w is None:
        return []
    return [K for K in enumerate_bundles(rk, dk, w) if inj_exists(K, E)]


def default_extension_window(D: Bundle, F: Bundle) -> Optional[SlopeWindow]:
    """``[mu_min(D+F), mu_max(D+F)]``: forced by the polygon condition alone."""
    S = direct_sum(D, F)
    if S.is_zero():
        return None
    return SlopeWindow(mu_min(S), mu_max(S), S.rank)


def passes_necessity(D: Bundle, V: Bundle, F: Bundle) -> bool:
    return all(conditions(D, V, F))


def extension_candidates(D: Bundle, F: Bundle, window: Optional[SlopeWindow] = None) -> list:
    S = direct_sum(D, F)
    if S.is_zero():
        return [ZERO]
    if window is None:
        window = default_extension_window(D, F)
    return [V for V in enumerate_bundles(S.rank, S.degree, window) if passes_necessity(D, V, F)]


# -- verification harnesses --------------------------------------------------


@dataclass(frozen=True)
class ReportRow:
    candidate: Bundle
    lhs: int
    bound: int
    equality: bool
    expected_equality: bool

    @property
    def inequality_ok(self) -> bool:
        return self.lhs <= self.bound

    @property
    def equality_ok(self) -> bool:
        return self.equality == self.expected_equality

    @property
    def passed(self) -> bool:
        return self.inequality_ok and self.equality_ok

    def to_dict(self) -> dict:
        return {
            "candidate": str(self.candidate),
            "lhs": self.lhs,
            "bound": self.bound,
            "equality": self.equality,
            "expected_equality": self.expected_equality,
            "inequality_ok": self.inequality_ok,
            "equality_ok": self.equality_ok,
            "pass": self.passed,
        }


@dataclass
class Report:
    name: str
    inputs: dict
    precondition_failures: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    checks: list = field(default_factory=list)  # (description, ok) pairs

    @property
    def applicable(self) -> bool:
        return not self.precondition_failures

    @property
    def violations(self) -> list:
        bad = [r.to_dict() for r in self.rows if not r.passed]
        bad += [{"check": desc} for desc, ok in self.checks if not ok]
        return bad

    @property
    def ok(self) -> bool:
        return self.applicable and not self.violations

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "inputs": self.inputs,
            "applicable": self.applicable,
            "precondition_failures": list(self.precondition_failures),
            "rows": [r.to_dict() for r in self.rows],
            "checks": [{"check": d, "pass": ok} for d, ok in self.checks],
            "violations": self.violations,
            "ok": self.ok,
        }


def _inputs(**bundles) -> dict:
    return {k: str(v) for k, v in bundles.items()}


def verify_key_inequality_kernel(D: Bundle, E: Bundle, F: Bundle) -> Report:
    """Kernel-side key inequality over every admissible kernel type ``K``.

    ``hom(K,E) - hom(K,F) - hom(K,K) <= 0`` with equality exactly at ``K = D``.
    """
    rep = Report("step1", _inputs(D=D, E=E, F=F))
    if D.is_zero() or not D.is_semistable():
        rep.precondition_failures.append("D must be nonzero and semistable")
    if not all(conditions(D, E, F)):
        rep.precondition_failures.append("the triple does not satisfy the three conditions")
    if not slope_gap(D, F):
        rep.precondition_failures.append("mu_max(D) < mu_min(F) fails")
    if rep.precondition_failures:
        return rep
    PE = polygon_of(E)
    for K in kernel_candidates(E, F):
        if not lies_on_or_below(PE, polygon_of(direct_sum(F, K))):
            continue
        lhs = hom_degree(K, E) - hom_degree(K, F) - hom_degree(K, K)
        rep.rows.append(ReportRow(K, lhs, 0, lhs == 0, K == D))
    rep.checks.append(("D occurs among the kernel candidates", any(r.candidate == D for r in rep.rows)))
    return rep


def verify_key_inequality_extension(D: Bundle, E: Bundle, F: Bundle, window: Optional[SlopeWindow] = None) -> Report:
    """Extension-side key inequality over every admissible middle term ``V``.

    ``hom(D,V) + hom(V,F) - hom(D,F) - hom(V,V) <= hom(D,F)`` with equality
    exactly at ``V = E``.
    """
    rep = Report("step2", _inputs(D=D, E=E, F=F))
    if E.is_zero() or not E.is_semistable():
        rep.precondition_failures.append("E must be nonzero and semistable")
    if E.rank != D.rank + F.rank or E.degree != D.degree + F.degree:
        rep.precondition_failures.append("rank/degree of E differ from those of D + F")
    elif not E.is_zero():
        mu = E.slope()
        if (not D.is_zero() and not mu_max(D) < mu) or (not F.is_zero() and not mu < mu_min(F)):
            rep.precondition_failures.append("mu_max(D) < mu(E) < mu_min(F) fails")
    if rep.precondition_failures:
        return rep
    bound = hom_degree(D, F)
    for V in extension_candidates(D, F, window):
        lhs = hom_degree(D, V) + hom_degree(V, F) - bound - hom_degree(V, V)
        rep.rows.append(ReportRow(V, lhs, bound, lhs == bound, V == E))
    rep.checks.append(("E occurs among the extension candidates", any(r.candidate == E for r in rep.rows)))
    return rep


def check_nonsemistable_kernel_lemma(D: Bundle, F: Bundle, K: Bundle) -> Report:
    """``HN(F+D) <= HN(F+K)``, agreeing exactly on ``[0, rk(F^{>=mu_max(K)})]``.

    The right endpoints always coincide as well; that isolated point is not
    part of the common piece being described and is excluded before comparing.
    """
    rep = Report("kernel-lemma", _inputs(D=D, F=F, K=K))
    if D.is_zero() or not D.is_semistable():
        rep.precondition_failures.append("D must be nonzero and semistable")
    if K.is_semistable():
        rep.precondition_failures.append("K must not be semistable")
    if not slope_gap(D, F):
        rep.precondition_failures.append("mu_max(D) < mu_min(F) fails")
    if D.rank != K.rank or D.degree != K.degree:
        rep.precondition_failures.append("D and K must have equal rank and degree")
    if rep.precondition_failures:
        return rep
    lower, upper = polygon_of(direct_sum(F, D)), polygon_of(direct_sum(F, K))
    rep.checks.append(("HN(F+D) lies on or below HN(F+K)", lies_on_or_below(lower, upper)))
    a = truncate(F, mu_max(K), ">=").rank
    w = upper.width
    common = [iv for iv in agreement_intervals(lower, upper) if iv != (w, w)]
    rep.checks.append((f"polygons agree exactly on [0, {a}]", common == [(0, a)]))
    return rep


# -- sweeps ------------------------------------------------------------------


@dataclass
class SweepSummary:
    name: str
    window: SlopeWindow
    triples: int = 0
    rows: int = 0
    skipped: int = 0  # triples outside the checked statement's hypotheses
    inequality_failures: int = 0
    equality_failures: int = 0
    violations: list = field(default_factory=list)

    def record(self, rep: "Report") -> None:
        self.triples += 1
        self.rows += len(rep.rows) + len(rep.checks)
        self.inequality_failures += sum(not r.inequality_ok for r in rep.rows)
        self.equality_failures += sum(not r.equality_ok for r in rep.rows)
        if not rep.ok:
            self.violations.append(rep.to_dict())

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "window": {
                "lo": format_slope(self.window.lo),
                "hi": format_slope(self.window.hi),
                "max_rank": self.window.max_rank,
            },
            "triples": self.triples,
            "rows": self.rows,
            "skipped": self.skipped,
            "inequality_failures": self.inequality_failures,
            "equality_failures": self.equality_failures,
            "violations": self.violations,
            "ok": self.ok,
        }


def split_pairs(window: SlopeWindow) -> Iterator:
    """Nonzero ``(D, F)`` in the window with ``mu_max(D) < mu_min(F)`` and
    ``rk(D) + rk(F) <= window.max_rank``."""
    bundles = all_bundles(window)
    for D in bundles:
        for F in bundles:
            if D.rank + F.rank <= window.max_rank and mu_max(D) < mu_min(F):
                yield D, F


def screened_triples(window: SlopeWindow, semistable: Optional[str] = None) -> Iterator:
    """``(D, E, F)`` meeting all theorem hypotheses and the three conditions.

    ``semistable`` restricts to triples where that member is semistable.
    """
    for D, F in split_pairs(window):
        if semistable == "D" and not D.is_semistable():
            continue
        if semistable == "F" and not F.is_semistable():
            continue
        for E in enumerate_bundles(D.rank + F.rank, D.degree + F.degree, window):
            if semistable == "E" and not E.is_semistable():
                continue
            if all(conditions(D, E, F)):
                yield D, E, F


def sweep_step1(window: SlopeWindow) -> SweepSummary:
    out = SweepSummary("step1", window)
    for D, E, F in screened_triples(window, "D"):
        rep = verify_key_inequality_kernel(D, E, F)
        if not rep.applicable:
            out.skipped += 1
            continue
        out.record(rep)
    return out


def sweep_step2(window: SlopeWindow) -> SweepSummary:
    out = SweepSummary("step2", window)
    for D, E, F in screened_triples(window, "E"):
        rep = verify_key_inequality_extension(D, E, F)
        if not rep.applicable:
            out.skipped += 1
            continue
        out.record(rep)
    return out


def sweep_kernel_lemma(window: SlopeWindow) -> SweepSummary:
    out = SweepSummary("kernel-lemma", window)
    for D, F in split_pairs(window):
        if not D.is_semistable():
            continue
        for K in enumerate_bundles(D.rank, D.degree, window):
            if K.is_semistable():
                continue
            rep = check_nonsemistable_kernel_lemma(D, F, K)
            if not rep.applicable:
                out.skipped += 1
                continue
            out.record(rep)
    return out


def sweep_strata(window: SlopeWindow) -> SweepSummary:
    """Stratum formula equalities at ``K = D`` (D semistable) and ``V = E`` (E semistable)."""
    from .moduli import dim_ext_stratum, dim_ext_total, dim_hom, dim_surj_stratum

    out = SweepSummary("strata", window)
    for D, E, F in screened_triples(window):
        checks = []
        if D.is_semistable():
            checks.append(("surj", dim_surj_stratum(E, F, D), dim_hom(E, F)))
        if E.is_semistable():
            checks.append(("ext", dim_ext_stratum(D, F, E), dim_ext_total(F, D)))
        if not checks:
            continue
        out.triples += 1
        for kind, got, want in checks:
            out.rows += 1
            if got != want:
                out.violations.append({"kind": kind, **_inputs(D=D, E=E, F=F), "stratum": got, "total": want})
    return out


def sweep_duality(window: SlopeWindow) -> SweepSummary:
    """``verdict(D,E,F) == verdict(F^v,E^v,D^v)`` over every rank-compatible triple,
    zero ends included."""
    out = SweepSummary("duality", window)
    bundles = all_bundles(window, min_rank=0)
    for D in bundles:
        for F in bundles:
            if D.rank + F.rank > window.max_rank:
                continue
            for E in enumerate_bundles(D.rank + F.rank, D.degree + F.degree, window):
                out.triples += 1
                a = decide_extension(D, E, F).verdict
                b = decide_extension(dual(F), dual(E), dual(D)).verdict
                out.rows += 1
                if a != b:
                    out.violations.append({**_inputs(D=D, E=E, F=F), "verdict": a.value, "dual_verdict": b.value})
    return out


SWEEPS = {
    "step1": sweep_step1,
    "step2": sweep_step2,
    "kernel-lemma": sweep_kernel_lemma,
    "strata": sweep_strata,
    "duality": sweep_duality,
}
