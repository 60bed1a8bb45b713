"""Vector bundles on the Fargues-Fontaine curve, up to isomorphism.

A bundle is stored as its Harder-Narasimhan type: a tuple of
``(slope, multiplicity)`` pairs with strictly decreasing slopes, each pair
standing for ``O(slope)^multiplicity``.  ``O(s/r)`` (lowest terms) is the
stable bundle of rank ``r`` and degree ``s``.  Slopes are
:class:`fractions.Fraction` throughout; nothing here touches floats.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import UndefinedSlopeError

Slope = Fraction


def as_slope(value) -> Fraction:
    """Coerce an int, Fraction or ``"s/r"`` string to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def format_slope(q: Fraction) -> str:
    """Canonical text for a rational: ``"s"`` for integers, else ``"s/r"``."""
    q = as_slope(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class HNVector(NamedTuple):
    """One segment ``(rank, degree)`` of an HN polygon."""

    rank: int
    degree: int

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)

    def cross(self, other: "HNVector") -> int:
        return self.rank * other.degree - self.degree * other.rank


@dataclass(frozen=True)
class Bundle:
    summands: tuple = ()

    def __post_init__(self):
        prev = None
        for slope, mult in self.summands:
            if not isinstance(slope, Fraction):
                raise TypeError(f"slope must be a Fraction, got {slope!r}")
            if not isinstance(mult, int) or mult < 1:
                raise ValueError(f"multiplicity must be a positive int, got {mult!r}")
            if prev is not None and not slope < prev:
                raise ValueError("slopes must be strictly decreasing")
            prev = slope

    @classmethod
    def from_pairs(cls, pairs: Iterable) -> "Bundle":
        """Normal form of an arbitrary list of ``(slope, multiplicity)`` pairs.

        Equal slopes are merged; zero multiplicities are dropped.
        """
        merged = defaultdict(int)
        for slope, mult in pairs:
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult}")
            merged[as_slope(slope)] += mult
        return cls(tuple((s, m) for s, m in sorted(merged.items(), reverse=True) if m))

    @property
    def rank(self) -> int:
        return sum(m * s.denominator for s, m in self.summands)

    @property
    def degree(self) -> int:
        return sum(m * s.numerator for s, m in self.summands)

    @property
    def slopes(self) -> tuple:
        return tuple(s for s, _ in self.summands)

    def slope(self) -> Fraction:
        if not self.summands:
            raise UndefinedSlopeError("the zero bundle has no slope")
        return Fraction(self.degree, self.rank)

    def is_zero(self) -> bool:
        return not self.summands

    def is_semistable(self) -> bool:
        # the zero bundle counts as semistable (vacuously)
        return len(self.summands) <= 1

    def __add__(self, other: "Bundle") -> "Bundle":
        return direct_sum(self, other)

    def __mul__(self, other: "Bundle") -> "Bundle":
        return tensor(self, other)

    def __str__(self) -> str:
        if not self.summands:
            return "0"
        terms = []
        for s, m in self.summands:
            term = f"O({format_slope(s)})"
            if m > 1:
                term += f"^{m}"
            terms.append(term)
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Bundle({str(self)!r})"

    def sort_key(self) -> tuple:
        """Deterministic ordering: lexicographic on polygon vertex lists."""
        x = y = 0
        key = []
        for v in hn_vectors(self):
            x += v.rank
            y += v.degree
            key.append((x, y))
        return tuple(key)


ZERO = Bundle()


def stable(slope, mult: int = 1) -> Bundle:
    """``O(slope)^mult``."""
    if mult == 0:
        return ZERO
    return Bundle(((as_slope(slope), mult),))


def rank(V: Bundle) -> int:
    return V.rank


def degree(V: Bundle) -> int:
    return V.degree


def slope(V: Bundle) -> Fraction:
    return V.slope()


def dual(V: Bundle) -> Bundle:
    return Bundle(tuple((-s, m) for s, m in reversed(V.summands)))


def direct_sum(*bundles: Bundle) -> Bundle:
    return Bundle.from_pairs(p for V in bundles for p in V.summands)


def tensor(V: Bundle, W: Bundle) -> Bundle:
    """Bilinear extension of ``O(a) (x) O(b) = O(a+b)^(r_a r_b / r_{a+b})``."""
    pairs = []
    for a, m in V.summands:
        for b, n in W.summands:
            c = a + b
            copies = a.denominator * b.denominator // c.denominator
            pairs.append((c, m * n * copies))
    return Bundle.from_pairs(pairs)


def twist(V: Bundle, lam) -> Bundle:
    return tensor(V, stable(lam))


_COMPARE = {
    ">=": lambda s, mu: s >= mu,
    ">": lambda s, mu: s > mu,
    "<=": lambda s, mu: s <= mu,
    "<": lambda s, mu: s < mu,
}


def truncate(V: Bundle, mu, mode: str = ">=") -> Bundle:
    """Direct summand of ``V`` made of the HN pieces whose slope satisfies ``mode``."""
    try:
        keep = _COMPARE[mode]
    except KeyError:
        raise ValueError(f"unknown truncation mode {mode!r}") from None
    mu = as_slope(mu)
    return Bundle(tuple((s, m) for s, m in V.summands if keep(s, mu)))


def mu_max(V: Bundle) -> Fraction:
    if not V.summands:
        raise UndefinedSlopeError("mu_max of the zero bundle")
    return V.summands[0][0]


def mu_min(V: Bundle) -> Fraction:
    if not V.summands:
        raise UndefinedSlopeError("mu_min of the zero bundle")
    return V.summands[-1][0]


def hn_vectors(V: Bundle) -> list:
    return [HNVector(m * s.denominator, m * s.numerator) for s, m in V.summands]
