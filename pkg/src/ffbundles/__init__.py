"""Exact Harder-Narasimhan calculus for vector bundles on the Fargues-Fontaine curve."""

from .bundles import (
    ZERO,
    Bundle,
    HNVector,
    direct_sum,
    dual,
    hn_vectors,
    mu_max,
    mu_min,
    stable,
    tensor,
    truncate,
    twist,
)
from .polygons import HNPolygon, bundle_of, polygon_of
from .sequences import Decision, SlopeWindow, Verdict, decide_extension

__version__ = "0.1.0"
