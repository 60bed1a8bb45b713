"""Command-line front end.

Every subcommand prints JSON (sorted keys, rationals as ``"s"``/``"s/r"``
strings) on stdout, except ``plot --ascii``, which prints the picture.
Exit status: 0 ok, 1 domain error, 2 parse error, 3 verification violation.
Failures print one line ``error: <kind>: <message>`` on stderr.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import degrees, dominance, moduli, sequences
from .bundles import ZERO, Bundle, as_slope, direct_sum, dual, format_slope, hn_vectors, mu_max, mu_min, tensor, twist
from .errors import BundleSyntaxError, HNError
from .polygons import polygon_of
from .render import to_ascii, to_svg

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_VIOLATION = 0, 1, 2, 3

_TERM = re.compile(r"O\(([+-]?\d+)(?:/(\d+))?\)(?:\^(\d+))?")


def parse_bundle(text: str) -> Bundle:
    """Parse ``O(s/r)^m + ...`` (whitespace-insensitive); ``"0"`` is the zero bundle.

    Column numbers in errors refer to the original text.
    """
    cols = [i for i, ch in enumerate(text) if not ch.isspace()]
    s = "".join(text[i] for i in cols)

    def col(k):
        return cols[k] if k < len(cols) else len(text)

    if s == "0":
        return ZERO
    if not s:
        raise BundleSyntaxError("empty bundle text", 0)
    pairs, pos = [], 0
    while True:
        m = _TERM.match(s, pos)
        if m is None:
            raise BundleSyntaxError(f"expected a term O(s[/r])[^m], got {s[pos:pos + 8]!r}", col(pos))
        num, den, mult = m.group(1), m.group(2), m.group(3)
        if den is not None and int(den) == 0:
            raise BundleSyntaxError("zero denominator", col(m.start(2)))
        if mult is not None and int(mult) == 0:
            raise BundleSyntaxError("multiplicity must be positive", col(m.start(3)))
        pairs.append((Fraction(int(num), int(den or 1)), int(mult or 1)))
        pos = m.end()
        if pos == len(s):
            break
        if s[pos] != "+":
            raise BundleSyntaxError(f"expected '+' or end of input, got {s[pos]!r}", col(pos))
        pos += 1
    return Bundle.from_pairs(pairs)


def _rat(q) -> str:
    return format_slope(q)


def bundle_json(V: Bundle) -> dict:
    out = {
        "bundle": str(V),
        "summands": [{"slope": _rat(s), "multiplicity": m} for s, m in V.summands],
        "rank": V.rank,
        "degree": V.degree,
    }
    return out


def _info(V: Bundle) -> dict:
    out = bundle_json(V)
    zero = V.is_zero()
    out.update(
        slope=None if zero else _rat(V.slope()),
        mu_max=None if zero else _rat(mu_max(V)),
        mu_min=None if zero else _rat(mu_min(V)),
        semistable=V.is_semistable(),
        hn_vectors=[[v.rank, v.degree] for v in hn_vectors(V)],
        polygon=[[x, y] for x, y in polygon_of(V).vertices],
    )
    return out


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return _rat(obj)
    if isinstance(obj, Bundle):
        return str(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def emit(payload, stream=None) -> None:
    stream = stream or sys.stdout
    stream.write(json.dumps(payload, sort_keys=True, indent=2, default=_jsonable) + "\n")


class Violation(Exception):
    """Raised to turn a failed verification into exit status 3 after output."""


# -- subcommands -------------------------------------------------------------


def cmd_info(a):
    return _info(a.bundle)


def cmd_op(a):
    if a.op == "dual":
        (V,) = _arity(a.bundles, 1, "dual")
        result = dual(V)
    elif a.op == "sum":
        result = direct_sum(*a.bundles) if a.bundles else ZERO
    elif a.op == "tensor":
        V, W = _arity(a.bundles, 2, "tensor")
        result = tensor(V, W)
    else:
        (V,) = _arity(a.bundles, 1, "twist")
        if a.by is None:
            raise HNError("twist needs --by <slope>")
        result = twist(V, a.by)
    return bundle_json(result)


def _arity(bundles, n, name):
    if len(bundles) != n:
        raise HNError(f"{name} takes {n} bundle(s), got {len(bundles)}")
    return bundles


def cmd_deg(a):
    if a.kind == "hom":
        E, F = _arity(a.bundles, 2, "deg hom")
        value = degrees.hom_degree(E, F)
        oracle = degrees.hom_degree_oracle(E, F) if a.oracle else None
    elif a.kind == "aut":
        (V,) = _arity(a.bundles, 1, "deg aut")
        value = degrees.aut_degree(V)
        oracle = degrees.hom_degree_oracle(V, V) if a.oracle else None
    else:
        (V,) = _arity(a.bundles, 1, "deg pos")
        value = degrees.pos_part_degree(V)
        oracle = None
    out = {"kind": a.kind, "value": value}
    if a.oracle:
        if oracle is not None and oracle != value:
            out["oracle"] = oracle
            emit(out)
            raise Violation(f"fast value {value} disagrees with oracle {oracle}")
        out["oracle"] = value if oracle is None else oracle
    return out


def cmd_dominates(a):
    out = dominance.explain(a.E, a.F, strong=a.strong, via_polygons=a.via_polygons)
    out.update(E=str(a.E), F=str(a.F), strong=a.strong, via_polygons=a.via_polygons)
    return out


_DIMS = {
    "hom": (2, lambda E, F: moduli.dim_hom(E, F)),
    "aut": (1, lambda V: moduli.dim_aut(V)),
    "h1": (1, lambda V: moduli.dim_h1(V)),
    "surj-stratum": (3, lambda E, F, K: moduli.dim_surj_stratum(E, F, K)),
    "ext-stratum": (3, lambda D, F, E: moduli.dim_ext_stratum(D, F, E)),
    "ext-total": (2, lambda F, D: moduli.dim_ext_total(F, D)),
}


def cmd_dims(a):
    n, fn = _DIMS[a.kind]
    args = _arity(a.bundles, n, f"dims {a.kind}")
    return {"kind": a.kind, "args": [str(V) for V in args], "value": fn(*args)}


def cmd_decide(a):
    out = sequences.decide_extension(a.D, a.E, a.F).to_dict()
    out.update(D=str(a.D), E=str(a.E), F=str(a.F))
    return out


def cmd_enumerate(a):
    if a.r < 0:
        raise HNError("rank must be nonnegative")
    w = sequences.SlopeWindow(a.lo, a.hi, max(a.r, 1))
    found = [ZERO] if a.r == 0 and a.d == 0 else sequences.enumerate_bundles(a.r, a.d, w)
    return {
        "rank": a.r,
        "degree": a.d,
        "window": {"lo": _rat(w.lo), "hi": _rat(w.hi)},
        "count": len(found),
        "bundles": [str(V) for V in found],
    }


def cmd_verify(a):
    if a.what == "sweep":
        w = sequences.SlopeWindow(a.lo, a.hi, a.max_rank)
        names = a.only.split(",") if a.only else list(sequences.SWEEPS)
        unknown = [n for n in names if n not in sequences.SWEEPS]
        if unknown:
            raise HNError(f"unknown sweep(s): {', '.join(unknown)}")
        summaries = {n: sequences.SWEEPS[n](w) for n in names}
        out = {
            "sweeps": {n: s.to_dict() for n, s in summaries.items()},
            "violations": sum(len(s.violations) for s in summaries.values()),
        }
        out["ok"] = out["violations"] == 0
        return out, EXIT_OK if out["ok"] else EXIT_VIOLATION
    if a.what == "step1":
        D, E, F = _arity(a.bundles, 3, "verify step1")
        rep = sequences.verify_key_inequality_kernel(D, E, F)
    elif a.what == "step2":
        D, E, F = _arity(a.bundles, 3, "verify step2")
        w = None
        if a.lo is not None or a.hi is not None:
            base = sequences.default_extension_window(D, F)
            lo = as_slope(a.lo) if a.lo is not None else base.lo
            hi = as_slope(a.hi) if a.hi is not None else base.hi
            w = sequences.SlopeWindow(lo, hi, D.rank + F.rank)
        rep = sequences.verify_key_inequality_extension(D, E, F, w)
    else:
        D, F, K = _arity(a.bundles, 3, "verify kernel-lemma")
        rep = sequences.check_nonsemistable_kernel_lemma(D, F, K)
    # a triple outside the statement's hypotheses is a domain error, not a violation
    if not rep.applicable:
        return rep.to_dict(), EXIT_DOMAIN
    return rep.to_dict(), EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_plot(a):
    polys = [polygon_of(V) for V in a.bundles]
    labels = [str(V) for V in a.bundles]
    if a.ascii:
        sys.stdout.write(to_ascii(polys, labels))
        return None
    Path(a.svg).write_text(to_svg(polys, labels))
    return {"svg": a.svg, "bundles": labels, "polygons": [[list(v) for v in P.vertices] for P in polys]}


# -- argument parsing --------------------------------------------------------


class _ParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ParseError(message)


def _bundle_arg(text):
    return parse_bundle(text)


def _slope_arg(text):
    try:
        return as_slope(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ffbundles", description="HN polygon calculus for bundles on the Fargues-Fontaine curve.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("info", help="rank, degree, slopes and polygon of a bundle")
    s.add_argument("bundle", type=_bundle_arg)
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("op", help="bundle algebra")
    s.add_argument("op", choices=["dual", "sum", "tensor", "twist"])
    s.add_argument("bundles", nargs="*", type=_bundle_arg)
    s.add_argument("--by", type=_slope_arg, help="twist slope")
    s.set_defaults(func=cmd_op)

    s = sub.add_parser("deg", help="positive-part degrees")
    s.add_argument("kind", choices=["hom", "aut", "pos"])
    s.add_argument("bundles", nargs="+", type=_bundle_arg)
    s.add_argument("--oracle", action="store_true", help="also expand the tensor product and compare")
    s.set_defaults(func=cmd_deg)

    s = sub.add_parser("dominates", help="does E slopewise dominate F")
    s.add_argument("E", type=_bundle_arg)
    s.add_argument("F", type=_bundle_arg)
    s.add_argument("--strong", action="store_true")
    s.add_argument("--via-polygons", action="store_true")
    s.set_defaults(func=cmd_dominates)

    s = sub.add_parser("dims", help="moduli dimensions")
    s.add_argument("kind", choices=list(_DIMS))
    s.add_argument("bundles", nargs="+", type=_bundle_arg)
    s.set_defaults(func=cmd_dims)

    s = sub.add_parser("decide", help="is there a short exact sequence 0 -> D -> E -> F -> 0")
    s.add_argument("D", type=_bundle_arg)
    s.add_argument("E", type=_bundle_arg)
    s.add_argument("F", type=_bundle_arg)
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("enumerate", help="HN types of given rank and degree")
    s.add_argument("r", type=int)
    s.add_argument("d", type=int)
    s.add_argument("--lo", type=_slope_arg, required=True)
    s.add_argument("--hi", type=_slope_arg, required=True)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify", help="key-inequality harnesses and sweeps")
    s.add_argument("what", choices=["step1", "step2", "kernel-lemma", "sweep"])
    s.add_argument("bundles", nargs="*", type=_bundle_arg)
    s.add_argument("--max-rank", type=int, default=4)
    s.add_argument("--lo", type=_slope_arg)
    s.add_argument("--hi", type=_slope_arg)
    s.add_argument("--only", help="comma-separated sweep names: " + ",".join(sequences.SWEEPS))
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("plot", help="draw HN polygons")
    s.add_argument("bundles", nargs="+", type=_bundle_arg)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--svg", metavar="OUT")
    g.add_argument("--ascii", action="store_true")
    s.set_defaults(func=cmd_plot)
    return p


def _fail(kind: str, message: str, code: int) -> int:
    sys.stderr.write(f"error: {kind}: {' '.join(str(message).split())}\n")
    return code


_VALUE_FLAGS = ("--by", "--lo", "--hi")


def _glue_negative_values(argv):
    """``--lo -1/2`` -> ``--lo=-1/2``; argparse would read ``-1/2`` as an option."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        a = parser.parse_args(argv)
    except BundleSyntaxError as e:
        return _fail(e.kind, e, EXIT_PARSE)
    except _ParseError as e:
        return _fail("usage", e, EXIT_PARSE)
    if a.command == "verify" and a.what == "sweep":
        if a.lo is None or a.hi is None:
            return _fail("usage", "verify sweep needs --lo and --hi", EXIT_PARSE)
    try:
        result = a.func(a)
        code = EXIT_OK
        if isinstance(result, tuple):
            result, code = result
        if result is not None:
            emit(result)
        return code
    except Violation as e:
        return _fail("violation", e, EXIT_VIOLATION)
    except BundleSyntaxError as e:
        return _fail(e.kind, e, EXIT_PARSE)
    except (HNError, ValueError) as e:
        kind = getattr(e, "kind", "domain")
        return _fail(kind, e, EXIT_DOMAIN)


if __name__ == "__main__":
    sys.exit(main())
