"""Command-line front end.

Output is one JSON object per invocation with ``"schema": 1``.  Exit codes:
0 success, 1 negative verdict, 2 usage or input error, 3 a proven statement
failed a check.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import autmap, sured, tamecert, wapprox, worder
from .autmap import AutWord
from .coeff import parse_ring
from .errors import PolydegError, TheoremViolated
from .harness import SUITES, run_suite
from .parse import parse_gamma, parse_gamma_list, parse_polynomial, parse_vectors, parse_weight

SCHEMA = 1
OK, NEGATIVE, USAGE, VIOLATED = 0, 1, 2, 3


class UsageError(Exception):
    pass


# input helpers

def _text_arg(value, stdin):
    """Inline text, ``@file`` or ``-`` for stdin."""
    if value is None:
        return None
    if value == "-":
        return stdin.read()
    if value.startswith("@"):
        return Path(value[1:]).read_text()
    return value


def _json_arg(value, stdin, what):
    text = _text_arg(value, stdin)
    if text is None:
        raise UsageError(f"--{what} is required")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--{what}: invalid JSON ({exc})") from exc


def _weight(args):
    if args.w is None:
        raise UsageError("--w is required")
    return parse_weight(args.w, args.rank)


def _ring(args):
    return parse_ring(args.ring)


def _map_from_json(data, nvars, ring):
    """A map is an AutWord JSON list, a list of polynomial strings, or {"word": ...} / {"tuple": ...}."""
    if isinstance(data, dict):
        if "word" in data:
            return AutWord.from_json(data["word"], nvars, ring)
        if "tuple" in data:
            data = data["tuple"]
        else:
            raise UsageError("map object needs a 'word' or 'tuple' key")
    if not isinstance(data, list):
        raise UsageError("map must be a JSON list")
    if all(isinstance(x, str) for x in data):
        T = tuple(parse_polynomial(x, nvars, ring) for x in data)
        if len(T) != nvars:
            raise UsageError(f"map has {len(T)} components, expected {nvars}")
        return T
    return AutWord.from_json(data, nvars, ring)


def _tuple_of(m):
    return m.tuple if isinstance(m, AutWord) else m


def _map(args, stdin, nvars, ring, key="map"):
    return _map_from_json(_json_arg(getattr(args, key), stdin, key), nvars, ring)


def _polys(args, stdin, nvars, ring):
    text = _text_arg(args.polys, stdin)
    if text is None:
        raise UsageError("--polys is required")
    text = text.strip()
    items = json.loads(text) if text.startswith("[") else [t for t in text.split(";") if t.strip()]
    return [parse_polynomial(t, nvars, ring) for t in items]


def _deg(d):
    return None if d is worder.NEG_INF else list(d)


# commands

def cmd_deg(args, stdin):
    """w-degree of one polynomial."""
    w, ring = _weight(args), _ring(args)
    f = parse_polynomial(_text_arg(args.poly, stdin) or "", len(w), ring)
    return {"deg": _deg(worder.deg_w(f, w))}, OK


def cmd_mdeg(args, stdin):
    """Multidegree of a map."""
    w, ring = _weight(args), _ring(args)
    T = _tuple_of(_map(args, stdin, len(w), ring))
    return worder.mdeg_w(T, w).to_json(), OK


def cmd_initial(args, stdin):
    """Initial form of a polynomial or a map."""
    w, ring = _weight(args), _ring(args)
    if args.poly is not None:
        f = parse_polynomial(_text_arg(args.poly, stdin), len(w), ring)
        return {"initial": str(worder.initial_form(f, w))}, OK
    T = _tuple_of(_map(args, stdin, len(w), ring))
    return {"initial": [str(f) for f in worder.initial_tuple(T, w)]}, OK


def cmd_wedge(args, stdin):
    """Degree of the wedge of differentials."""
    w, ring = _weight(args), _ring(args)
    fs = _polys(args, stdin, len(w), ring)
    return {"wedge": _deg(worder.wedge_deg(fs, w))}, OK


def cmd_approx(args, stdin):
    """Integer weight with the same order on a support set."""
    w = parse_weight(args.weight or args.w or "", args.rank)
    text = _text_arg(args.support, stdin)
    if text is None:
        raise UsageError("--support is required")
    S = parse_vectors(text)
    wit = wapprox.approximate_weight(S, w, preserve_signs=args.preserve_signs)
    table = []
    for a in wit.S:
        table.append({"a": list(a), "w": list(w.dot(a)), "v": sum(x * y for x, y in zip(a, wit.v))})
    return {"v": list(wit.v), "verified": wit.verify(), "pairs": table}, OK


def cmd_monomialize(args, stdin):
    """Weight whose initial forms are single terms."""
    nvars = args.nvars
    fs = _polys(args, stdin, nvars, _ring(args))
    v = wapprox.monomializing_weight(fs)
    return {"v": [x[0] for x in v], "initial": [str(worder.initial_form(f, v)) for f in fs]}, OK


def cmd_refine(args, stdin):
    """One weight reproducing iterated initial forms."""
    ws = [parse_weight(x, args.rank) for x in _json_arg(args.weights, stdin, "weights")]
    fs = _polys(args, stdin, len(ws[0]), _ring(args))
    v = wapprox.refine_weight(ws, fs)
    agree = all(wapprox.iterated_initial_form(f, ws) == worder.initial_form(f, v) for f in fs)
    if not agree:
        raise TheoremViolated("refined weight does not reproduce the iterated initial forms")
    return {"v": [x[0] for x in v], "initial": [str(worder.initial_form(f, v)) for f in fs]}, OK


def cmd_semigroup(args, stdin):
    """Semigroup membership with coefficients."""
    if args.d is None or args.gens is None:
        raise UsageError("--d and --gens are required")
    d = parse_gamma(args.d, args.rank)
    gens = parse_gamma_list(args.gens, args.rank)
    coeffs = wapprox.semigroup_member(d, gens)
    if coeffs is None:
        return {"member": False}, NEGATIVE
    return {"member": True, "coeffs": list(coeffs)}, OK


def cmd_cw(args, stdin):
    """Coordinate of a given degree."""
    w, ring = _weight(args), _ring(args)
    if args.d is None:
        raise UsageError("--d is required")
    wit = tamecert.cw_witness(parse_gamma(args.d, w.rank), w, ring)
    if wit is None:
        return {"coordinate": None}, NEGATIVE
    return wit.to_json(), OK


def cmd_realize(args, stdin):
    """Certified word with a target multidegree."""
    w, ring = _weight(args), _ring(args)
    if args.target is None:
        raise UsageError("--target is required")
    target = parse_gamma_list(args.target, w.rank)
    case = _json_arg(args.case, stdin, "case") if args.case else None
    cert = tamecert.realize(target, w, ring, fix_last=args.fix_last, case=case, method=args.method)
    if cert is None:
        return {"certificate": None}, NEGATIVE
    return cert.to_json(), OK


def cmd_factor(args, stdin):
    """Affine and elementary factors of a minimal-degree map."""
    w, ring = _weight(args), _ring(args)
    T = _tuple_of(_map(args, stdin, len(w), ring))
    cert = tamecert.factor_min_degree(T, w)
    return cert.to_json(), OK


def cmd_reduce(args, stdin):
    """Search for an elementary reduction."""
    w, ring = _weight(args), _ring(args)
    T = _tuple_of(_map(args, stdin, len(w), ring))
    res = sured.elementary_reduction_search(T, w, args.budget)
    return res.to_json(), OK if res.found else NEGATIVE


def cmd_su_check(args, stdin):
    """Evaluate the SU conditions for a pair."""
    w, ring = _weight(args), _ring(args)
    pair = _json_arg(args.pair, stdin, "pair")
    if not isinstance(pair, dict) or "F" not in pair or "G" not in pair:
        raise UsageError("--pair needs an object with 'F' and 'G'")
    F = _tuple_of(_map_from_json(pair["F"], 3, ring))
    G = _tuple_of(_map_from_json(pair["G"], 3, ring))
    wit = _json_arg(args.witness, stdin, "witness") if args.witness else {}
    Q = parse_polynomial(wit["Q"], 2, ring) if wit.get("Q") is not None else None
    scal = {k: ring.normalize(parse_polynomial(str(wit[k]), 1, ring).constant_term()) for k in "abc" if wit.get(k) is not None}
    report = sured.su_check(sured.SUWitness(F, G, Q, **scal), w)
    return report.to_json(), OK if report.all_su else NEGATIVE


def cmd_dichotomy(args, stdin):
    """Index-set dichotomy for a map."""
    w, ring = _weight(args), _ring(args)
    T = _tuple_of(_map(args, stdin, len(w), ring))
    if args.I is None:
        raise UsageError("--I is required")
    I = [int(x) for x in args.I.split(",") if x.strip()]
    v = parse_weight(args.v, w.rank) if args.v else None
    J, I0 = autmap.thm11_sets(T, I, w)
    res = autmap.thm11_dichotomy(T, I, w, v)
    out = {"J": J, "I0": I0}
    if isinstance(res, autmap.CaseA):
        out.update(case="a", sigma={str(k): v for k, v in sorted(res.sigma.items())})
    else:
        out.update(case="b", witness=res.witness)
    return out, OK


def cmd_harness(args, stdin):
    """Run a seeded property suite."""
    if args.suite is None:
        raise UsageError(f"--suite is required; choose from {sorted(SUITES)}")
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {sorted(SUITES)}")
    rep = run_suite(args.suite, args.cases, args.seed)
    return rep.to_json(), OK if rep.ok else VIOLATED


COMMANDS = {
    "deg": cmd_deg,
    "mdeg": cmd_mdeg,
    "initial": cmd_initial,
    "wedge": cmd_wedge,
    "approx": cmd_approx,
    "monomialize": cmd_monomialize,
    "refine": cmd_refine,
    "semigroup": cmd_semigroup,
    "cw": cmd_cw,
    "realize": cmd_realize,
    "factor": cmd_factor,
    "reduce": cmd_reduce,
    "su-check": cmd_su_check,
    "dichotomy": cmd_dichotomy,
    "harness": cmd_harness,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--ring", default="Q", help="Q, Fp:<p> or Zmod:<m>")
    common.add_argument("--rank", type=int, default=None, help="rank r of the degree group Z^r")
    common.add_argument("--w", default=None, help="weight: 2,3,5 or [(0,1),(1,0)]")
    common.add_argument("--map", default=None, help="JSON word or tuple; @file or - for stdin")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=sured.DEFAULT_BUDGET)
    common.add_argument("--cases", type=int, default=100)
    common.add_argument("--suite", default=None)
    common.add_argument("--pretty", action="store_true", help="indented human-readable output")

    parser = _Parser(prog="polydeg", description="Weighted degrees and multidegrees of polynomial automorphisms.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    specs = {
        "deg": [("--poly",)],
        "mdeg": [],
        "initial": [("--poly",)],
        "wedge": [("--polys",)],
        "approx": [("--weight",), ("--support",), ("--preserve-signs", dict(action="store_true"))],
        "monomialize": [("--polys",), ("--nvars", dict(type=int, required=True))],
        "refine": [("--weights",), ("--polys",)],
        "semigroup": [("--d",), ("--gens",)],
        "cw": [("--d",)],
        "realize": [("--target",), ("--fix-last", dict(action="store_true")), ("--case",), ("--method",)],
        "factor": [],
        "reduce": [],
        "su-check": [("--pair",), ("--witness",)],
        "dichotomy": [("--I",), ("--v",)],
        "harness": [],
    }
    for name, extra in specs.items():
        sp = sub.add_parser(name, parents=[common], help=(COMMANDS[name].__doc__ or name).strip())
        for item in extra:
            sp.add_argument(item[0], **(item[1] if len(item) > 1 else {}))
    return parser


def run(argv, stdin=None):
    """Execute one command; returns (output text, exit code)."""
    stdin = stdin if stdin is not None else sys.stdin
    pretty = "--pretty" in argv
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError(f"a command is required: {', '.join(COMMANDS)}")
        payload, code = COMMANDS[args.command](args, stdin)
    except UsageError as exc:
        payload, code = {"error": "usage", "message": str(exc)}, USAGE
    except TheoremViolated as exc:
        payload, code = {"error": "TheoremViolated", "message": str(exc)}, VIOLATED
    except PolydegError as exc:
        payload, code = {"error": type(exc).__name__, "message": str(exc)}, USAGE
    except (ValueError, KeyError, OSError) as exc:
        payload, code = {"error": type(exc).__name__, "message": str(exc)}, USAGE
    out = {"schema": SCHEMA, **payload}
    text = json.dumps(out, indent=2, sort_keys=False) if pretty else json.dumps(out, separators=(",", ":"))
    return text, code


def main(argv=None):
    text, code = run(sys.argv[1:] if argv is None else argv)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
