"""Command-line front end.

Words are whitespace-separated generator tokens read left to right::

    t1^2 t3 g1 g2^-1 e1

Rationals are given as ``p/q`` strings; ``--x s=Q`` assigns ``x_s``.

Polynomials are rendered as a sum of terms ``[-]c*f1*f2...`` where each
factor is ``u``, ``z`` or ``x<s>`` with an optional ``^<int>`` exponent,
e.g. ``-1 + 2*u^-1 + 3*z*x1^2``.  Terms are ordered by degree, the
coefficient ``1`` is omitted, and ``x0`` never appears.  Elements are
written as ``coefficient*word`` with words like ``t1^2 t3 g1 g2 g1``.
Exit status: 0 success, 1 a mathematical check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import checks, jtrace, ytl
from . import permwords as pw
from . import yhecke as yh
from .scalars import as_fraction

SCHEMAS = {
    "dim": {"d": "int", "n": "int", "dim_formula": "int", "dim_rank": "int|null", "ideal_rank": "int|null",
            "agree": "bool|null", "rank_report": {"rank": "int", "stable": "bool", "seed": "int",
                                                  "samples": [{"u": "rational", "rank": "int"}]}},
    "element": [{"framing": ["int"], "word": ["int (letter i of g_i)"], "coefficient": "polynomial in u"}],
    "trace": {"d": "int", "n": "int", "word": "str", "trace": "polynomial", "u": "rational?", "x": "{s: rational}?"},
    "zroots": {"d": "int", "u": "rational", "x": "{s: rational}", "quadratic": "polynomial",
               "specialized": ["rational a", "rational b", "rational c"], "roots": ["str"],
               "rational_roots": "[rational]|null", "radical_form": "object"},
    "scan": {"d": "int", "n": "int", "u": "rational", "x": "{s: rational}", "quadratic": "polynomial",
             "roots": ["str"], "entries": [{"word": "str", "relation": "int", "root": "int", "value": "str",
                                            "is_zero": "bool"}],
             "nonzero_count": "int", "witnesses": ["str"]},
    "verify": {"suite": "str", "d": "int", "n": "int", "ok": "bool", "report": "object"},
}


class WordSyntaxError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: str  # 'g', 'ginv', 't', 'e'
    index: int
    exponent: int
    column: int


_TOKEN = re.compile(r"^(g|t|e)(\d+)(?:\^(-?\d+))?$")


def parse_word(s: str, d: int, n: int) -> list[Token]:
    """Tokenise a word, checking indices against ``(d, n)``."""
    tokens = []
    for m in re.finditer(r"\S+", s):
        text, col = m.group(0), m.start() + 1
        mm = _TOKEN.match(text)
        if not mm:
            if re.match(r"^(g|t|e)\d+\^", text):
                raise WordSyntaxError(f"malformed exponent in {text!r}", col)
            raise WordSyntaxError(f"unknown token {text!r}", col)
        kind, idx = mm.group(1), int(mm.group(2))
        exp = int(mm.group(3)) if mm.group(3) is not None else 1
        if kind == "t":
            if not 1 <= idx <= n:
                raise WordSyntaxError(f"index out of range in {text!r} (n={n})", col)
            tokens.append(Token("t", idx, exp % d, col))
            continue
        if not 1 <= idx <= n - 1:
            raise WordSyntaxError(f"index out of range in {text!r} (n={n})", col)
        if kind == "e":
            if exp != 1:
                raise WordSyntaxError(f"malformed exponent in {text!r}", col)
            tokens.append(Token("e", idx, 1, col))
        elif exp == 1:
            tokens.append(Token("g", idx, 1, col))
        elif exp == -1:
            tokens.append(Token("ginv", idx, -1, col))
        else:
            raise WordSyntaxError(f"malformed exponent in {text!r}: only g^-1 is allowed", col)
    return tokens


def evaluate_word(tokens: list[Token], d: int, n: int) -> yh.AlgebraElement:
    a = yh.unit(d, n)
    for tok in tokens:
        if tok.kind == "g":
            a = yh.right_mul_g(a, tok.index)
        elif tok.kind == "t":
            a = yh.right_mul_t(a, tok.index, tok.exponent)
        elif tok.kind == "e":
            a = yh.mul(a, yh.idempotent_e(tok.index, d, n))
        else:
            a = yh.mul(a, yh.g_inverse(tok.index, d, n))
    return a


def element_text(a: yh.AlgebraElement) -> str:
    return str(a)


def _x_pairs(values) -> dict:
    out = {}
    for item in values or []:
        if "=" not in item:
            raise argparse.ArgumentTypeError(f"--x expects s=Q, got {item!r}")
        s, v = item.split("=", 1)
        out[int(s)] = _rational(v)
    return out


_RATIONAL = re.compile(r"^-?\d+(?:/\d+)?$")


def _rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL.match(text):
        raise argparse.ArgumentTypeError(f"expected p/q, got {text!r}")
    try:
        return as_fraction(text)
    except ZeroDivisionError as exc:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ytl", description="Exact Yokonuma-Hecke / Temperley-Lieb computations")
    parser.add_argument("--help-schemas", action="store_true", help="print the JSON output schemas and exit")
    sub = parser.add_subparsers(dest="command")

    def common(p, need_n=True):
        p.add_argument("--d", type=int, required=True)
        if need_n:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--max-dim", type=int, default=None, help="cap on d^n n! basis words")
        p.add_argument("--max-steps", type=int, default=None, help="cap on rewriting steps")

    def params(p, need_u=False):
        p.add_argument("--u", type=_rational, required=need_u)
        p.add_argument("--x", action="append", metavar="s=Q", default=[])

    p = sub.add_parser("dim", help="quotient dimension")
    common(p)
    p.add_argument("--method", choices=("formula", "rank", "both"), default="both")
    p.add_argument("--samples", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--symbolic", action="store_true", help="exact elimination over the Laurent ring")

    p = sub.add_parser("mul", help="product of two words")
    common(p)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)

    p = sub.add_parser("trace", help="trace of a word")
    common(p)
    p.add_argument("--word", required=True)
    params(p)

    p = sub.add_parser("ytl-reduce", help="normal form over the restricted family")
    common(p)
    p.add_argument("--word", required=True)

    p = sub.add_parser("zroots", help="roots of the trace-factoring quadratic")
    common(p, need_n=False)
    params(p, need_u=True)

    p = sub.add_parser("scan", help="obstruction scan over all basis words")
    common(p)
    params(p, need_u=True)
    p.add_argument("--roots", choices=("one", "both"), default="both")

    p = sub.add_parser("verify", help="run a verification suite")
    common(p)
    p.add_argument("--suite", choices=("presentation", "l-relations", "tr9tr10", "markov"), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--triples", type=int, default=500)
    return parser


def _emit(report, fmt: str, text_lines, out):
    if fmt == "json":
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _params(args, d) -> jtrace.TraceParams:
    x = _x_pairs(args.x)
    if args.u is None:
        return None
    return jtrace.TraceParams(d, args.u, x)


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if args.help_schemas:
        out.write(json.dumps(SCHEMAS, indent=2, sort_keys=True) + "\n")
        return 0
    if args.command is None:
        parser.print_help(sys.stderr)
        return 2
    if args.d < 1 or getattr(args, "n", 1) < 0:
        sys.stderr.write("usage error: need d >= 1 and n >= 0\n")
        return 2
    try:
        return _dispatch(args, out)
    except (WordSyntaxError, ValueError, IndexError, argparse.ArgumentTypeError) as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except (pw.ResourceCapExceeded, ytl.RewriteError, yh.SupportCapExceeded) as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return 2


def _dispatch(args, out) -> int:
    cmd, d = args.command, args.d
    cap = args.max_dim

    if cmd == "dim":
        n = args.n
        if args.method == "formula":
            rep = {"d": d, "n": n, "dim_formula": ytl.dim_formula(d, n), "dim_rank": None,
                   "ideal_rank": None, "agree": None}
            _emit(rep, args.format, [f"dim_formula = {rep['dim_formula']}"], out)
            return 0
        full = ytl.ytl_dimension(d, n, "both", samples=args.samples, seed=args.seed,
                                 symbolic=args.symbolic, cap=cap)
        rep = full.to_json()
        if args.method == "rank":
            rep["dim_formula"] = ytl.dim_formula(d, n)
        lines = [f"d={d} n={n}", f"dim_formula = {rep['dim_formula']}", f"dim_rank    = {rep['dim_rank']}",
                 f"ideal_rank  = {rep['ideal_rank']}", f"agree       = {rep['agree']}"]
        _emit(rep, args.format, lines, out)
        return 0 if (args.method == "rank" or full.agree) else 1

    if cmd == "mul":
        n = args.n
        a = evaluate_word(parse_word(args.lhs, d, n), d, n)
        b = evaluate_word(parse_word(args.rhs, d, n), d, n)
        prod = yh.mul(a, b)
        rep = {"d": d, "n": n, "lhs": args.lhs, "rhs": args.rhs, "product": prod.to_json()}
        _emit(rep, args.format, [element_text(prod)], out)
        return 0

    if cmd == "trace":
        n = args.n
        a = evaluate_word(parse_word(args.word, d, n), d, n)
        poly = jtrace.trace(a)
        rep = {"d": d, "n": n, "word": args.word, "trace": str(poly)}
        params = _params(args, d)
        if params is not None:
            rep.update(params.to_json())
            rep["trace"] = str(poly.specialize(params.u, params.x))
        _emit(rep, args.format, [rep["trace"]], out)
        return 0

    if cmd == "ytl-reduce":
        n = args.n
        a = evaluate_word(parse_word(args.word, d, n), d, n)
        red = ytl.reduce_to_sigma(a, args.max_steps)
        rep = {"d": d, "n": n, "word": args.word, "reduced": red.to_json()}
        _emit(rep, args.format, [element_text(red)], out)
        return 0

    if cmd == "zroots":
        params = _params(args, d)
        zr = jtrace.z_roots(params)
        rep = {"d": d, "quadratic": str(jtrace.z_quadratic(d)),
               "specialized": [str(c) for c in zr.coefficients], "roots": zr.describe(),
               "rational_roots": None if zr.rational_roots is None else [str(r) for r in zr.rational_roots],
               "radical_form": jtrace.radical_form_report(params)}
        rep.update(params.to_json())
        _emit(rep, args.format, [f"{rep['quadratic']} = 0", "roots: " + ", ".join(rep["roots"])], out)
        return 0

    if cmd == "scan":
        params = _params(args, d)
        rep = jtrace.factoring_scan(d, args.n, params, args.roots, cap=cap).to_json()
        lines = [f"quadratic: {rep['quadratic']} = 0", "roots: " + ", ".join(rep["roots"]),
                 f"nonzero obstructions: {rep['nonzero_count']} of {len(rep['entries'])}",
                 "witnesses: " + ", ".join(rep["witnesses"])]
        _emit(rep, args.format, lines, out)
        return 0

    if cmd == "verify":
        n = args.n
        if args.suite == "presentation":
            report = checks.presentation_suite(d, n, triples=args.triples, seed=args.seed)
            ok = report["ok"]
        elif args.suite == "l-relations":
            report = ytl.verify_l_presentation(d, n)
            ok = all(r["holds"] for r in report)
        elif args.suite == "tr9tr10":
            report = jtrace.identity_tr9_tr10(d)
            ok = report["all_hold"] and report["k0_reproduces_z_quadratic"]
        else:
            report = jtrace.check_trace_rules(d, n, pairs=args.triples, seed=args.seed)
            ok = report["ok"]
        rep = {"suite": args.suite, "d": d, "n": n, "ok": ok, "report": report}
        _emit(rep, args.format, [f"{args.suite} d={d} n={n}: {'PASS' if ok else 'FAIL'}"], out)
        return 0 if ok else 1

    raise ValueError(f"unknown command {cmd}")


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
