"""Command-line interface: ``qweight eval|avg|bernoulli|verify|examples``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .coeff import QRat, format_poly
from .hecke import HeckeElt, IndexOutOfRange, parse_word
from .qbern import QBernParams, classical_bernoulli, qbernoulli
from .render import center_to_json, render_center, render_coeff, render_sympoly
from .rmat import ScaleLimit
from .symf import SymPoly, hc_image
from .verify import SUITES, run_suite, worked_examples
from .wsys import (
    avg_formula_classical,
    avg_formula_quantum,
    chi,
    limit_q1_sym,
    omega,
    omega_average_char,
    omega_average_direct,
)


def _n_arg(text: str):
    if text == "universal":
        return None
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"N must be a positive integer or 'universal', got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("N must be positive")
    return n


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return n


def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return n


def _coeff_json(c):
    if isinstance(c, QRat):
        return {"coeff_num": format_poly(c.numerator), "coeff_den": format_poly(c.denominator)}
    c = Fraction(c)
    return {"coeff_num": str(c), "coeff_den": "1"}


def sympoly_to_json(s: SymPoly):
    return {
        "N": s.N,
        "variables": s.var,
        "terms": [{"exponents": list(e), **_coeff_json(c)} for e, c in sorted(s.terms.items(), reverse=True)],
    }


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qweight", description="Quantum gl-weight systems on Hecke algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    e = sub.add_parser("eval", help="evaluate chi or omega on a Hecke word")
    e.add_argument("--word", required=True, help='e.g. "g2 g1" or "g1 g2^-1"')
    e.add_argument("--m", type=_positive, required=True)
    grp = e.add_mutually_exclusive_group()
    grp.add_argument("--N", type=_n_arg, default=None)
    grp.add_argument("--universal", action="store_true")
    e.add_argument("--map", choices=("chi", "omega"), default="omega")
    fmt(e)

    a = sub.add_parser("avg", help="average values Omega_m and W_m")
    a.add_argument("--m", type=_positive, required=True)
    a.add_argument("--N", type=_n_arg, required=True)
    a.add_argument("--method", choices=("direct", "char", "formula", "classical", "limit"), default="direct")
    a.add_argument("--expand", action="store_true", help="print x-polynomials as monomial sums")
    fmt(a)

    b = sub.add_parser("bernoulli", help="q-Bernoulli or classical Bernoulli values")
    b.add_argument("--m", type=_nonneg, required=True)
    b.add_argument("--h", type=_positive, default=None)
    b.add_argument("--k", type=_nonneg, required=True)
    b.add_argument("--xi2", type=int, default=0, help="twice the parameter xi")
    b.add_argument("--classical", action="store_true")
    fmt(b)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    v.add_argument("--m-max", type=_positive, default=None)
    v.add_argument("--N-max", type=_positive, default=None)
    v.add_argument("--K-max", type=_positive, default=None)
    v.add_argument("--order", type=_positive, default=None)
    fmt(v)

    x = sub.add_parser("examples", help="replay the eight worked values of omega")
    fmt(x)
    return p


def _cmd_eval(args, out):
    N = None if args.universal else args.N
    x = HeckeElt.word(parse_word(args.word), args.m)
    val = chi(x, N) if args.map == "chi" else omega(x, N)
    if args.format == "json":
        out.write(json.dumps(center_to_json(val)) + "\n")
    else:
        out.write(render_center(val) + "\n")
    return 0


def _cmd_avg(args, out):
    m, N = args.m, args.N
    if N is None and args.method != "direct":
        raise ValueError(f"method {args.method!r} needs an integer N")
    if args.method == "direct":
        val = omega_average_direct(m, N)
        text = render_center(val)
        data = center_to_json(val)
    else:
        if args.method == "char":
            s = omega_average_char(m, N)
        elif args.method == "formula":
            s = avg_formula_quantum(m, N)
        elif args.method == "classical":
            s = avg_formula_classical(m, N)
        else:
            s = limit_q1_sym(hc_image(omega_average_direct(m, N), N))
        text = render_sympoly(s, expand=args.expand)
        data = sympoly_to_json(s)
    out.write((json.dumps(data) if args.format == "json" else text) + "\n")
    return 0


def _cmd_bernoulli(args, out):
    xi = Fraction(args.xi2, 2)
    if args.classical:
        val = classical_bernoulli(args.m, args.k, xi)
        label = f"B_{args.m}^({args.k})({xi})"
    else:
        h = args.h if args.h is not None else max(args.k, 1)
        val = qbernoulli(QBernParams(args.m, h, args.k, xi))
        label = f"beta_{args.m}^({h},{args.k})({xi})"
    if args.format == "json":
        out.write(json.dumps({"value": label, **_coeff_json(val)}) + "\n")
    else:
        out.write(f"{label} = {render_coeff(val)}\n")
    return 0


def _cmd_verify(args, out):
    report = run_suite(args.suite, m_max=args.m_max, N_max=args.N_max, K_max=args.K_max, order=args.order)
    out.write((report.to_json() if args.format == "json" else report.to_text()) + "\n")
    return 0 if report.ok else 1


def _cmd_examples(args, out):
    rows = []
    for label, word, m, expected in worked_examples():
        got = omega(HeckeElt.word(word, m))
        diff = got - expected
        rows.append({
            "name": label,
            "computed": render_center(got),
            "published": render_center(expected),
            "status": "pass" if not diff else "fail",
            "difference": None if not diff else render_center(diff),
        })
    if args.format == "json":
        out.write(json.dumps({"suite": "examples", "checks": rows}, indent=2) + "\n")
    else:
        for r in rows:
            out.write(f"[{r['status']}] {r['name']} = {r['computed']}\n")
            if r["difference"] is not None:
                out.write(f"    published: {r['published']}\n    difference: {r['difference']}\n")
        ok = sum(r["status"] == "pass" for r in rows)
        out.write(f"examples: {ok}/{len(rows)} pass\n")
    return 0 if all(r["status"] == "pass" for r in rows) else 1


COMMANDS = {
    "eval": _cmd_eval,
    "avg": _cmd_avg,
    "bernoulli": _cmd_bernoulli,
    "verify": _cmd_verify,
    "examples": _cmd_examples,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except ScaleLimit as exc:
        err.write(f"qweight: scale limit exceeded: {exc}\n")
        return 3
    except (ValueError, KeyError, IndexOutOfRange) as exc:
        err.write(f"qweight: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
