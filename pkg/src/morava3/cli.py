"""Command-line front end.

Subcommands: delta, alpha, psi3, eta-psi3, trace-b, dump, verify, eval.
Every subcommand takes --prec-3 / --prec-h (the working precision) and
--format text|json.  Exit codes: 0 success, 1 usage error, 2 expression
parse error, 3 arithmetic error, 4 verification failure.
"""

import argparse
import sys

from .errors import ParseError, RingError
from .expr import eval_expr, parse_element
from .galois import PrecisionProfile
from .matrices import build_a, build_b
from .algebras import define_f, define_w
from .powerops import PowerOpContext, build_composite_h, build_psi3_h
from .series import make_c
from .verification import verify_report
from . import render


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the contract here is exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec-3", type=int, default=24, metavar="N",
                        help="3-adic working precision (digits, default 24)")
    common.add_argument("--prec-h", type=int, default=16, metavar="M",
                        help="h-adic working precision (degree bound, default 16)")
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default text)")

    parser = _Parser(prog="morava3",
                     description="Power operations on the height-2 coefficient ring at p = 3")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("delta", parents=[common], help="the additive 3-derivation of an element")
    p.add_argument("--expr", required=True, help="element expression in h, c, i")
    p = sub.add_parser("alpha", parents=[common], help="the trace-of-power operation of an element")
    p.add_argument("--expr", required=True)
    p = sub.add_parser("psi3", parents=[common], help="image of an element in E0[a]/W")
    p.add_argument("--expr", required=True)
    p = sub.add_parser("eta-psi3", parents=[common], help="composite image of an element in E0[u]/f")
    p.add_argument("--expr", required=True)
    p = sub.add_parser("trace-b", parents=[common], help="traces of powers of the matrix B")
    p.add_argument("--max-power", type=int, default=32, metavar="K")
    p = sub.add_parser("dump", parents=[common], help="print one of the built-in constants")
    p.add_argument("--what", required=True, choices=("A", "B", "f", "W", "psi3h", "etapsi3h", "c"))
    p = sub.add_parser("verify", parents=[common], help="run the cross-validation battery")
    p.add_argument("--trials", type=int, default=100, metavar="T")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p = sub.add_parser("eval", parents=[common], help="evaluate an element expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--invert", action="store_true", help="invert the evaluated element")
    return parser


def _element_out(x, fmt):
    if fmt == "json":
        return render.dumps(render.element_json(x))
    return render.render_series(x)


def _algebra_out(el, fmt):
    if fmt == "json":
        return render.dumps(render.algebra_element_json(el))
    return render.render_poly(list(el.coords), el.algebra.symbol)


def _matrix_out(mat, fmt):
    if fmt == "json":
        return render.dumps(render.matrix_json(mat))
    return render.render_matrix(mat)


def _parse_eval(args, profile):
    return eval_expr(parse_element(args.expr), profile)


def _run_dump(args, profile):
    what = args.what
    if what == "A":
        return _matrix_out(build_a(profile), args.format)
    if what == "B":
        return _matrix_out(build_b(profile), args.format)
    if what == "f":
        poly = define_f(profile).modulus
        if args.format == "json":
            return render.dumps(render.monic_poly_json(poly))
        return render.render_poly(poly.full_coeffs(), "u")
    if what == "W":
        poly = define_w(profile).modulus
        if args.format == "json":
            return render.dumps(render.monic_poly_json(poly))
        return render.render_poly(poly.full_coeffs(), "a")
    if what == "psi3h":
        return _algebra_out(build_psi3_h(define_w(profile)), args.format)
    if what == "etapsi3h":
        return _algebra_out(build_composite_h(define_f(profile)), args.format)
    return _element_out(make_c(profile), args.format)


def _run_trace_b(args, profile):
    if args.max_power < 1:
        raise ValueError("--max-power must be >= 1")
    b = build_b(profile)
    traces = []
    power = b
    for k in range(args.max_power):
        if k:
            power = power * b
        traces.append(power.trace())
    if args.format == "json":
        return render.dumps(
            {"max_power": args.max_power, "traces": [render.element_json(t) for t in traces]}
        )
    lines = [
        f"tr(B^{k}) = {render.render_series(t)}" for k, t in enumerate(traces, start=1)
    ]
    return "\n".join(lines)


def run_command(args) -> tuple[int, str]:
    """Execute a parsed command line; returns (exit code, output text)."""
    profile = PrecisionProfile(args.prec_3, args.prec_h)
    cmd = args.command
    if cmd == "dump":
        return 0, _run_dump(args, profile)
    if cmd == "trace-b":
        return 0, _run_trace_b(args, profile)
    if cmd == "eval":
        x = _parse_eval(args, profile)
        if args.invert:
            x = x.invert()
        return 0, _element_out(x, args.format)
    if cmd == "verify":
        ctx = PowerOpContext(profile)
        report = verify_report(ctx, trials=args.trials, seed=args.seed)
        if args.format == "json":
            out = render.dumps(render.report_json(report))
        else:
            out = report.render_text()
        return (0 if report.passed else 4), out
    ctx = PowerOpContext(profile)
    x = _parse_eval(args, profile)
    if cmd == "delta":
        return 0, _element_out(ctx.delta(x), args.format)
    if cmd == "alpha":
        return 0, _element_out(ctx.alpha(x), args.format)
    if cmd == "psi3":
        return 0, _algebra_out(ctx.psi3(x), args.format)
    if cmd == "eta-psi3":
        return 0, _algebra_out(ctx.psi_c3(x), args.format)
    raise AssertionError(f"unhandled command {cmd!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        code, output = run_command(args)
    except ParseError as exc:
        print(f"morava3: {exc}", file=sys.stderr)
        return 2
    except RingError as exc:
        print(f"morava3: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"morava3: error: {exc}", file=sys.stderr)
        return 1
    print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
