"""Command-line surface for batch reproduction of every published artifact.

Exit codes: 0 success, 1 a verification reported failure, 2 usage error,
3 computational error (term cap, truncation cap, pole, failed certification).
Output is deterministic for a given flag set; JSON output is byte-stable.
"""

from __future__ import annotations

import argparse
import sys
from decimal import Decimal, InvalidOperation
from fractions import Fraction

from . import emit as emit_mod
from . import powerprime, series, sumverify
from .hypergeom import LowerParamPole, ShapeUnsupported, TermCapExceeded
from .mpnum import BigReal, NotNearInteger
from .series import TruncationCapExceeded

_COMPUTATION_ERRORS = (
    TermCapExceeded,
    TruncationCapExceeded,
    LowerParamPole,
    ShapeUnsupported,
    NotNearInteger,
    sumverify.VariantMismatch,
    emit_mod.UncertifiedFactorization,
    emit_mod.DigitsExceedPrecision,
    ZeroDivisionError,
)


class UsageError(ValueError):
    pass


def _parse_rational(text: str) -> Fraction:
    """'3/2' or an exact decimal like '3.75' or '1e-33'."""
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(Decimal(text))
    except (ValueError, InvalidOperation, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse {text!r} as a rational number") from exc


def _parse_kind_order(kind: str, order: str) -> tuple[str, int]:
    k = kind.upper()
    if k not in ("J", "I"):
        raise UsageError("kind must be J or I")
    try:
        n = int(order)
    except ValueError as exc:
        raise UsageError("order must be a nonnegative integer") from exc
    if n < 0:
        raise UsageError("order must be a nonnegative integer")
    return k, n


def _parse_range(text: str) -> tuple[Fraction, Fraction]:
    if ".." not in text:
        raise UsageError("range must look like LO..HI")
    lo, hi = text.split("..", 1)
    return _parse_rational(lo), _parse_rational(hi)


def _parse_h_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
    else:
        lo = hi = text
    try:
        a, b = int(lo), int(hi)
    except ValueError as exc:
        raise UsageError("h range must look like A..B with integers") from exc
    if a < 0 or b < a:
        raise UsageError("h range must satisfy 0 <= A <= B")
    return a, b


def _write(args: argparse.Namespace, text: str) -> None:
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


def _json_line(payload: dict) -> str:
    import json

    return json.dumps(payload, separators=(",", ":"))


def _build(kind: str, order: int, k: Fraction, lmax: int | None,
           threshold: Fraction | None, digits: int) -> series.FLSeries:
    if lmax is not None:
        return series.build_series(kind, order, k, l_max=lmax, precision=digits)
    return series.build_series(kind, order, k, threshold=threshold, precision=digits)


def cmd_coeffs(args: argparse.Namespace) -> int:
    kind, order = _parse_kind_order(args.kind, args.order)
    k = _parse_rational(args.k)
    threshold = _parse_rational(args.threshold) if args.threshold else None
    s = _build(kind, order, k, args.lmax, threshold, args.digits)
    if args.format == "json":
        _write(args, emit_mod.emit_json(s))
    else:
        lines = [f"{L:4d}  {a}" for L, a in s.entries]
        _write(args, "\n".join(lines) if lines else "(no entries)")
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    kind, order = _parse_kind_order(args.kind, args.order)
    k = _parse_rational(args.k)
    x = _parse_rational(args.x)
    s = _build(kind, order, k, args.lmax, None, args.digits)
    val = series.eval_series(s, x, args.digits)
    if args.format == "json":
        _write(args, _json_line({
            "schema": emit_mod.SCHEMA_VERSION, "type": "evaluation",
            "kind": kind, "order": order,
            "k": f"{k.numerator}/{k.denominator}",
            "x": f"{x.numerator}/{x.denominator}",
            "l_max": s.l_max, "precision": args.digits, "value": str(val)}))
    else:
        _write(args, str(val))
    return 0


def cmd_power(args: argparse.Namespace) -> int:
    kind, order = _parse_kind_order(args.kind, args.order)
    k = _parse_rational(args.k)
    lmax = order % 2 + 2 * (args.terms - 1) if args.terms else args.max_power
    s = series.build_series(kind, order, k, l_max=lmax, precision=args.digits)
    p = powerprime.to_power_series(s, args.max_power)
    report = powerprime.certify_prime_structure(p) if args.factorize else None
    if args.format == "json":
        out = [emit_mod.emit_json(p)]
        if report is not None:
            out.append(emit_mod.emit_json(report))
        _write(args, "\n".join(out))
        return 0
    lines = [f"x^{m:<3d} {c}" for m, c in p.coeffs]
    if report is not None:
        lines.append("")
        for e in report.entries:
            if e.certified:
                den = emit_mod.denominator_text(e.factors).lstrip("/") or "1"
                lines.append(f"x^{e.power:<3d} 1/{den}  gap {e.gap}")
            else:
                lines.append(
                    f"x^{e.power:<3d} not near an integer "
                    f"(nearest {e.nearest}, gap {e.gap})"
                )
    _write(args, "\n".join(lines))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    h_lo, h_hi = _parse_h_range(args.h_range)
    k = _parse_rational(args.k)
    tol = _parse_rational(args.tol)
    plus = args.terms.startswith("+")
    base_terms = int(args.terms.lstrip("+"))
    out_lines = []
    worst_fail = False
    for h in range(h_lo, h_hi + 1):
        terms = (h + base_terms) if plus else base_terms
        spec = sumverify.SumSpec(
            family=args.family, h=h, k=k, L_terms=terms,
            precision=args.digits, variant=args.variant,
        )
        report = sumverify.verify_identity(spec, tol)
        worst_fail = worst_fail or not report.passed
        if args.format == "json":
            out_lines.append(emit_mod.emit_json(report))
        else:
            status = "pass" if report.passed else "FAIL"
            out_lines.append(
                f"h={h:3d} terms={terms:4d} rel_diff={report.rel_diff} {status}"
            )
    _write(args, "\n".join(out_lines))
    return 1 if worst_fail else 0


def cmd_table1(args: argparse.Namespace) -> int:
    spec = sumverify.SumSpec(
        family="j0", h=0, k=Fraction(1), L_terms=args.rows,
        precision=max(args.table_digits + 4, 50),
    )
    partials = sumverify.partial_sums_rational(spec)
    rows = [str(BigReal.from_fraction(q, args.table_digits)) for q in partials]
    if args.format == "json":
        _write(args, _json_line({
            "schema": emit_mod.SCHEMA_VERSION, "type": "constant_term_table",
            "rows": rows, "precision": args.table_digits}))
    else:
        _write(args, "\n".join(rows))
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    which = args.which.upper()
    kind, order = which[0], int(which[1])
    if args.range:
        lo, hi = _parse_range(args.range)
    else:
        bound = series.ALLEN_RANGE[which]
        lo, hi = -bound, bound
    lmax = 12 if order == 0 else 13
    s = series.build_series(kind, order, Fraction(1), l_max=lmax,
                            precision=args.digits)
    fl_report = series.accuracy_scan(s, lo, hi, args.grid, "maclaurin",
                                     precision=args.digits)
    # the optimized fit against the same reference, on the same grid
    worst = None
    worst_x = lo
    step = (hi - lo) / (args.grid - 1)
    for i in range(args.grid):
        x = lo + i * step
        ref = series.maclaurin_ref(kind, order, Fraction(1), x, args.digits + 10)
        got = series.eval_allen(which, x, args.digits)
        err = abs(got.value - ref.value)
        if worst is None or err > worst:
            worst, worst_x = err, x
    allen_report = series.AccuracyReport(
        x_range=(lo, hi), grid_points=args.grid,
        max_abs_error=BigReal(worst, 8), argmax_x=worst_x,
    )
    if args.format == "json":
        _write(args, "\n".join([
            _json_line({"schema": emit_mod.SCHEMA_VERSION,
                        "type": "bench", "which": args.which,
                        "truncation_l_max": lmax}),
            emit_mod.emit_json(fl_report),
            emit_mod.emit_json(allen_report),
        ]))
        return 0
    lines = [
        f"series truncated at P_{lmax}: max |error| = "
        f"{fl_report.max_abs_error.render(8)} at x = {fl_report.argmax_x}",
        f"optimized 7-term fit:       max |error| = "
        f"{allen_report.max_abs_error.render(8)} at x = {allen_report.argmax_x}",
    ]
    _write(args, "\n".join(lines))
    return 0


_EMIT_WHAT = {
    # what: (kind, order, l_max, digit-spec key)
    "legendre-j0": ("J", 0, 42, "J0"),
    "legendre-j1": ("J", 1, 43, "J1"),
    "legendre-i0": ("I", 0, 46, "I0"),
    "legendre-i1": ("I", 1, 45, "I1"),
    "power-j0": ("J", 0, 146, "J0_POWER"),
    "power-j1": ("J", 1, 155, "J1_POWER"),
    "intpower-j0": ("J", 0, 146, None),
    "intpower-j1": ("J", 1, 155, None),
}


def cmd_emit(args: argparse.Namespace) -> int:
    kind, order, lmax, spec_key = _EMIT_WHAT[args.what]
    precision = max(args.digits, 50)
    name = emit_mod.default_name(kind, order)
    max_power = 42 if order == 0 else 43
    if args.what.startswith("intpower-"):
        # the exact inverse-prime realization: reciprocals of the high
        # powers need ~60 correct digits, beyond any realistic fold
        p = powerprime.exact_power_series(kind, order, max_power)
        report = powerprime.certify_prime_structure(p)
        text = emit_mod.emit_power_code(
            p, emit_mod.EmitTarget("integer-power", 1, name), report)
    else:
        digits = (emit_mod.PUBLISHED_LISTING_DIGITS[spec_key]
                  if args.emit_digits == "published" else int(args.emit_digits))
        s = series.build_series(kind, order, Fraction(1), l_max=lmax,
                                precision=precision)
        if args.what.startswith("legendre-"):
            text = emit_mod.emit_legendre_code(
                s, emit_mod.EmitTarget(args.dialect, digits, name))
        else:
            p = powerprime.to_power_series(s, max_power)
            text = emit_mod.emit_power_code(
                p, emit_mod.EmitTarget(args.dialect, digits, name))
    _write(args, text)
    return 0


def _common_options(parser: argparse.ArgumentParser, top_level: bool) -> None:
    # the same options are accepted before or after the subcommand; the
    # sub-level copies suppress their defaults so they never clobber values
    # given up front
    suppress = argparse.SUPPRESS
    parser.add_argument("--digits", type=int,
                        default=50 if top_level else suppress,
                        help="working/display precision in significant digits")
    parser.add_argument("--format", choices=["text", "json"],
                        default="text" if top_level else suppress)
    parser.add_argument("--out", default="-" if top_level else suppress,
                        help="output path, '-' for stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="flbessel",
        description="Legendre-basis expansions of Bessel functions: "
                    "coefficient tables, evaluation, power series, prime "
                    "certification, summed-series verification, and code "
                    "emission.",
    )
    _common_options(ap, top_level=True)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("coeffs", help="expansion coefficient table")
    c.add_argument("kind")
    c.add_argument("order")
    c.add_argument("k")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--lmax", type=int)
    g.add_argument("--threshold")
    _common_options(c, top_level=False)
    c.set_defaults(func=cmd_coeffs)

    e = sub.add_parser("eval", help="evaluate a truncated expansion")
    e.add_argument("kind")
    e.add_argument("order")
    e.add_argument("k")
    e.add_argument("x")
    e.add_argument("--lmax", type=int)
    _common_options(e, top_level=False)
    e.set_defaults(func=cmd_eval)

    p = sub.add_parser("power", help="fold the expansion into a power series")
    p.add_argument("kind")
    p.add_argument("order")
    p.add_argument("k")
    p.add_argument("--max-power", type=int, required=True)
    p.add_argument("--terms", type=int,
                   help="number of Legendre terms folded in")
    p.add_argument("--factorize", action="store_true",
                   help="certify inverse-prime-power structure")
    _common_options(p, top_level=False)
    p.set_defaults(func=cmd_power)

    v = sub.add_parser("verify", help="summed-series identity check")
    v.add_argument("--family", choices=["j0", "j1"], required=True)
    v.add_argument("--h-range", required=True, help="A..B inclusive")
    v.add_argument("--k", default="1")
    v.add_argument("--terms", default="+80",
                   help="'+N' means h+N terms, bare N is absolute")
    v.add_argument("--tol", default="1e-33", help="relative tolerance")
    v.add_argument("--variant", choices=list(sumverify.VARIANTS),
                   default="pochhammer")
    _common_options(v, top_level=False)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table1",
                       help="convergence table of the constant-term partial sums")
    t.add_argument("--rows", type=int, default=17)
    t.add_argument("--table-digits", type=int, default=48)
    _common_options(t, top_level=False)
    t.set_defaults(func=cmd_table1)

    b = sub.add_parser("bench",
                       help="compare a short truncation against the classic fits")
    b.add_argument("--which", choices=["j0", "j1", "i0", "i1"], required=True)
    b.add_argument("--range", help="LO..HI (default: the fit's nominal range)")
    b.add_argument("--grid", type=int, default=121)
    _common_options(b, top_level=False)
    b.set_defaults(func=cmd_bench)

    m = sub.add_parser("emit", help="emit a code/text artifact")
    m.add_argument("--what", choices=sorted(_EMIT_WHAT), required=True)
    m.add_argument("--dialect", default="legacy-fixed-form",
                   choices=["legacy-fixed-form", "free-form", "cas"])
    m.add_argument("--emit-digits", default="published",
                   help="'published' for the per-term listing digit counts, "
                        "or a uniform integer")
    _common_options(m, top_level=False)
    m.set_defaults(func=cmd_emit)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.digits < 1:
        parser.error("--digits must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _COMPUTATION_ERRORS as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
