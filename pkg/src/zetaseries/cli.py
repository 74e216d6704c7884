"""Command-line front end.

Exit codes: 0 success, 1 identity failure, 2 domain error, 3 usage error,
4 I/O error.  Numbers are printed with 17 significant digits so CSV output
round-trips bit-exactly.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from collections.abc import Sequence

from . import classical_series, figures, identities, truncation, zeta_series
from .bernoulli_zeta import zeta_even, zeta_even_coefficient
from .errors import DomainError, ToleranceError, UnknownIdError

EXIT_OK = 0
EXIT_IDENTITY_FAIL = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 3
EXIT_IO = 4

ZETA_CLI_MAX = 200
_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def fmt(v: float) -> str:
    return f"{v:.17g}"


def _terms_arg(text: str) -> int | str:
    if text == "auto":
        return text
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'auto' or a positive integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"terms must be >= 1, got {n}")
    return n


def _range_arg(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(p) for p in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    if not lo < hi:
        raise argparse.ArgumentTypeError(f"range needs LO < HI, got {text!r}")
    return lo, hi


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zetaseries", description="Zeta-coefficient series toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate one series at one point")
    p.add_argument("name", nargs="?", help="series name (or use --series)")
    p.add_argument("--series", dest="series_opt", help="series name, or classical:<sin|cos>:<order>")
    arg = p.add_mutually_exclusive_group()
    for flag in ("--x", "--theta", "--s"):
        arg.add_argument(flag, dest="argument", type=float)
    p.add_argument("--terms", type=_terms_arg, default="auto")

    p = sub.add_parser("identities", help="check the identity catalogue")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--format", choices=("table", "csv"), default="table")

    p = sub.add_parser("plotdata", help="write figure data as CSV")
    p.add_argument("figure", choices=sorted(figures.FIGURES))
    p.add_argument("--range", dest="span", type=_range_arg, default=None)
    p.add_argument("--samples", type=int, default=181)
    p.add_argument("--terms", type=_int_list, default=[1, 2, 3])
    p.add_argument("--output", "-o", default="-", help="output path, '-' for stdout")

    p = sub.add_parser("zeta", help="print zeta(2k) for k = 1..max")
    p.add_argument("--max", dest="max_k", type=int, default=5)

    p = sub.add_parser("convergence", help="terms needed / error curve for a series")
    p.add_argument("--series", required=True)
    p.add_argument("--point", type=float, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--tol", type=float, nargs="+")
    mode.add_argument("--curve", type=int, metavar="MAX_TERMS")
    p.add_argument("--format", choices=("table", "csv"), default="csv")
    return parser


def _write_table(out, header: Sequence[str], rows: list[Sequence[str]], fmt_kind: str) -> None:
    if fmt_kind == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return
    widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]
    for line in [header, *rows]:
        out.write("  ".join(str(c).ljust(w) for c, w in zip(line, widths)).rstrip() + "\n")


def cmd_eval(args, out) -> int:
    name = args.series_opt or args.name
    if not name:
        raise UsageError("eval needs a series name")
    if args.argument is None:
        raise UsageError("eval needs --x, --theta or --s")
    if name.startswith("classical:"):
        return _eval_classical(name, args, out)
    try:
        series = zeta_series.SERIES[name]
    except KeyError:
        raise UnknownIdError(f"unknown series {name!r}; known: {', '.join(zeta_series.SERIES)}") from None
    result = series(args.argument, args.terms)
    out.write(f"series      {name}\n")
    out.write(f"argument    {fmt(args.argument)}\n")
    out.write(f"value       {fmt(result.value)}\n")
    out.write(f"terms_used  {result.terms_used}\n")
    out.write(f"est_error   {fmt(result.est_error)}\n")
    return EXIT_OK


def _eval_classical(name: str, args, out) -> int:
    try:
        kind = classical_series.SeriesKind.parse(name.removeprefix("classical:"))
    except classical_series.UnsupportedKindError as exc:
        raise UsageError(str(exc)) from None
    out.write(f"series      {name}\n")
    out.write(f"argument    {fmt(args.argument)}\n")
    if args.terms != "auto":
        r = classical_series.direct_sum(kind, args.argument, args.terms)
        out.write(f"value       {fmt(r.partial_sum)}\n")
        out.write(f"terms_used  {r.terms}\n")
        out.write(f"tail_bound  {fmt(r.tail_bound)}{'' if r.reliable else ' (unreliable)'}\n")
    elif kind in classical_series.SUPPORTED_CLOSED_FORMS:
        out.write(f"value       {fmt(classical_series.closed_form(kind, args.argument))}\n")
        out.write("terms_used  closed-form\n")
    else:
        tol = 1e-10
        value = classical_series.oracle_converged(kind, args.argument, tol)
        out.write(f"value       {fmt(value)}\n")
        out.write(f"tail_bound  {fmt(tol)}\n")
    return EXIT_OK


def cmd_identities(args, out) -> int:
    results = identities.check_all(args.tol)
    rows = [
        (r.id, fmt(r.lhs_value), fmt(r.rhs_value), fmt(r.abs_residual), r.status.value, r.note)
        for r in results
    ]
    _write_table(out, ("id", "lhs", "rhs", "residual", "status", "note"), rows, args.format)
    failed = any(r.status is identities.Status.FAIL for r in results)
    return EXIT_IDENTITY_FAIL if failed else EXIT_OK


_DEFAULT_RANGES = {"log_sinc": (-0.9, 0.9), "log_series": (0.2, 5.0)}


def cmd_plotdata(args, out) -> int:
    lo, hi = args.span or _DEFAULT_RANGES[args.figure]
    try:
        data = figures.plot_series(args.figure, lo, hi, args.samples, args.terms)
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise UsageError(str(exc)) from None
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(data.header())
    writer.writerows([fmt(v) for v in row] for row in data.rows())
    if args.output == "-":
        out.write(buf.getvalue())
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    return EXIT_OK


def _pi_form(k: int) -> str:
    c = zeta_even_coefficient(k)
    power = f"π{str(2 * k).translate(_SUPERSCRIPT)}"
    head = power if c.numerator == 1 else f"{c.numerator}{power}"
    return f"{head}/{c.denominator}"


def cmd_zeta(args, out) -> int:
    if not 1 <= args.max_k <= ZETA_CLI_MAX:
        raise DomainError(f"--max must be in 1..{ZETA_CLI_MAX}, got {args.max_k}")
    rows = [
        (str(k), str(2 * k), fmt(zeta_even(k)), _pi_form(k) if 2 * k <= 10 else "")
        for k in range(1, args.max_k + 1)
    ]
    _write_table(out, ("k", "2k", "zeta(2k)", "form"), rows, "table")
    return EXIT_OK


def cmd_convergence(args, out) -> int:
    if args.curve is not None:
        if not 1 <= args.curve <= truncation.MAX_TERMS:
            raise UsageError(f"--curve must be in 1..{truncation.MAX_TERMS}")
        report = truncation.error_curve(args.series, args.point, args.curve)
        rows = [(str(n), fmt(e)) for n, e in report.per_term_errors]
        _write_table(out, ("terms", "abs_error"), rows, args.format)
        return EXIT_OK
    rows = []
    for tol in args.tol or [1e-14]:
        report = truncation.terms_needed(args.series, args.point, tol)
        needed = str(report.terms_needed) if report.terms_needed else f">{truncation.MAX_TERMS}"
        rows.append((fmt(tol), needed, fmt(report.achieved_error)))
    _write_table(out, ("tol", "terms_needed", "achieved_error"), rows, args.format)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "identities": cmd_identities,
    "plotdata": cmd_plotdata,
    "zeta": cmd_zeta,
    "convergence": cmd_convergence,
}


def _glue_negative_ranges(argv: list[str]) -> list[str]:
    # "--range -0.9:0.9" would otherwise be read as an unknown option
    glued: list[str] = []
    i = 0
    while i < len(argv):
        if argv[i] == "--range" and i + 1 < len(argv):
            glued.append(f"--range={argv[i + 1]}")
            i += 2
        else:
            glued.append(argv[i])
            i += 1
    return glued


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = _glue_negative_ranges(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except UnknownIdError as exc:
        err.write(f"usage error: {exc.args[0]}\n")
        return EXIT_USAGE
    except (DomainError, ToleranceError, OverflowError) as exc:
        err.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN
    except OSError as exc:
        err.write(f"i/o error: {exc}\n")
        return EXIT_IO
    except ValueError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE


def entry() -> None:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    raise SystemExit(main())
