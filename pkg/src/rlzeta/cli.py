"""
Command-line front end.

    rlzeta eval --mode zeta --s 2 --x 0
    rlzeta table --mode frac --re-s 0.5:2:0.5 --im-s 0 --x -2:0:1 --format csv --out t.csv
    rlzeta verify all
    rlzeta zero-scan --t-min 14 --t-max 14.3 --step 0.01
    rlzeta symmetry-scan --s1 2 --s2 3 --x -2:0:1

Complex arguments are written a+bi or a-bi (whitespace allowed; "j" works
too).  Exit codes: 0 success, 1 failed verification, 2 usage/domain/pole
error, 3 numerical non-convergence, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from . import __version__
from .checks import SUITES, run_suite, suite_passed
from .errors import DomainError, NonConvergence, PoleError, StepTooLarge
from .fraczeta import (
    EtaCoordinatePoint,
    FracCoordinatePoint,
    eta_incomplete,
    frac_integral,
    zeta_incomplete,
)
from .quadrature import EvalConfig
from .scans import symmetry_scan, zero_scan

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NONCONVERGENCE = 3
EXIT_IO = 4

CSV_FIELDS = ("re_s", "im_s", "x", "re_val", "im_val", "err_est", "n_evals", "status")
MODES = ("eta", "zeta", "frac")


def parse_complex(text: str) -> complex:
    """Parse "a+bi", "a - bi", "bi", "i", "-i" or a plain real."""
    t = "".join(str(text).split()).lower()
    if not t:
        raise ValueError("empty complex literal")
    if t[-1] in "ij":
        body = t[:-1]
        if body == "" or body[-1] in "+-":
            body += "1"
        t = body + "j"
    z = complex(t)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite complex literal {text!r}")
    return z


def _complex_arg(text):
    try:
        return parse_complex(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse {text!r} as a complex number (use a+bi)")


def fmt(v: float) -> str:
    return format(v, ".17g")


def format_complex(z: complex) -> str:
    return f"{z.real!r}{'-' if math.copysign(1.0, z.imag) < 0 else '+'}{abs(z.imag)!r}i"


@dataclass(frozen=True)
class GridSpec:
    """Inclusive (start, stop, step) ranges for Re s, Im s and x."""

    re_s: tuple[float, float, float]
    im_s: tuple[float, float, float]
    x: tuple[float, float, float]

    def __post_init__(self):
        for name in ("re_s", "im_s", "x"):
            start, stop, step = getattr(self, name)
            if not (step > 0 and start <= stop):
                raise ValueError(f"{name}: need step > 0 and start <= stop, got {start}:{stop}:{step}")

    @staticmethod
    def axis(spec) -> list[float]:
        start, stop, step = spec
        n = int(math.floor((stop - start) / step + 1e-9)) + 1
        return [round(start + i * step, 12) + 0.0 for i in range(n)]

    def points(self):
        """Grid points in lexicographic (re_s, im_s, x) order."""
        return sorted(
            (r, i, x) for r in self.axis(self.re_s) for i in self.axis(self.im_s) for x in self.axis(self.x)
        )


def _range_arg(text):
    parts = text.split(":")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected START:STOP:STEP or a number, got {text!r}")
    if len(vals) == 1:
        return (vals[0], vals[0], 1.0)
    if len(vals) != 3:
        raise argparse.ArgumentTypeError(f"expected START:STOP:STEP or a number, got {text!r}")
    return tuple(vals)


def _config(args) -> EvalConfig:
    return EvalConfig(
        abs_tol=args.abs_tol,
        rel_tol=args.rel_tol,
        max_level=args.max_level,
        pole_tol=args.pole_tol,
    )


def evaluate(mode: str, s: complex, x: float, cfg: EvalConfig):
    """Dispatch one point to eta / zeta (x >= 0) or frac (x <= 0); returns a QuadResult."""
    if mode == "eta":
        return eta_incomplete(EtaCoordinatePoint(s, x), cfg, full_output=True)
    if mode == "zeta":
        return zeta_incomplete(EtaCoordinatePoint(s, x), cfg, full_output=True)
    if mode == "frac":
        return frac_integral(FracCoordinatePoint(s, x), cfg, full_output=True)
    raise ValueError(f"unknown mode {mode!r}")


def table_rows(grid: GridSpec, mode: str, cfg: EvalConfig) -> list[dict]:
    """One row per grid point; failures are recorded in ``status`` and never abort the sweep."""
    rows = []
    for re_s, im_s, x in grid.points():
        row = {"re_s": re_s, "im_s": im_s, "x": x, "re_val": None, "im_val": None,
               "err_est": None, "n_evals": None, "status": "ok"}
        try:
            res = evaluate(mode, complex(re_s, im_s), x, cfg)
        except PoleError:
            row["status"] = "pole"
        except DomainError:
            row["status"] = "domain"
        except NonConvergence:
            row["status"] = "nonconvergence"
        else:
            row.update(re_val=res.value.real, im_val=res.value.imag,
                       err_est=res.err_estimate, n_evals=res.n_evals)
        rows.append(row)
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in rows:
        w.writerow([
            repr(r["re_s"]), repr(r["im_s"]), repr(r["x"]),
            "" if r["re_val"] is None else fmt(r["re_val"]),
            "" if r["im_val"] is None else fmt(r["im_val"]),
            "" if r["err_est"] is None else fmt(r["err_est"]),
            "" if r["n_evals"] is None else str(r["n_evals"]),
            r["status"],
        ])
    return buf.getvalue()


def rows_to_json(rows) -> str:
    return json.dumps([{k: r[k] for k in CSV_FIELDS} for r in rows], indent=1) + "\n"


def _write(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_eval(args) -> int:
    res = evaluate(args.mode, args.s, args.x, _config(args))
    if args.format == "json":
        print(json.dumps({"mode": args.mode, "re_s": args.s.real, "im_s": args.s.imag, "x": args.x,
                          "re_val": res.value.real, "im_val": res.value.imag,
                          "err_est": res.err_estimate, "n_evals": res.n_evals}))
    else:
        print(f"mode     {args.mode}")
        print(f"s        {format_complex(args.s)}")
        print(f"x        {args.x!r}")
        print(f"re       {fmt(res.value.real)}")
        print(f"im       {fmt(res.value.imag)}")
        print(f"err_est  {res.err_estimate:.3e}")
        print(f"n_evals  {res.n_evals}")
    return EXIT_OK


def cmd_table(args) -> int:
    try:
        grid = GridSpec(args.re_s, args.im_s, args.x)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rows = table_rows(grid, args.mode, _config(args))
    text = rows_to_csv(rows) if args.format == "csv" else rows_to_json(rows)
    _write(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _config(args)
    reports = run_suite(args.suite, cfg, args.s)
    print(f"# rlzeta {__version__} verify {args.suite}")
    print(f"{'check':<11} {'s':<24} {'x':>7} {'residual':>11} {'tolerance':>11}  status")
    for r in reports:
        print(f"{r.check_name:<11} {format_complex(r.s):<24} {r.x:>7g} {r.residual:>11.3e} {r.tolerance:>11.3e}  {r.status}"
              + (f"  {r.detail}" if r.detail and r.status != "pass" else ""))
    n_fail = sum(not (r.passed or r.skipped) for r in reports)
    n_skip = sum(r.skipped for r in reports)
    print(f"# {len(reports)} checks, {n_fail} failed, {n_skip} skipped")
    return EXIT_OK if suite_passed(reports) else EXIT_VERIFY_FAILED


def cmd_zero_scan(args) -> int:
    if not (0.0 < args.step < args.t_max - args.t_min):
        print("error: need 0 < step < t_max - t_min", file=sys.stderr)
        return EXIT_USAGE
    minima = zero_scan(args.t_min, args.t_max, args.step, _config(args), sigma=args.sigma)
    print("t_star,abs_zeta,is_zero")
    for m in minima:
        print(f"{fmt(m.t)},{fmt(m.abs_zeta)},{int(m.is_zero)}")
    return EXIT_OK


def cmd_symmetry_scan(args) -> int:
    xs = GridSpec.axis(args.x)
    max_dev, rows = symmetry_scan(args.s1, args.s2, xs, _config(args))
    print("x,re_zeta1,im_zeta1,re_zeta2,im_zeta2,abs_diff")
    for x, z1, z2, d in rows:
        print(",".join([repr(x), fmt(z1.real), fmt(z1.imag), fmt(z2.real), fmt(z2.imag), fmt(d)]))
    print(f"# max_deviation {fmt(max_dev)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--abs-tol", type=float, default=1e-11)
    common.add_argument("--rel-tol", type=float, default=1e-11)
    common.add_argument("--max-level", type=int, default=10)
    common.add_argument("--pole-tol", type=float, default=1e-12)

    p = argparse.ArgumentParser(
        prog="rlzeta",
        description="Incomplete eta/zeta functions as Riemann-Liouville fractional integrals.",
        epilog="Complex numbers are written a+bi or a-bi, e.g. 0.5+14.134725i.",
    )
    p.add_argument("--version", action="version", version=f"rlzeta {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate one point")
    e.add_argument("--mode", choices=MODES, required=True,
                   help="eta/zeta: shift x >= 0; frac: upper limit x <= 0")
    e.add_argument("--s", type=_complex_arg, required=True, help="order, a+bi with a > 0")
    e.add_argument("--x", type=float, default=0.0)
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("table", parents=[common], help="tabulate a (Re s, Im s, x) grid")
    t.add_argument("--mode", choices=MODES, required=True)
    t.add_argument("--re-s", type=_range_arg, required=True, help="START:STOP:STEP (inclusive) or a number")
    t.add_argument("--im-s", type=_range_arg, default=(0.0, 0.0, 1.0))
    t.add_argument("--x", type=_range_arg, default=(0.0, 0.0, 1.0))
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--out", default=None, help="output path (default stdout)")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--s", type=_complex_arg, action="append", default=None,
                   help="replace the suite's orders (oracle, bound, derivative); repeatable")
    v.set_defaults(func=cmd_verify)

    z = sub.add_parser("zero-scan", parents=[common], help="minima of |zeta| on Re s = sigma")
    z.add_argument("--t-min", type=float, required=True)
    z.add_argument("--t-max", type=float, required=True)
    z.add_argument("--step", type=float, required=True)
    z.add_argument("--sigma", type=float, default=0.5)
    z.set_defaults(func=cmd_zero_scan)

    y = sub.add_parser("symmetry-scan", parents=[common], help="compare zeta(s1, x) with zeta(s2, x)")
    y.add_argument("--s1", type=_complex_arg, required=True)
    y.add_argument("--s2", type=_complex_arg, required=True)
    y.add_argument("--x", type=_range_arg, default=(-2.0, 0.0, 1.0), help="START:STOP:STEP over x <= 0")
    y.set_defaults(func=cmd_symmetry_scan)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _config(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonConvergence, StepTooLarge) as exc:
        print(f"error: numerical non-convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
