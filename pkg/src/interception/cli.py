"""Command-line front end.

    interception sample planar_interception --range 0 10 --n 100 --out curve.csv
    interception verify all
    interception limits
    interception compare
    interception plot fig3 --out sphere.svg

Exit codes: 0 when every check passes, 1 when a check fails, 2 on errors.
"""

import argparse
import csv
import io
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import __version__, planar, projections, pursuit, spherical
from .errors import DomainError, InterceptionError
from .figures import FIGURES
from .numerics import lemniscate_constants
from .verification import MONTE_CARLO_SEED, REFERENCE_B_SQUARED, run_suite

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


@dataclass(frozen=True)
class CurveSampleSet:
    curve_id: str
    columns: tuple
    rows: list
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError("row length does not match the header")
            if not all(math.isfinite(v) for v in row):
                raise DomainError(f"non-finite sample in {self.curve_id}: {row}")

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow(f"{v:.17g}" for v in row)
        return buf.getvalue()


def _planar_rows(ps):
    xs, ys, gaps = planar.sample(ps)
    rows = []
    for p, x, y, g in zip(ps, xs, ys, gaps):
        pq = math.hypot(g, g * y / x) if x > 0 else 1.0
        rows.append((p, x, y, math.atan2(y, x), pq))
    return rows


def _sphere_rows(points):
    return [(p.theta, p.phi, *p.vec) for p in points]


def _polar_rows(points):
    return [(p.angle, p.r, *p.xy) for p in points]


# curve id -> (default range, lower bound check, columns, row builder)
CURVES = {
    "planar_interception": (
        (0.0, 10.0),
        lambda lo, hi: lo >= 0,
        ("p", "x", "y", "theta", "pq"),
        _planar_rows,
    ),
    "pursuit": (
        (0.0, 0.9),
        lambda lo, hi: lo >= 0 and hi < 1,
        ("x", "y", "slope", "gap"),
        lambda xs: [(b.x, b.y, b.slope, b.gap) for b in map(pursuit.bouguer, xs)],
    ),
    "spherical_interception": (
        (0.0, 5.0),
        lambda lo, hi: lo >= 0,
        ("theta", "phi", "X", "Y", "Z"),
        lambda ts: _sphere_rows(map(spherical.gd_curve, ts)),
    ),
    "mercator_image": (
        (0.1, 5.0),
        lambda lo, hi: lo > 0,
        ("x", "y"),
        lambda ts: [(c.x, c.y) for c in (projections.mercator(spherical.gd_curve(t)) for t in ts)],
    ),
    "stereographic_image": (
        (0.1, 5.0),
        lambda lo, hi: lo > 0,
        ("theta", "r", "X", "Y"),
        lambda ts: _polar_rows(projections.stereographic(spherical.gd_curve(t)) for t in ts),
    ),
    "spherical_spiral": (
        (-3.0, 3.0),
        lambda lo, hi: True,
        ("theta", "phi", "X", "Y", "Z"),
        lambda ts: _sphere_rows(map(projections.spherical_spiral, ts)),
    ),
    "helix": (
        (-3.0, 3.0),
        lambda lo, hi: True,
        ("x", "y"),
        lambda xs: [(c.x, c.y) for c in map(projections.helix, xs)],
    ),
    "log_spiral": (
        (-3.0, 3.0),
        lambda lo, hi: True,
        ("theta", "r", "X", "Y"),
        lambda ts: _polar_rows(map(projections.log_spiral, ts)),
    ),
}


def sample_curve(curve_id, value_range=None, n=100):
    try:
        default, valid, columns, build = CURVES[curve_id]
    except KeyError:
        raise DomainError(f"unknown curve {curve_id!r}; choose from {sorted(CURVES)}") from None
    lo, hi = default if value_range is None else map(float, value_range)
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if not (lo < hi and valid(lo, hi)):
        raise DomainError(f"invalid range [{lo}, {hi}] for {curve_id}")
    params = np.linspace(lo, hi, n)
    meta = {"range": (lo, hi), "n": n, "version": __version__}
    return CurveSampleSet(curve_id, columns, [tuple(map(float, r)) for r in build(params)], meta)


def _write(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_sample(args):
    samples = sample_curve(args.curve, args.range, args.n)
    _write(samples.to_csv(), args.out)
    return EXIT_OK


def cmd_verify(args):
    checks = run_suite(args.suite, args.seed)
    lines = ["name,residual,tolerance,status"] + [c.line() for c in checks]
    failed = sum(not c.passed for c in checks)
    lines.append(f"# {len(checks) - failed}/{len(checks)} checks passed")
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def limits_rows(tol=1e-6):
    """(name, value, reference, residual, tolerance) rows for the limits report."""
    consts = lemniscate_constants()
    lim_pq = planar.limit_PQ()
    lim_pt = planar.limit_PT_minus_TQ()
    pursuit_gap = pursuit.comparison_report(()).as_dict()["pursuit"]
    nan = float("nan")
    return [
        ("B_agm", consts.B_agm, consts.B, abs(consts.B_agm - consts.B), 1e-12),
        ("B_quadrature", consts.B_quadrature, consts.B, abs(consts.B_quadrature - consts.B), 1e-12),
        ("B_gamma", consts.B_gamma, consts.B, 0.0, 1e-12),
        ("G", consts.G, nan, nan, nan),
        (
            "B^2",
            consts.B_squared,
            REFERENCE_B_SQUARED,
            abs(consts.B_squared - REFERENCE_B_SQUARED),
            1e-9,
        ),
        (
            "B^2*4G^2-1",
            consts.B_squared * 4 * consts.G**2 - 1.0,
            0.0,
            abs(consts.B_squared * 4 * consts.G**2 - 1.0),
            1e-10,
        ),
        (
            "lim_PQ_interception",
            lim_pq.value,
            REFERENCE_B_SQUARED,
            abs(lim_pq.value - REFERENCE_B_SQUARED),
            tol,
        ),
        ("lim_PT_minus_TQ", lim_pt.value, lim_pq.value, abs(lim_pt.value - lim_pq.value), tol),
        ("lim_PQ_pursuit", pursuit_gap, 0.5, abs(pursuit_gap - 0.5), 0.0),
    ]


def _fmt(v):
    return "" if isinstance(v, float) and math.isnan(v) else f"{v:.17g}"


def cmd_limits(args):
    rows = limits_rows(args.tol)
    lines = ["name,value,reference,residual,tolerance,status"]
    failed = 0
    for name, value, ref, residual, tol in rows:
        if math.isnan(residual):
            status = ""
        else:
            ok = residual <= tol
            failed += not ok
            status = "PASS" if ok else "FAIL"
        lines.append(",".join([name, _fmt(value), _fmt(ref), _fmt(residual), _fmt(tol), status]))
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_compare(args):
    report = pursuit.comparison_report()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("strategy", "limit_gap", "note"))
    writer.writerows((r.strategy, f"{r.limit_gap:.17g}", r.note) for r in report.rows)
    writer.writerow(("interception_beats_pursuit", report.interception_beats_pursuit, "B^2 < 1/2"))
    _write(buf.getvalue(), args.out)
    return EXIT_OK if report.interception_beats_pursuit else EXIT_FAIL


def cmd_plot(args):
    _write(FIGURES[args.figure]().render(), args.out or f"{args.figure}.svg")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="interception", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="sample a curve to CSV")
    p.add_argument("curve", choices=sorted(CURVES))
    p.add_argument("--range", nargs=2, type=float, metavar=("LO", "HI"))
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=["planar", "spherical", "projections", "lemmas", "all"],
    )
    p.add_argument("--seed", type=int, default=MONTE_CARLO_SEED, help="Monte-Carlo seed")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("limits", help="lemniscate constants and the limiting gaps")
    p.add_argument("--tol", type=float, default=1e-6, help="tolerance for the extrapolated limits")
    p.add_argument("--out")
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("compare", help="interception vs pursuit vs straight lines")
    p.add_argument("--out")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("plot", help="write one of the figures as SVG")
    p.add_argument("figure", choices=sorted(FIGURES))
    p.add_argument("--out", help="output path (default <figure>.svg)")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InterceptionError, ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
