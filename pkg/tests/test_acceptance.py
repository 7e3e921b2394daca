"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import io
import math
import subprocess
import sys
import time
from contextlib import redirect_stdout

import numpy as np
from conftest import ACCEPTANCE_LINES

from interception import cli, planar, projections, pursuit, spherical
from interception.lemmas import (
    MIN_ORDER,
    limiting_case_convergence,
    monte_carlo_lemma1,
    monte_carlo_lemma2,
    monte_carlo_lemma3,
)
from interception.numerics import integrate, lemniscate_constants

P_GRID = np.logspace(-2, 3, 50)
THETA_GRID = np.linspace(0.05, 20.0, 60)


def report(number, ok, detail):
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def test_criterion_01_lemniscate_constant_from_limit():
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "interception", "limits"], capture_output=True, text=True
    )
    elapsed = time.perf_counter() - start
    rows = {line.split(",")[0]: line.split(",") for line in proc.stdout.splitlines()[1:]}
    value = float(rows["lim_PQ_interception"][1])
    err = abs(value - 0.3588850048)
    report(
        1,
        err < 1e-6 and elapsed < 10.0,
        f"lim|PQ| = {value:.10f}, |err| = {err:.2e} < 1e-6, {elapsed:.1f} s < 10 s",
    )


def test_criterion_02_three_routes():
    c = lemniscate_constants()
    spread = c.max_route_spread
    gauss = abs(c.B_squared - 1.0 / (4.0 * c.G**2))
    report(
        2,
        spread < 1e-12 and gauss < 1e-10,
        f"route spread {spread:.2e} < 1e-12, |B^2 - 1/(4G^2)| = {gauss:.2e} < 1e-10",
    )


def test_criterion_03_integral_identity():
    res = integrate(lambda s: np.sqrt(np.cos(s)) / (2 * (1 + np.sin(s))), 0.0, math.pi / 2, 1e-13)
    err = abs(res.value - (1.0 - lemniscate_constants().B))
    report(3, err < 1e-10, f"|integral - (1 - B)| = {err:.2e} < 1e-10")


def test_criterion_04_tangent_line_identities():
    worst = max(
        max(planar.triangle_elements(planar.state_at(p)).tangent_line_residuals().values())
        for p in P_GRID
    )
    report(4, worst < 1e-10, f"max tangent-line residual on 50-point grid {worst:.2e} < 1e-10")


def test_criterion_05_tangent_circles():
    worst = 0.0
    for p in P_GRID:
        r_p, r_q = planar.tangent_circle_radii(planar.state_at(p))
        worst = max(worst, abs(r_p - r_q) / r_q)
    report(5, worst < 1e-10, f"max |rP - rQ|/rQ = {worst:.2e} < 1e-10")


def test_criterion_06_second_limit():
    diff = abs(planar.limit_PT_minus_TQ().value - planar.limit_PQ().value)
    report(6, diff < 1e-6, f"|lim(PT - TQ) - lim PQ| = {diff:.2e} < 1e-6")


def test_criterion_07_arc_length():
    worst = max(abs(a - c) for a, c in map(planar.arc_length_check, (0.5, 1.0, 5.0, 20.0)))
    report(7, worst < 1e-8, f"max |arc - y/x| at p in {{0.5, 1, 5, 20}} = {worst:.2e} < 1e-8")


def test_criterion_08_series_vs_ode():
    traj = planar.polar_solution(0.3)
    worst = max(abs(planar.series_solution(t) - traj(t)[0]) for t in np.linspace(0.0, 0.3, 61))
    report(8, worst < 1e-6, f"max |series - IVP| on [0, 0.3] = {worst:.2e} < 1e-6")


def test_criterion_09_pursuit():
    traj = pursuit.pursuit_ivp(0.99)
    worst = max(abs(traj(x)[0] - pursuit.bouguer_y(x)) for x in np.linspace(0.0, 0.99, 100))
    limit_gap = pursuit.comparison_report().as_dict()["pursuit"]
    closed = 0.5 + 0.5 * (1.0 - 1.0) ** 2
    beats = pursuit.comparison_report().interception_beats_pursuit
    ok = worst < 1e-8 and limit_gap == 0.5 == closed and beats
    report(
        9,
        ok,
        f"|closed form - IVP| = {worst:.2e} < 1e-8, lim gap = {limit_gap}, B^2 < 1/2: {beats}",
    )


def test_criterion_10_sphere_triangle():
    res = [spherical.triangle_elements_sph(t).arc_identity_residuals() for t in THETA_GRID]
    arcs = max(r["PT+QT=pi/2"] for r in res)
    angles = max(max(r["angQPT=BP"], r["angBPT=PQ+pi/2"]) for r in res)
    far = spherical.triangle_elements_sph(20.0)
    quarter = max(abs(far.arc_PT - math.pi / 4), abs(far.arc_QT - math.pi / 4))
    ok = arcs < 1e-12 and angles < 1e-11 and quarter < 1e-8
    report(
        10,
        ok,
        f"arcs {arcs:.2e} < 1e-12, angles {angles:.2e} < 1e-11, pi/4 at 20: {quarter:.2e} < 1e-8",
    )


def test_criterion_11_sphere_gap():
    gap10 = math.pi / 2 - spherical.gd_curve(10.0).phi
    gaps = [math.pi / 2 - spherical.gd_curve(t).phi for t in THETA_GRID]
    monotone = all(a > b for a, b in zip(gaps, gaps[1:]))
    report(
        11,
        gap10 < 1e-4 and monotone,
        f"pi/2 - phi(10) = {gap10:.2e} < 1e-4, strictly decreasing: {monotone}",
    )


def test_criterion_12_small_circle():
    worst = max(
        abs(spherical.small_circle_radius(t) - spherical.small_circle_radius_constructed(t))
        for t in THETA_GRID
    )
    approach = [
        abs(math.tan(spherical.small_circle_radius(t)) ** 2 - 0.25)
        for t in (1e-1, 1e-2, 1e-3, 1e-6)
    ]
    decreasing = all(a > b for a, b in zip(approach, approach[1:]))
    ok = worst < 1e-10 and decreasing and approach[-1] < 1e-10
    report(
        12,
        ok,
        f"formula vs construction {worst:.2e} < 1e-10, |tan^2 R - 1/4| at 1e-6 = {approach[-1]:.1e}",
    )


def test_criterion_13_conformality():
    cot = max(abs(a - b) for a, b in map(projections.conformality_check, THETA_GRID))
    xs = np.linspace(0.05, 5.0, 60)
    inverse = max(
        abs(projections.mercator_image_curve(projections.mercator_image_curve(x).y).y - x)
        for x in xs
    )
    stereo = max(
        abs(projections.stereographic(spherical.gd_curve(t)).r * math.tanh(t / 2) - 1.0)
        for t in THETA_GRID
    )
    asym = abs(projections.stereographic_asymptote_check(0.01) - 2.0)
    ok = cot < 1e-10 and inverse < 1e-12 and stereo < 1e-12 and asym < 1e-4
    report(
        13,
        ok,
        f"cot {cot:.2e} < 1e-10, self-inverse {inverse:.2e} < 1e-12, coth(theta/2) rel {stereo:.2e} < 1e-12, "
        f"|y(0.01) - 2| = {asym:.2e} < 1e-4",
    )


def test_criterion_14_lemmas():
    mc = [monte_carlo_lemma1(200), monte_carlo_lemma2(200), monte_carlo_lemma3(500)]
    conv = limiting_case_convergence()
    orders = [s.observed_order for s in conv.sequences]
    monotone = all(s.monotone for s in conv.sequences)
    ok = all(r.passed for r in mc) and monotone and min(orders) >= MIN_ORDER >= 1.0
    detail = ", ".join(f"{r.name} {r.max_residual:.1e} < {r.tolerance:.0e}" for r in mc)
    report(14, ok, f"{detail}; observed orders {', '.join(f'{o:.4f}' for o in orders)} (need >= 1)")


def test_criterion_15_determinism_and_runtime():
    outputs = []
    start = time.perf_counter()
    for _ in range(2):
        buf = io.StringIO()
        with redirect_stdout(buf):
            cli.main(["verify", "all"])
        outputs.append(buf.getvalue())
    elapsed = (time.perf_counter() - start) / 2
    same = outputs[0] == outputs[1]
    report(
        15,
        same and elapsed < 60.0,
        f"identical reports: {same}, verify all took {elapsed:.1f} s < 60 s",
    )
