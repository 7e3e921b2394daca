"""Named numerical checks grouped into suites, shared by the CLI and the tests.

Each check reports the worst residual it saw and the tolerance it is held
to. Everything is deterministic: grids are fixed and random draws are seeded.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import lemmas, planar, projections, pursuit, spherical
from .numerics import integrate, lemniscate_constants

REFERENCE_B_SQUARED = 0.3588850048
P_GRID = np.logspace(-2, 3, 50)
P_GRID_WIDE = np.logspace(-2, 5, 50)
THETA_GRID = np.linspace(0.05, 20.0, 60)
ARC_LENGTH_PS = (0.5, 1.0, 5.0, 20.0)
MONTE_CARLO_SEED = 12345


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self):
        return bool(self.residual <= self.tolerance)  # NaN fails

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name},{self.residual:.6e},{self.tolerance:.1e},{status}"


def _worst(values):
    return float(max(values))


# -- planar -------------------------------------------------------------------


def planar_checks(seed=MONTE_CARLO_SEED):
    states = [planar.state_at(p) for p in P_GRID]
    checks = [
        Check(
            "implicit_relation",
            _worst(abs(planar.state_at(p).implicit_residual) for p in P_GRID_WIDE),
            1e-10,
        )
    ]

    residuals = [planar.triangle_elements(s).tangent_line_residuals() for s in states]
    for key in residuals[0]:
        checks.append(Check(f"tangent_line[{key}]", _worst(r[key] for r in residuals), 1e-10))

    def rel(a, b):
        return abs(a - b) / max(abs(a), abs(b))

    checks.append(
        Check(
            "tangent_circles[rP=rQ]",
            _worst(rel(*planar.tangent_circle_radii(s)) for s in states),
            1e-10,
        )
    )
    checks.append(
        Check(
            "tangent_circles[constructed circles]",
            _worst(
                max(
                    rel(a, b)
                    for a, b in zip(
                        planar.tangent_circle_radii(s), planar.tangent_circle_radii_constructed(s)
                    )
                )
                for s in states
            ),
            1e-10,
        )
    )

    gaps = [planar.horizontal_gap(p) for p in np.logspace(-2, 5, 60)]
    checks.append(Check("gap_nondecreasing", max(0.0, -min(np.diff(gaps))), 0.0))

    arc = [planar.arc_length_check(p) for p in ARC_LENGTH_PS]
    checks.append(Check("arc_length=y/x", _worst(abs(a - c) for a, c in arc), 1e-8))

    thetas = np.linspace(0.0, 0.3, 31)
    trajectory = planar.polar_solution(0.3)
    checks.append(
        Check(
            "series_vs_polar_ivp[0,0.3]",
            _worst(abs(trajectory(t)[0] - planar.series_solution(t)) for t in thetas),
            1e-6,
        )
    )

    alt_implicit, alt_match = [], []
    for q in (1.5, 2.0, 5.0, 50.0):
        for alt in (planar.state_at_alt1(q), planar.state_at_alt2(q)):
            alt_implicit.append(abs(alt.implicit_residual))
            alt_match.append(abs(planar.state_at_x(alt.x).y - alt.y))
    checks.append(Check("alt_parametrizations_implicit", _worst(alt_implicit), 1e-9))
    checks.append(Check("alt_parametrizations_matched_y", _worst(alt_match), 1e-8))

    consts = lemniscate_constants()
    checks.append(Check("B_three_routes", consts.max_route_spread, 1e-12))
    checks.append(Check("B^2*4G^2=1", abs(consts.B_squared * 4 * consts.G**2 - 1.0), 1e-10))
    identity = integrate(
        lambda s: np.sqrt(np.cos(s)) / (2.0 * (1.0 + np.sin(s))), 0.0, math.pi / 2, 1e-13
    ).value
    checks.append(Check("integral_identity=1-B", abs(identity - (1.0 - consts.B)), 1e-10))

    lim_pq = planar.limit_PQ().value
    lim_pt = planar.limit_PT_minus_TQ().value
    checks.append(Check("limit_PQ=B^2(stated digits)", abs(lim_pq - REFERENCE_B_SQUARED), 1e-6))
    checks.append(Check("limit_PQ=B^2(computed)", abs(lim_pq - consts.B_squared), 1e-6))
    checks.append(Check("limit_PT-TQ=limit_PQ", abs(lim_pt - lim_pq), 1e-6))

    checks.extend(pursuit_checks(lim_pq))
    return checks


def pursuit_checks(lim_pq=None):
    xs = np.linspace(0.0, 0.99, 100)
    trajectory = pursuit.pursuit_ivp(0.99)
    ivp_err = _worst(abs(trajectory(x)[0] - pursuit.bouguer_y(x)) for x in xs)
    speed = [pursuit.pursuit_equal_speed_check(x) for x in xs]
    gap_err = _worst(abs(pursuit.bouguer(x).gap - pursuit.gap_formula(x)) for x in xs)
    if lim_pq is None:
        lim_pq = planar.limit_PQ().value
    return [
        Check("pursuit_closed_form_vs_ivp", ivp_err, 1e-8),
        Check("pursuit_equal_speed", _worst(abs(a - b) for a, b in speed), 1e-8),
        Check("pursuit_gap_law", gap_err, 1e-12),
        Check("interception_beats_pursuit", max(0.0, lim_pq - 0.5), 0.0),
    ]


# -- sphere -------------------------------------------------------------------


def spherical_checks(seed=MONTE_CARLO_SEED):
    elements = [spherical.triangle_elements_sph(t) for t in THETA_GRID]
    res = [e.arc_identity_residuals() for e in elements]
    checks = [
        Check("sphere_triangle[PT+QT=pi/2]", _worst(r["PT+QT=pi/2"] for r in res), 1e-12),
        Check("sphere_triangle[angQPT=BP]", _worst(r["angQPT=BP"] for r in res), 1e-11),
        Check("sphere_triangle[angBPT=PQ+pi/2]", _worst(r["angBPT=PQ+pi/2"] for r in res), 1e-11),
        Check(
            "sphere_triangle[vector_vs_closed_form]",
            _worst(spherical.closed_form_deviation(e) for e in elements),
            1e-12,
        ),
    ]
    qt = [e.arc_QT for e in elements]
    pt = [e.arc_PT for e in elements]
    checks.append(
        Check(
            "sphere_triangle[QT increasing, PT decreasing]",
            max(0.0, -min(np.diff(qt)), max(np.diff(pt))),
            0.0,
        )
    )
    far = spherical.triangle_elements_sph(20.0)
    checks.append(
        Check(
            "sphere_triangle[arcs->pi/4 at 20]",
            max(abs(far.arc_PT - math.pi / 4), abs(far.arc_QT - math.pi / 4)),
            1e-8,
        )
    )

    theta1 = spherical.triangle_elements_sph(1.0)
    checks.append(
        Check(
            "spherical_pythagoras",
            abs(math.cos(theta1.arc_PT) - math.cos(theta1.arc_PQ) * math.cos(theta1.arc_QT)),
            1e-12,
        )
    )

    gaps = [spherical.closed_forms_sph(t)["arc_PQ"] for t in THETA_GRID]
    checks.append(Check("sphere_gap[pi/2-phi(10)]", math.pi / 2 - spherical.gd(10.0), 1e-4))
    checks.append(Check("sphere_gap[monotone]", max(0.0, max(np.diff(gaps))), 0.0))

    radii = [spherical.small_circle_radius(t) for t in THETA_GRID]
    checks.append(
        Check(
            "small_circle[formula=constructed]",
            _worst(
                abs(r - spherical.small_circle_radius_constructed(t))
                for r, t in zip(radii, THETA_GRID)
            ),
            1e-10,
        )
    )
    checks.append(
        Check(
            "small_circle[tan^2R->1/4]",
            abs(math.tan(spherical.small_circle_radius(1e-6)) ** 2 - 0.25),
            1e-10,
        )
    )
    checks.append(Check("small_circle[R increasing]", max(0.0, -min(np.diff(radii))), 0.0))

    arcs = [spherical.arc_length_check_sph(t) for t in (1.0, 5.0)]
    checks.append(Check("arc_length_sph=theta", _worst(abs(a - c) for a, c in arcs), 1e-10))

    speeds = []
    for t in THETA_GRID:
        # divide by the step actually taken, not the nominal 2h
        hi, lo = t + projections.FD_STEP, t - projections.FD_STEP
        chord = spherical.gd_curve(hi).vec - spherical.gd_curve(lo).vec
        speeds.append(np.linalg.norm(chord) / (hi - lo))
    checks.append(Check("unit_speed", _worst(abs(s - 1.0) for s in speeds), 1e-9))
    return checks


# -- projections --------------------------------------------------------------


def projection_checks(seed=MONTE_CARLO_SEED):
    conf = [projections.conformality_check(t) for t in THETA_GRID]
    checks = [Check("cot(angBPT)=-1/sinh", _worst(abs(a - b) for a, b in conf), 1e-10)]

    xs = np.linspace(0.05, 5.0, 60)
    twice = [projections.mercator_image_curve(projections.mercator_image_curve(x).y).y for x in xs]
    checks.append(
        Check("mercator_self_inverse", _worst(abs(t - x) for t, x in zip(twice, xs)), 1e-12)
    )

    merc = [
        projections.mercator(spherical.gd_curve(t)).y - projections.mercator_image_curve(t).y
        for t in THETA_GRID
    ]
    checks.append(Check("mercator(gd)=ln coth", _worst(np.abs(merc)), 1e-10))
    stereo = [
        projections.stereographic(spherical.gd_curve(t)).r
        / projections.stereographic_image_curve(t).r
        - 1.0
        for t in THETA_GRID
    ]
    checks.append(Check("stereographic(gd)=coth", _worst(np.abs(stereo)), 1e-12))

    spiral_thetas = np.linspace(-3.0, 3.0, 61)
    spirals = [projections.spherical_spiral(t) for t in spiral_thetas]
    checks.append(
        Check(
            "mercator(spiral)=helix",
            _worst(
                abs(projections.mercator(s).y - projections.helix(t).y)
                for s, t in zip(spirals, spiral_thetas)
            ),
            1e-10,
        )
    )
    checks.append(
        Check(
            "stereographic(spiral)=e^theta",
            _worst(
                abs(projections.stereographic(s).r / projections.log_spiral(t).r - 1.0)
                for s, t in zip(spirals, spiral_thetas)
            ),
            1e-12,
        )
    )
    checks.append(
        Check(
            "spiral_meridian_angle=pi/4",
            _worst(
                abs(projections.meridian_crossing_angle(t) - math.pi / 4) for t in spiral_thetas
            ),
            1e-10,
        )
    )
    checks.append(
        Check(
            "asymptote_y(0.01)=2", abs(projections.stereographic_asymptote_check(0.01) - 2.0), 1e-4
        )
    )
    checks.append(
        Check(
            "right_angle_intersections", projections.right_angle_intersections().max_residual, 1e-9
        )
    )

    rng = np.random.default_rng(seed)
    worst_m = worst_s = 0.0
    for _ in range(100):
        v = rng.normal(size=3)
        v /= np.linalg.norm(v)
        if abs(v[2]) > 0.95:
            continue
        u1, u2 = rng.normal(size=3), rng.normal(size=3)
        worst_m = max(
            worst_m, projections.differential_angle_error(projections.mercator_xy, v, u1, u2)
        )
        worst_s = max(
            worst_s, projections.differential_angle_error(projections.stereographic_xy, v, u1, u2)
        )
    checks.append(Check("mercator_conformal", worst_m, 1e-9))
    checks.append(Check("stereographic_conformal", worst_s, 1e-9))
    return checks


# -- lemmas -------------------------------------------------------------------


def lemma_checks(seed=MONTE_CARLO_SEED):
    config = lemmas.build_spherical_config(0.3, 0.5)
    checks = [
        Check("lemma1[(0.3,0.5)]", max(lemmas.verify_lemma1(config).values()), 1e-10),
        Check("lemma1[P1P2=Q1Q2]", config.constraint_residual, 1e-12),
        Check("lemma1[P1,P2,T coplanar]", config.coplanarity_residual, 1e-12),
    ]
    for report in (
        lemmas.monte_carlo_lemma1(seed=seed),
        lemmas.monte_carlo_lemma2(seed=seed),
        lemmas.monte_carlo_lemma3(seed=seed),
    ):
        checks.append(
            Check(
                f"{report.name}[monte_carlo n={report.draws}]",
                report.max_residual,
                report.tolerance,
            )
        )
    for seq in lemmas.limiting_case_convergence().sequences:
        checks.append(Check(f"{seq.name}[residual at 1e-3]", seq.residuals[-1], 1e-3))
        checks.append(
            Check(
                f"{seq.name}[order shortfall]",
                max(0.0, 1.0 - seq.observed_order),
                1.0 - lemmas.MIN_ORDER,
            )
        )
    return checks


SUITES = {
    "planar": planar_checks,
    "spherical": spherical_checks,
    "projections": projection_checks,
    "lemmas": lemma_checks,
}


def run_suite(name, seed=MONTE_CARLO_SEED):
    """Run one suite, or every suite for ``name == "all"``; seeds only affect random draws."""
    if name == "all":
        return [check for suite in SUITES.values() for check in suite(seed)]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    return SUITES[name](seed)
