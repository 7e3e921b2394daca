"""Static SVG versions of the four figures."""

import math

import numpy as np

from . import planar, projections, pursuit, spherical
from .svg import Figure

BLUE = "#1f4fd1"
LIGHT_BLUE = "#5bc0eb"
DARK_BLUE = "#0b1f66"
RED = "#d62728"
GREEN = "#2ca02c"
BLACK = "#000000"
ORANGE = "#ff7f0e"
PURPLE = "#7b3fa0"
YELLOW = "#e6c300"
GREY = "#bbbbbb"

AZIMUTH = math.radians(30.0)
ELEVATION = math.radians(25.0)


def _planar_curve(p_max=60.0, n=400):
    # denser near the origin where the curve turns fastest
    ps = np.concatenate([[0.0], np.geomspace(1e-3, p_max, n - 1)])
    xs, ys, _ = planar.sample(ps)
    return xs, ys


def _draw_interception(panel, color, tangent_color, position_color, barrier_color, p=1.0):
    xs, ys = _planar_curve()
    state = planar.state_at(p)
    tri = planar.triangle_elements(state)
    panel.line((1.0, -1.0), (1.0, 6.0), barrier_color, width=2.5)
    panel.line((0.0, 0.0), tuple(tri.Q * 1.6), position_color, width=1.0)
    panel.line(tuple(tri.U), tuple(tri.T + (tri.T - tri.U) * 0.3), tangent_color, width=1.2)
    panel.polyline(xs, ys, color, width=2.0)
    for name in ("P", "Q", "T", "U"):
        pt = getattr(tri, name)
        panel.point(pt[0], pt[1], BLACK, label=name)
    panel.point(0.0, 0.0, BLACK, label="O")


def fig1():
    fig = Figure("Interception curve on a plane")
    panel = fig.add_panel(
        60, 40, 680, 520, (-0.2, 1.4), (-0.6, 3.0), title="Interception curve on a plane"
    )
    _draw_interception(panel, BLUE, BLACK, BLACK, BLUE)
    return fig


def fig2():
    fig = Figure("Interception and pursuit curves")
    left = fig.add_panel(30, 40, 360, 520, (-0.2, 1.4), (-0.6, 3.0), title="Interception")
    _draw_interception(left, RED, GREEN, BLUE, BLUE)

    right = fig.add_panel(410, 40, 360, 520, (-0.2, 1.4), (-0.6, 3.0), title="Pursuit")
    xs = np.linspace(0.0, 0.995, 400)
    ys = [pursuit.bouguer_y(x) for x in xs]
    state = pursuit.bouguer(0.6)
    evader = (1.0, state.evader_height)
    right.line((1.0, -1.0), (1.0, 6.0), BLUE, width=2.5)
    right.line((0.0, 0.0), (state.x * 3, state.y * 3), BLUE, width=0.8)
    right.line((state.x, state.y), evader, GREEN, width=1.2)
    right.polyline(xs, ys, RED, width=2.0)
    right.point(state.x, state.y, BLACK, label="P")
    right.point(*evader, BLACK, label="Q")
    right.point(0.0, 0.0, BLACK, label="O")
    return fig


def _camera():
    ca, sa, ce, se = math.cos(AZIMUTH), math.sin(AZIMUTH), math.cos(ELEVATION), math.sin(ELEVATION)
    view = np.array([ce * ca, ce * sa, se])
    right = np.array([-sa, ca, 0.0])
    up = np.cross(view, right)
    return view, right, up


def _draw_sphere_curve(panel, points, color, width=1.5):
    """Front side solid, back side dashed."""
    view, right, up = _camera()
    points = np.asarray(points)
    front = points @ view >= 0
    start = 0
    for i in range(1, len(points) + 1):
        if i == len(points) or front[i] != front[start]:
            seg = points[start : min(i + 1, len(points))]
            panel.polyline(
                seg @ right,
                seg @ up,
                color,
                width if front[start] else width * 0.6,
                None if front[start] else "4 3",
            )
            start = i


def _great_circle(normal, n=361):
    normal = normal / np.linalg.norm(normal)
    e1 = np.cross(normal, [0.0, 0.0, 1.0] if abs(normal[2]) < 0.9 else [1.0, 0.0, 0.0])
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(normal, e1)
    t = np.linspace(0.0, 2 * math.pi, n)
    return np.outer(np.cos(t), e1) + np.outer(np.sin(t), e2)


def fig3(theta=1.0):
    fig = Figure("Interception curve on a unit sphere")
    panel = fig.add_panel(
        100, 40, 600, 520, (-1.25, 1.25), (-1.08, 1.08), title="Interception curve on a unit sphere"
    )
    t = np.linspace(0, 2 * math.pi, 361)
    panel.polyline(np.cos(t), np.sin(t), GREY, width=1.0)

    _draw_sphere_curve(panel, _great_circle(np.array([0.0, 0.0, 1.0])), BLACK)
    meridian_normal = np.array([-math.sin(theta), math.cos(theta), 0.0])
    _draw_sphere_curve(panel, _great_circle(meridian_normal), RED)
    _draw_sphere_curve(
        panel, _great_circle(spherical.tangent_great_circle(theta).normal), DARK_BLUE
    )
    curve = [spherical.gd_curve(s).vec for s in np.linspace(0.0, 4 * math.pi, 800)]
    _draw_sphere_curve(panel, curve, LIGHT_BLUE, width=2.5)

    _, right, up = _camera()
    tri = spherical.triangle_elements_sph(theta)
    for name, vec in (("B", spherical.POLE), ("P", tri.P.vec), ("Q", tri.Q.vec), ("T", tri.T.vec)):
        panel.point(vec @ right, vec @ up, BLACK, label=name)
    return fig


def fig4():
    fig = Figure("Mercator and stereographic projections")
    cyl = fig.add_panel(40, 40, 340, 520, (0.0, 3.0), (-0.2, 3.5), title="Cylinder (Mercator)")
    xs = np.linspace(0.05, 3.0, 300)
    cyl.polyline(xs, [projections.mercator_image_curve(x).y for x in xs], GREEN, width=2.0)
    cyl.polyline(xs, [projections.helix(x).y for x in xs], ORANGE, width=2.0)
    report = projections.right_angle_intersections()
    cyl.point(report.x_star, report.x_star, BLACK, label="90°")

    plane = fig.add_panel(
        420, 40, 340, 520, (-3.0, 3.0), (-2.5, 3.2), title="Plane (stereographic)"
    )
    t = np.linspace(0, 2 * math.pi, 361)
    plane.polyline(np.cos(t), np.sin(t), GREY, width=1.0)
    plane.line((-3.5, 2.0), (3.5, 2.0), YELLOW, width=1.5)
    thetas = np.linspace(0.03, 3 * math.pi, 600)
    pts = [projections.stereographic_image_curve(s).xy for s in thetas]
    plane.polyline([p[0] for p in pts], [p[1] for p in pts], BLACK, width=1.8)
    thetas = np.linspace(-4.0, 1.2, 400)
    pts = [projections.log_spiral(s).xy for s in thetas]
    plane.polyline([p[0] for p in pts], [p[1] for p in pts], PURPLE, width=1.8)
    meet = projections.log_spiral(report.x_star).xy
    plane.point(meet[0], meet[1], BLACK, label="90°")
    return fig


FIGURES = {"fig1": fig1, "fig2": fig2, "fig3": fig3, "fig4": fig4}
