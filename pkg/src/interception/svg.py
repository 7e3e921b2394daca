"""Tiny deterministic SVG writer for the static figures.

Coordinates are rounded to two decimals so identical inputs give
byte-identical files.
"""

from dataclasses import dataclass, field
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 800, 600


def _fmt(v):
    return f"{v:.2f}"


@dataclass
class Panel:
    """A rectangle of the canvas with its own data-to-pixel mapping."""

    left: float
    top: float
    width: float
    height: float
    xlim: tuple
    ylim: tuple
    title: str = ""
    elements: list = field(default_factory=list)

    def to_px(self, x, y):
        (x0, x1), (y0, y1) = self.xlim, self.ylim
        px = self.left + (x - x0) / (x1 - x0) * self.width
        py = self.top + self.height - (y - y0) / (y1 - y0) * self.height
        return px, py

    def polyline(self, xs, ys, color, width=1.5, dash=None):
        pts = " ".join(
            f"{_fmt(px)},{_fmt(py)}" for px, py in (self.to_px(x, y) for x, y in zip(xs, ys))
        )
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        self.elements.append(
            f'<path d="M {pts.replace(" ", " L ")}" fill="none" stroke="{color}" '
            f'stroke-width="{width}"{extra}/>'
        )

    def line(self, p, q, color, width=1.0, dash=None):
        self.polyline([p[0], q[0]], [p[1], q[1]], color, width, dash)

    def point(self, x, y, color, r=3.0, label=None):
        px, py = self.to_px(x, y)
        self.elements.append(f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="{r}" fill="{color}"/>')
        if label:
            self.text(x, y, label, dx=5, dy=-5)

    def text(self, x, y, label, dx=0.0, dy=0.0, size=12):
        px, py = self.to_px(x, y)
        self.elements.append(
            f'<text x="{_fmt(px + dx)}" y="{_fmt(py + dy)}" font-family="sans-serif" '
            f'font-size="{size}">{escape(label)}</text>'
        )

    def render(self):
        clip = f"clip{int(self.left)}_{int(self.top)}"
        out = [
            f'<clipPath id="{clip}"><rect x="{_fmt(self.left)}" y="{_fmt(self.top)}" '
            f'width="{_fmt(self.width)}" height="{_fmt(self.height)}"/></clipPath>',
            f'<rect x="{_fmt(self.left)}" y="{_fmt(self.top)}" width="{_fmt(self.width)}" '
            f'height="{_fmt(self.height)}" fill="white" stroke="#999999"/>',
        ]
        if self.title:
            out.append(
                f'<text x="{_fmt(self.left + self.width / 2)}" y="{_fmt(self.top - 8)}" '
                f'text-anchor="middle" font-family="sans-serif" font-size="14">{escape(self.title)}</text>'
            )
        out.append(f'<g clip-path="url(#{clip})">')
        out.extend(self.elements)
        out.append("</g>")
        return "\n".join(out)


@dataclass
class Figure:
    title: str
    panels: list = field(default_factory=list)

    def add_panel(self, *args, **kwargs):
        panel = Panel(*args, **kwargs)
        self.panels.append(panel)
        return panel

    def render(self):
        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" '
            f'width="{WIDTH}" height="{HEIGHT}">',
            f"<title>{escape(self.title)}</title>",
            f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        ]
        parts.extend(p.render() for p in self.panels)
        parts.append("</svg>")
        return "\n".join(parts) + "\n"
