"""Standalone SVG rendering of the polar complexity chart.

The document contains exactly one ``<path>`` element per measure wedge;
grid rings, sector separators and labels use non-path primitives so tests
can count wedges structurally.
"""
from __future__ import annotations

import math

from .calculator import PolarPlotSpec

SIZE = 520
CENTER = SIZE / 2
RADIUS = 200.0


def _polar(theta_deg: float, radius: float) -> tuple[float, float]:
    # degrees clockwise from 12 o'clock, SVG y axis points down
    rad = math.radians(theta_deg)
    return CENTER + radius * math.sin(rad), CENTER - radius * math.cos(rad)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _wedge_path(theta0: float, theta1: float, radius: float) -> str:
    r = radius * RADIUS
    x0, y0 = _polar(theta0, r)
    x1, y1 = _polar(theta1, r)
    return (
        f"M {_fmt(CENTER)} {_fmt(CENTER)} L {_fmt(x0)} {_fmt(y0)} "
        f"A {_fmt(r)} {_fmt(r)} 0 0 1 {_fmt(x1)} {_fmt(y1)} Z"
    )


def svg_document(spec: PolarPlotSpec) -> str:
    """Render the plot spec as an SVG 1.1 document string."""
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    for frac in (0.25, 0.5, 0.75, 1.0):
        parts.append(
            f'<circle cx="{_fmt(CENTER)}" cy="{_fmt(CENTER)}" r="{_fmt(frac * RADIUS)}" '
            f'fill="none" stroke="#d0d0d0" stroke-width="1"/>'
        )
    for _, _, start, _ in spec.sectors:
        x, y = _polar(start, RADIUS)
        parts.append(
            f'<line x1="{_fmt(CENTER)}" y1="{_fmt(CENTER)}" x2="{_fmt(x)}" y2="{_fmt(y)}" '
            f'stroke="#b0b0b0" stroke-width="1"/>'
        )
    for w in spec.wedges:
        parts.append(
            f'<path d="{_wedge_path(w.theta_start, w.theta_end, w.radius)}" '
            f'fill="{w.color}" fill-opacity="0.75" stroke="white" stroke-width="0.5">'
            f"<title>{w.measure_id}: {w.value:.3f}</title></path>"
        )
    for w in spec.wedges:
        mid = 0.5 * (w.theta_start + w.theta_end)
        x, y = _polar(mid, RADIUS + 14)
        parts.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="9" text-anchor="middle" '
            f'fill="#404040">{w.measure_id}</text>'
        )
    parts.append(
        f'<text x="{_fmt(CENTER)}" y="{_fmt(CENTER + 4)}" font-size="18" '
        f'font-weight="bold" text-anchor="middle">{spec.score_label}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_svg(spec: PolarPlotSpec, path) -> None:
    """Write the chart to ``path`` as UTF-8 SVG."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(svg_document(spec))
