"""SVG rendering of the gasket wireframe with a geodesic overlaid."""

from __future__ import annotations

from itertools import product

from .codes import Code
from .geodesic import Geodesic
from .geometry import SQRT3_HALF, to_barycentric, to_cartesian

#: Wireframe detail is capped here regardless of geodesic depth (3^7 triangles).
MAX_WIRE_LEVEL = 7

_VIEW_H = SQRT3_HALF  # viewBox height; y axis is flipped into SVG orientation


def _svg_xy(x: float, y: float) -> tuple[float, float]:
    return x, _VIEW_H - y


def _triangle_corners(word: tuple[int, ...]) -> list[tuple[float, float]]:
    scale = 1 << len(word)
    base = [0, 0, 0]
    for j, s in enumerate(word):
        base[s] += 1 << (len(word) - 1 - j)
    pts = []
    for t in range(3):
        b = [v / scale for v in base]
        b[t] += 1.0 / scale
        pts.append(_svg_xy(b[1] + 0.5 * b[2], b[2] * SQRT3_HALF))
    return pts


def wireframe_polygons(level: int) -> list[str]:
    """SVG polygon elements outlining every elementary triangle at `level`."""
    polys = []
    for word in product((0, 1, 2), repeat=level):
        pts = " ".join(f"{x:.6f},{y:.6f}" for x, y in _triangle_corners(word))
        polys.append(f'<polygon points="{pts}" fill="none" stroke="#999999" stroke-width="0.0012"/>')
    return polys


def geodesic_svg(a: Code, b: Code, geo: Geodesic) -> str:
    """Standalone SVG: wireframe, geodesic polyline, marked endpoints."""
    wire_level = min(geo.depth, MAX_WIRE_LEVEL)
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 1 {_VIEW_H:.7f}" width="800" height="{800 * _VIEW_H:.1f}">',
        f'<rect x="0" y="0" width="1" height="{_VIEW_H:.7f}" fill="white"/>',
        "<g>",
    ]
    parts.extend(wireframe_polygons(wire_level))
    parts.append("</g>")
    points = []
    for w in geo.waypoints:
        p = to_cartesian(to_barycentric(w))
        points.append(_svg_xy(p.x, p.y))
    pts = " ".join(f"{x:.6f},{y:.6f}" for x, y in points)
    parts.append(
        f'<polyline points="{pts}" fill="none" stroke="#d62728" stroke-width="0.006" '
        f'stroke-linejoin="round" stroke-linecap="round" '
        f'data-length="{geo.length.numerator}/{geo.length.denominator}"/>'
    )
    for code in (a, b):
        p = to_cartesian(to_barycentric(code))
        x, y = _svg_xy(p.x, p.y)
        parts.append(f'<circle cx="{x:.6f}" cy="{y:.6f}" r="0.012" fill="#1f77b4"/>')
    parts.append("</svg>")
    return "\n".join(parts)
