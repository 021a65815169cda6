"""SVG rendering of region scans and walls.

Floats appear here only as pixel coordinates; every value that reaches a
CSV or JSON file stays exact.
"""
from __future__ import annotations

import math
from fractions import Fraction
from xml.sax.saxutils import escape

from .criteria import Region
from .lattice import MukaiVector
from .oracle import Grid, ScanRow, WallCurve
from .rational import format_rational

FILLS = {
    Region.V_PLUS: "#8ecae6",
    Region.V_ZERO: "#023047",
    Region.V_MINUS: "#ffb703",
    Region.OUTSIDE: "#e9e9e9",
}
NOT_IN_VX = "#9d0208"

WIDTH, HEIGHT, PAD = 640, 480, 40


class _Frame:
    def __init__(self, grid: Grid):
        self.x0, self.x1 = float(grid.x0), float(grid.x1)
        self.y1 = float(grid.y1)
        self.step = float(grid.step)
        span_x = max(self.x1 - self.x0 + self.step, 1e-9)
        span_y = max(self.y1 + self.step / 2, 1e-9)
        self.sx = (WIDTH - 2 * PAD) / span_x
        self.sy = (HEIGHT - 2 * PAD) / span_y
        self.left = self.x0 - self.step / 2

    def px(self, x: float) -> float:
        return PAD + (x - self.left) * self.sx

    def py(self, y: float) -> float:
        return HEIGHT - PAD - y * self.sy


def _wall_path(curve: WallCurve, frame: _Frame, resolution: int = 400) -> list[list[tuple[float, float]]]:
    """Polyline pieces of the wall restricted to y > 0."""
    lo, hi = frame.left, frame.x1 + frame.step / 2
    if curve.A == 0:
        if curve.D == 0:
            return []
        x = float(-curve.F / curve.D)
        if lo <= x <= hi:
            return [[(x, 0.0), (x, frame.y1 + frame.step / 2)]]
        return []
    pieces, cur = [], []
    for i in range(resolution + 1):
        x = lo + (hi - lo) * i / resolution
        # y² from A(x² + y²) + Dx + F = 0
        y2 = -(float(curve.A) * x * x + float(curve.D) * x + float(curve.F)) / float(curve.A)
        if y2 > 0:
            cur.append((x, math.sqrt(y2)))
        elif cur:
            pieces.append(cur)
            cur = []
    if cur:
        pieces.append(cur)
    return pieces


def render_scan(rows: list[ScanRow], grid: Grid, v: MukaiVector,
                walls: tuple[WallCurve, ...] = ()) -> str:
    frame = _Frame(grid)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
           f'viewBox="0 0 {WIDTH} {HEIGHT}">',
           '<rect width="100%" height="100%" fill="white"/>']
    cw = frame.step * frame.sx
    ch = frame.step * frame.sy
    for row in rows:
        fill = FILLS[row.region] if row.in_vx else NOT_IN_VX
        cx, cy = frame.px(float(row.x)), frame.py(float(row.y))
        out.append(f'<rect x="{cx - cw / 2:.2f}" y="{cy - ch / 2:.2f}" width="{cw:.2f}" '
                   f'height="{ch:.2f}" fill="{fill}"><title>x={format_rational(row.x)} '
                   f'y={format_rational(row.y)} {row.region.value}</title></rect>')
    if v.r > 0:
        xz = float(Fraction(v.n, v.r))
        if frame.left <= xz <= frame.x1 + frame.step / 2:
            out.append(f'<line x1="{frame.px(xz):.2f}" y1="{frame.py(0):.2f}" x2="{frame.px(xz):.2f}" '
                       f'y2="{PAD}" stroke="{FILLS[Region.V_ZERO]}" stroke-width="2"/>')
    for curve in walls:
        for piece in _wall_path(curve, frame):
            pts = " ".join(f"{frame.px(x):.2f},{frame.py(y):.2f}" for x, y in piece)
            out.append(f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="1.5">'
                       f'<title>wall ({curve.a}) vs ({curve.e})</title></polyline>')
    # axes
    out.append(f'<line x1="{PAD}" y1="{frame.py(0):.2f}" x2="{WIDTH - PAD}" y2="{frame.py(0):.2f}" '
               'stroke="black"/>')
    out.append(f'<text x="{PAD}" y="{HEIGHT - 10}" font-size="12">'
               f'{escape(f"v=({v})  x in [{format_rational(grid.x0)}, {format_rational(grid.x1)}]")}'
               '</text>')
    legend_y = 16
    for region, fill in FILLS.items():
        out.append(f'<rect x="{WIDTH - 150}" y="{legend_y - 10}" width="12" height="12" fill="{fill}"/>'
                   f'<text x="{WIDTH - 132}" y="{legend_y}" font-size="12">{region.value}</text>')
        legend_y += 16
    out.append(f'<rect x="{WIDTH - 150}" y="{legend_y - 10}" width="12" height="12" fill="{NOT_IN_VX}"/>'
               f'<text x="{WIDTH - 132}" y="{legend_y}" font-size="12">not in V(X)</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
