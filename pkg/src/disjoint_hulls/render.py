"""SVG 1.1 pictures of an instance in the primal or the dual plane.

Coordinates are converted to floats for drawing only and printed with a
fixed precision, so output is byte-identical for identical input.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence
from xml.sax.saxutils import escape

from .arrangement import build_arrangement
from .geometry import Color, Point, Sign, dual_of_point
from .hull import convex_hull
from .solution import SeparatorSolution, kept_sets

SIZE = 480
MARGIN = 24
PLUS_COLOR = "#d62728"
MINUS_COLOR = "#1f77b4"
STYLE = f"""
.plus {{ fill: {PLUS_COLOR}; }}
.minus {{ fill: {MINUS_COLOR}; }}
.removed {{ fill: none; stroke: #555; stroke-width: 1.5; }}
.hull-plus {{ fill: {PLUS_COLOR}; fill-opacity: 0.12; stroke: {PLUS_COLOR}; }}
.hull-minus {{ fill: {MINUS_COLOR}; fill-opacity: 0.12; stroke: {MINUS_COLOR}; }}
.separator {{ stroke: #000; stroke-width: 1.5; }}
.dual-red {{ stroke: {PLUS_COLOR}; }}
.dual-blue {{ stroke: {MINUS_COLOR}; }}
.dual-mixed {{ stroke: #9467bd; stroke-dasharray: 4 2; }}
.vertex {{ fill: #333; }}
.optimum {{ fill: #000; }}
"""


def _fmt(v: float) -> str:
    return f"{v:.3f}"


class _Viewport:
    def __init__(self, xmin: float, xmax: float, ymin: float, ymax: float):
        if xmax - xmin <= 0:
            xmin, xmax = xmin - 1, xmax + 1
        if ymax - ymin <= 0:
            ymin, ymax = ymin - 1, ymax + 1
        padx, pady = 0.08 * (xmax - xmin), 0.08 * (ymax - ymin)
        self.xmin, self.xmax = xmin - padx, xmax + padx
        self.ymin, self.ymax = ymin - pady, ymax + pady
        inner = SIZE - 2 * MARGIN
        self.scale_x = inner / (self.xmax - self.xmin)
        self.scale_y = inner / (self.ymax - self.ymin)

    def map(self, x: float, y: float) -> tuple[str, str]:
        sx = MARGIN + (x - self.xmin) * self.scale_x
        sy = SIZE - MARGIN - (y - self.ymin) * self.scale_y
        return _fmt(sx), _fmt(sy)

    def clip_line(self, a: float, b: float, c: float) -> Optional[tuple[tuple[float, float], tuple[float, float]]]:
        """Segment of ``a*x + b*y = c`` inside the viewport, if any."""
        pts = []
        if b != 0:
            for x in (self.xmin, self.xmax):
                y = (c - a * x) / b
                if self.ymin <= y <= self.ymax:
                    pts.append((x, y))
        if a != 0:
            for y in (self.ymin, self.ymax):
                x = (c - b * y) / a
                if self.xmin <= x <= self.xmax:
                    pts.append((x, y))
        pts = sorted(set(pts))
        if len(pts) < 2:
            return None
        return pts[0], pts[-1]


def _document(body: list[str], title: str) -> str:
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{escape(title)}</title>",
        f"<style>{STYLE}</style>",
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#fff"/>',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def _line_element(view: _Viewport, a, b, c, cls: str) -> Optional[str]:
    seg = view.clip_line(float(a), float(b), float(c))
    if seg is None:
        return None
    (x1, y1), (x2, y2) = view.map(*seg[0]), view.map(*seg[1])
    return f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>'


def render_primal(points: Sequence[Point], solution: Optional[SeparatorSolution] = None) -> str:
    """Points with the hulls of the kept sets; the separator when a solution is given."""
    if not points:
        return _document([], "primal plane (empty)")
    view = _Viewport(
        float(min(p.x for p in points)), float(max(p.x for p in points)),
        float(min(p.y for p in points)), float(max(p.y for p in points)),
    )
    P = [p for p in points if p.sign is Sign.PLUS]
    M = [p for p in points if p.sign is Sign.MINUS]
    removed = set(solution.removed_ids) if solution else set()
    keep_p, keep_m = kept_sets(P, M, removed)
    body = []
    for hull_points, cls in ((keep_p, "hull-plus"), (keep_m, "hull-minus")):
        hull = convex_hull(hull_points)
        if len(hull) >= 2:
            coords = " ".join(",".join(view.map(float(v.x), float(v.y))) for v in hull.vertices)
            tag = "polygon" if len(hull) >= 3 else "polyline"
            body.append(f'<{tag} class="{cls}" points="{coords}"/>')
    if solution is not None:
        element = _line_element(view, solution.line.a, solution.line.b, solution.line.c, "separator")
        if element:
            body.append(element)
    for p in points:
        cx, cy = view.map(float(p.x), float(p.y))
        cls = "plus" if p.sign is Sign.PLUS else "minus"
        if p.id in removed:
            cls += " removed"
        body.append(f'<circle class="{cls}" cx="{cx}" cy="{cy}" r="4"><title>id {p.id}</title></circle>')
    return _document(body, "primal plane")


def render_dual(points: Sequence[Point], solution: Optional[SeparatorSolution] = None) -> str:
    """Colored dual lines over their crossing points; the optimum is a black square."""
    if not points:
        return _document([], "dual plane (empty)")
    arr = build_arrangement([dual_of_point(p) for p in points])
    verts = [arr.vertex(v) for v in arr.interior_vertices()]
    marker = None
    if solution is not None and not solution.line.is_vertical:
        s, t = solution.line.slope_intercept()
        marker = (s, -t)
    xs = [float(x) for x, _ in verts] + ([float(marker[0])] if marker else [])
    if not xs:
        xs = [-1.0, 1.0]
    xmin, xmax = min(xs), max(xs)
    if xmax - xmin <= 0:
        xmin, xmax = xmin - 1, xmax + 1
    ys = [float(ln.slope) * x - float(ln.intercept) for ln in arr.lines for x in (xmin, xmax)]
    ys += [float(y) for _, y in verts] + ([float(marker[1])] if marker else [])
    view = _Viewport(xmin, xmax, min(ys), max(ys))

    body = []
    for ln in arr.lines:
        cls = {Color.RED: "dual-red", Color.BLUE: "dual-blue", None: "dual-mixed"}[ln.color]
        # y = s*x - t  <=>  -s*x + y = -t
        element = _line_element(view, -ln.slope, Fraction(1), -ln.intercept, cls)
        if element:
            body.append(element)
    for x, y in verts:
        cx, cy = view.map(float(x), float(y))
        body.append(f'<circle class="vertex" cx="{cx}" cy="{cy}" r="2.5"/>')
    if marker is not None:
        cx, cy = view.map(float(marker[0]), float(marker[1]))
        body.append(f'<rect class="optimum" x="{_fmt(float(cx) - 4)}" y="{_fmt(float(cy) - 4)}" width="8" height="8"/>')
    return _document(body, "dual plane")

