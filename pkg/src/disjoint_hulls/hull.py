"""Convex hulls and exact disjointness tests.

Two closed hulls are *disjoint* only when they share no point at all, so
touching hulls count as intersecting.  The empty hull is disjoint from
everything, another empty hull included.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .geometry import Line, Point, Side, Turn, orientation


class Location(enum.Enum):
    INSIDE = "inside"
    ON_BOUNDARY = "on_boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Hull:
    """Counterclockwise hull vertices; 0, 1 and 2 vertices are the degenerate cases."""

    vertices: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def coords(self) -> list[tuple[Fraction, Fraction]]:
        return [p.xy for p in self.vertices]

    def edges(self) -> list[tuple[Point, Point]]:
        """Boundary segments; a single point is reported as a zero-length edge."""
        vs = self.vertices
        if len(vs) == 0:
            return []
        if len(vs) == 1:
            return [(vs[0], vs[0])]
        if len(vs) == 2:
            return [(vs[0], vs[1])]
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_indices(coords: Sequence[tuple]) -> list[int]:
    """Monotone chain over plain ``(x, y)`` tuples of any exact number type.

    Returns indices of the hull vertices in counterclockwise order starting
    from the lowest-x (then lowest-y) point; duplicates resolve to their
    first index in sorted order.
    """
    order = sorted(range(len(coords)), key=lambda i: (coords[i], i))
    unique: list[int] = []
    for i in order:
        if not unique or coords[unique[-1]] != coords[i]:
            unique.append(i)
    if len(unique) <= 2:
        return unique
    lower: list[int] = []
    for i in unique:
        while len(lower) >= 2 and _cross(coords[lower[-2]], coords[lower[-1]], coords[i]) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(unique):
        while len(upper) >= 2 and _cross(coords[upper[-2]], coords[upper[-1]], coords[i]) <= 0:
            upper.pop()
        upper.append(i)
    chain = lower[:-1] + upper[:-1]
    if len(chain) == 2:
        # all points collinear
        return [unique[0], unique[-1]]
    return chain


def convex_hull(points: Iterable[Point]) -> Hull:
    """Andrew's monotone chain; duplicates and collinear boundary points are dropped."""
    pts = sorted(points, key=lambda p: p.id)
    idx = hull_indices([p.xy for p in pts])
    return Hull(tuple(pts[i] for i in idx))


def _candidate_axes(c1: Sequence[tuple], c2: Sequence[tuple]) -> list[tuple]:
    axes = []
    for c in (c1, c2):
        n = len(c)
        pairs = [(c[0], c[1])] if n == 2 else [(c[i], c[(i + 1) % n]) for i in range(n)] if n > 2 else []
        for p, q in pairs:
            dx, dy = q[0] - p[0], q[1] - p[1]
            axes.append((-dy, dx))
            if n == 2:
                axes.append((dx, dy))
    p, q = c1[0], c2[0]
    if p != q:
        axes.append((q[0] - p[0], q[1] - p[1]))
    return axes


def sat_axis(c1: Sequence[tuple], c2: Sequence[tuple]):
    """Separating axis for two nonempty hull vertex lists given as tuples.

    Returns ``(axis, hi1, lo2)``: along ``axis`` the first hull projects to at
    most ``hi1`` and the second to at least ``lo2 > hi1``.  None when the hulls
    meet.
    """
    for nx, ny in _candidate_axes(c1, c2):
        p1 = [nx * x + ny * y for x, y in c1]
        p2 = [nx * x + ny * y for x, y in c2]
        lo1, hi1 = min(p1), max(p1)
        lo2, hi2 = min(p2), max(p2)
        if hi1 < lo2:
            return (nx, ny), hi1, lo2
        if hi2 < lo1:
            return (-nx, -ny), -lo1, -hi2
    return None


def separating_axis(h1: Hull, h2: Hull) -> Optional[tuple[tuple[Fraction, Fraction], Fraction]]:
    """Return ``(axis, threshold)`` with h1 strictly below and h2 strictly above
    the threshold along ``axis``, or None when the hulls meet.

    Both hulls must be nonempty.
    """
    found = sat_axis(h1.coords(), h2.coords())
    if found is None:
        return None
    axis, hi1, lo2 = found
    return axis, (hi1 + lo2) / 2


def hulls_disjoint(h1: Hull, h2: Hull) -> bool:
    """Separating-axis test over the edge normals of both hulls."""
    if h1.is_empty or h2.is_empty:
        return True
    return separating_axis(h1, h2) is not None


def separating_line_coords(c1: Sequence[tuple], c2: Sequence[tuple]) -> tuple[Line, Side]:
    """Like :func:`separating_line` for hull vertex tuples (possibly empty)."""
    if not c1 and not c2:
        return Line(0, 1, 0), Side.BELOW
    if not c1 or not c2:
        top = max(y for _, y in (c1 or c2))
        # the nonempty hull sits below y = top + 1
        return Line(0, 1, top + 1), (Side.ABOVE if not c1 else Side.BELOW)
    found = sat_axis(c1, c2)
    if found is None:
        raise ValueError("hulls intersect; no separating line exists")
    (nx, ny), hi1, lo2 = found
    line = Line(nx, ny, Fraction(hi1 + lo2) / 2)
    x, y = c1[0]
    return line, line.side(Point(x, y))


def separating_line(h1: Hull, h2: Hull) -> tuple[Line, Side]:
    """A line with h1 strictly on one side and h2 strictly on the other.

    Returns the line and the side holding ``h1``.  Raises ValueError when the
    hulls intersect.  An empty hull may sit on either side.
    """
    return separating_line_coords(h1.coords(), h2.coords())


def _on_segment(p: Point, q: Point, r: Point) -> bool:
    """r collinear with pq is within the closed segment's bounding box."""
    return min(p.x, q.x) <= r.x <= max(p.x, q.x) and min(p.y, q.y) <= r.y <= max(p.y, q.y)


def segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Closed-segment intersection; zero-length segments are allowed."""
    d1 = orientation(q1, q2, p1)
    d2 = orientation(q1, q2, p2)
    d3 = orientation(p1, p2, q1)
    d4 = orientation(p1, p2, q2)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    if d1 == Turn.COLLINEAR and _on_segment(q1, q2, p1):
        return True
    if d2 == Turn.COLLINEAR and _on_segment(q1, q2, p2):
        return True
    if d3 == Turn.COLLINEAR and _on_segment(p1, p2, q1):
        return True
    if d4 == Turn.COLLINEAR and _on_segment(p1, p2, q2):
        return True
    return False


def point_in_convex_polygon(h: Hull, p: Point) -> Location:
    vs = h.vertices
    if not vs:
        return Location.OUTSIDE
    if len(vs) == 1:
        return Location.ON_BOUNDARY if vs[0].xy == p.xy else Location.OUTSIDE
    if len(vs) == 2:
        if orientation(vs[0], vs[1], p) == Turn.COLLINEAR and _on_segment(vs[0], vs[1], p):
            return Location.ON_BOUNDARY
        return Location.OUTSIDE
    on_edge = False
    for a, b in h.edges():
        turn = orientation(a, b, p)
        if turn == Turn.RIGHT:
            return Location.OUTSIDE
        if turn == Turn.COLLINEAR:
            on_edge = True
    return Location.ON_BOUNDARY if on_edge else Location.INSIDE


def hulls_disjoint_bruteforce(h1: Hull, h2: Hull) -> bool:
    """Independent check: all edge pairs plus mutual vertex containment."""
    if h1.is_empty or h2.is_empty:
        return True
    for a, b in h1.edges():
        for c, d in h2.edges():
            if segments_intersect(a, b, c, d):
                return False
    if any(point_in_convex_polygon(h2, p) != Location.OUTSIDE for p in h1.vertices):
        return False
    if any(point_in_convex_polygon(h1, p) != Location.OUTSIDE for p in h2.vertices):
        return False
    return True
