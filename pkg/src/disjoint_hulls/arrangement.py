"""Line arrangements in a doubly connected edge list, and their cell graphs.

The arrangement is clipped to an axis-parallel box chosen so that every
pairwise intersection lies strictly inside it and every line enters through
the left side and leaves through the right side.  Bounded faces of the
clipped subdivision are then in one-to-one correspondence with the cells of
the full arrangement.  Face 0 is the region outside the box.

Vertices are kept as integer homogeneous triples ``(X, Y, W)`` with
``W > 0``; :meth:`Arrangement.vertex` returns exact Fractions.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .geometry import Color, DualLine, Point

OUTER_FACE = 0


class InconsistentArrangement(RuntimeError):
    """Raised when the subdivision violates a structural invariant."""


@dataclass
class ArrangementLine:
    """One geometric line ``y = slope*x - intercept`` with color multiplicities."""

    slope: Fraction
    intercept: Fraction
    red: int = 0
    blue: int = 0
    source_ids: list[int] = field(default_factory=list)

    @property
    def color(self) -> Optional[Color]:
        if self.red and not self.blue:
            return Color.RED
        if self.blue and not self.red:
            return Color.BLUE
        return None


def _cramer(l1, l2):
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    w = a1 * b2 - a2 * b1
    x = b1 * c2 - b2 * c1
    y = c1 * a2 - c2 * a1
    if w < 0:
        return -x, -y, -w
    return x, y, w


class Arrangement:
    """DCEL of a clipped line arrangement.

    Half-edge ``h`` runs from ``origin[h]`` to ``origin[twin[h]]`` with face
    ``face[h]`` on its left; boundary cycles of bounded faces run
    counterclockwise.  ``line[h]`` is the index of the supporting line, and
    indices ``>= n_lines`` denote the four sides of the box.
    """

    def __init__(self, lines: Sequence[ArrangementLine], xbound: int, ybound: int):
        self.lines = list(lines)
        self.n_lines = len(self.lines)
        self.xbound = xbound
        self.ybound = ybound
        # integer coefficients (a, b, c) of a*x + b*y + c = 0
        self.coef: list[tuple[int, int, int]] = []
        for ln in self.lines:
            den = math.lcm(ln.slope.denominator, ln.intercept.denominator)
            self.coef.append((-int(ln.slope * den), den, int(ln.intercept * den)))
        X, Y = xbound, ybound
        self.coef += [(0, 1, Y), (1, 0, -X), (0, 1, -Y), (1, 0, X)]  # bottom, right, top, left

        self.vx: list[int] = []
        self.vy: list[int] = []
        self.vw: list[int] = []
        self.vedge: list[int] = []
        self.origin: list[int] = []
        self.twin: list[int] = []
        self.next: list[int] = []
        self.prev: list[int] = []
        self.face: list[int] = []
        self.line: list[int] = []
        self.face_edge: list[int] = [-1, -1]

        corners = [(-X, -Y), (X, -Y), (X, Y), (-X, Y)]
        for x, y in corners:
            self._add_vertex(x, y, 1)
        inner = [self._add_pair(i, (i + 1) % 4, self.n_lines + i) for i in range(4)]
        for i, h in enumerate(inner):
            nxt = inner[(i + 1) % 4]
            self.next[h] = nxt
            self.prev[nxt] = h
            t, tn = self.twin[h], self.twin[nxt]
            self.next[tn] = t
            self.prev[t] = tn
            self.face[h] = 1
            self.face[t] = OUTER_FACE
        self.face_edge = [self.twin[inner[0]], inner[0]]
        self.top_edge = inner[2]
        # left-side vertices bottom to top; _left_edges[i] spans _left_ys[i] and _left_ys[i+1]
        self._left_ys: list[Fraction] = [Fraction(-Y), Fraction(Y)]
        self._left_edges: list[int] = [inner[3]]

    # -- construction ------------------------------------------------------

    def _add_vertex(self, x: int, y: int, w: int) -> int:
        self.vx.append(x)
        self.vy.append(y)
        self.vw.append(w)
        self.vedge.append(-1)
        return len(self.vx) - 1

    def _add_pair(self, u: int, v: int, line: int) -> int:
        h = len(self.origin)
        self.origin += [u, v]
        self.twin += [h + 1, h]
        self.next += [-1, -1]
        self.prev += [-1, -1]
        self.face += [-1, -1]
        self.line += [line, line]
        self.vedge[u] = h
        self.vedge[v] = h + 1
        return h

    def _split_edge(self, h: int, q: int) -> int:
        """Split half-edge ``h`` (and its twin) at vertex ``q``; return the new ``q -> dest`` half."""
        origin, twin, nxt, prev, face, line = self.origin, self.twin, self.next, self.prev, self.face, self.line
        t = twin[h]
        h2 = len(origin)
        t2 = h2 + 1
        origin += [q, q]
        face += [face[h], face[t]]
        line += [line[h], line[h]]
        twin += [t, h]
        twin[h] = t2
        twin[t] = h2
        nxt += [nxt[h], nxt[t]]
        prev += [h, t]
        prev[nxt[h]] = h2
        prev[nxt[t]] = t2
        nxt[h] = h2
        nxt[t] = t2
        self.vedge[q] = h2
        return h2

    def _side(self, v: int, k: int) -> int:
        a, b, c = self.coef[k]
        s = a * self.vx[v] + b * self.vy[v] + c * self.vw[v]
        return (s > 0) - (s < 0)

    def _direction(self, h: int) -> tuple[int, int]:
        o, d = self.origin[h], self.origin[self.twin[h]]
        wo, wd = self.vw[o], self.vw[d]
        return self.vx[d] * wo - self.vx[o] * wd, self.vy[d] * wo - self.vy[o] * wd

    def insert_line(self, k: int) -> None:
        """Insert line ``k`` by walking its zone from the left side of the box."""
        origin, twin, nxt, prev, face, line = self.origin, self.twin, self.next, self.prev, self.face, self.line
        vx, vy, vw = self.vx, self.vy, self.vw
        a, b, c = self.coef[k]
        X = self.xbound

        y0 = Fraction(a * X - c, b)
        j = bisect_left(self._left_ys, y0) - 1
        if self._left_ys[j + 1] == y0:
            raise InconsistentArrangement("two lines meet on the clipping box")
        e = self._left_edges[j]
        p = self._add_vertex(-X * b, a * X - c, b)
        e2 = self._split_edge(e, p)
        self._left_ys.insert(j + 1, y0)
        self._left_edges[j] = e2
        self._left_edges.insert(j + 1, e)
        e_in, e_out = e, e2
        dir_x, dir_y = b, -a

        while True:
            f = face[e_out]
            h = e_out
            s_prev = 0
            while True:
                d = origin[nxt[h]]
                s = a * vx[d] + b * vy[d] + c * vw[d]
                sd = (s > 0) - (s < 0)
                if sd == 0:
                    q, q_in, q_out, at_vertex = d, h, nxt[h], True
                    break
                if s_prev and sd != s_prev:
                    qx, qy, qw = _cramer(self.coef[k], self.coef[line[h]])
                    q = self._add_vertex(qx, qy, qw)
                    q_out = self._split_edge(h, q)
                    q_in, at_vertex = h, False
                    break
                s_prev = sd
                h = nxt[h]

            # chord p -> q splits face f; the part above line k keeps the id f
            ch = self._add_pair(p, q, k)
            ct = ch + 1
            prev[ch] = e_in
            nxt[e_in] = ch
            nxt[ch] = q_out
            prev[q_out] = ch
            prev[ct] = q_in
            nxt[q_in] = ct
            nxt[ct] = e_out
            prev[e_out] = ct
            g = len(self.face_edge)
            self.face_edge.append(ct)
            self.face_edge[f] = ch
            face[ch] = f
            w = ct
            while True:
                face[w] = g
                w = nxt[w]
                if w == ct:
                    break

            if line[q_in] >= self.n_lines:
                return
            if not at_vertex:
                e_in, e_out = twin[q_out], twin[q_in]
            else:
                # rotate counterclockwise around q to the wedge holding line k's direction
                w = q_out
                for _ in range(len(origin)):
                    w2 = twin[prev[w]]
                    d1 = self._direction(w)
                    d2 = self._direction(w2)
                    if d1[0] * dir_y - d1[1] * dir_x > 0 and dir_x * d2[1] - dir_y * d2[0] > 0:
                        break
                    w = w2
                else:
                    raise InconsistentArrangement("no wedge around vertex contains the line")
                e_in, e_out = prev[w], w
            p = q

    # -- queries -----------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vx)

    @property
    def n_edges(self) -> int:
        return len(self.origin) // 2

    @property
    def n_faces(self) -> int:
        return len(self.face_edge)

    def cells(self) -> range:
        """Ids of the bounded faces, one per cell of the unclipped arrangement."""
        return range(1, self.n_faces)

    def vertex(self, v: int) -> tuple[Fraction, Fraction]:
        w = self.vw[v]
        return Fraction(self.vx[v], w), Fraction(self.vy[v], w)

    def dest(self, h: int) -> int:
        return self.origin[self.twin[h]]

    def cycle(self, f: int) -> list[int]:
        start = self.face_edge[f]
        out = [start]
        h = self.next[start]
        while h != start:
            out.append(h)
            h = self.next[h]
        return out

    def is_box_edge(self, h: int) -> bool:
        return self.line[h] >= self.n_lines

    def lines_through(self, v: int) -> set[int]:
        return {k for k in range(self.n_lines) if self._side(v, k) == 0}

    def interior_vertices(self) -> list[int]:
        """Vertices where two or more arrangement lines cross."""
        X = self.xbound
        return [v for v in range(self.n_vertices) if abs(Fraction(self.vx[v], self.vw[v])) < X]

    def validate(self) -> None:
        """Check DCEL links, face cycles, Euler's formula and vertex incidences."""
        H = len(self.origin)
        for h in range(H):
            t = self.twin[h]
            if self.twin[t] != h or t == h:
                raise InconsistentArrangement(f"twin link broken at {h}")
            if self.prev[self.next[h]] != h or self.next[self.prev[h]] != h:
                raise InconsistentArrangement(f"next/prev broken at {h}")
            if self.origin[self.next[h]] != self.origin[t]:
                raise InconsistentArrangement(f"cycle discontinuous at {h}")
            if self.face[self.next[h]] != self.face[h]:
                raise InconsistentArrangement(f"face label differs along cycle at {h}")
            if self.line[h] != self.line[t]:
                raise InconsistentArrangement(f"twins on different lines at {h}")
        seen = set()
        for f in range(self.n_faces):
            for h in self.cycle(f):
                if self.face[h] != f:
                    raise InconsistentArrangement(f"face {f} cycle contains foreign edge {h}")
                seen.add(h)
        if len(seen) != H:
            raise InconsistentArrangement("some half-edges belong to no face cycle")
        if self.n_vertices - self.n_edges + self.n_faces != 2:
            raise InconsistentArrangement("Euler's formula fails")
        for v in self.interior_vertices():
            if len(self.lines_through(v)) < 2:
                raise InconsistentArrangement(f"interior vertex {v} lies on fewer than two lines")

    def dump(self, weights: Optional[tuple[Sequence[int], Sequence[int]]] = None) -> str:
        """Deterministic text listing of vertices and face cycles, optionally with cell weights."""
        out = [f"box x=[{-self.xbound},{self.xbound}] y=[{-self.ybound},{self.ybound}]"]
        out.append(f"lines {self.n_lines}")
        for i, ln in enumerate(self.lines):
            out.append(f"  L{i}: y = {ln.slope}*x - ({ln.intercept}) red={ln.red} blue={ln.blue}")
        out.append(f"vertices {self.n_vertices}")
        for v in range(self.n_vertices):
            x, y = self.vertex(v)
            out.append(f"  v{v}: ({x}, {y})")
        out.append(f"faces {self.n_faces}")
        for f in range(self.n_faces):
            cyc = " ".join(f"v{self.origin[h]}" for h in self.cycle(f))
            tag = "outer" if f == OUTER_FACE else "cell"
            row = f"  f{f} {tag}: {cyc}"
            if weights is not None and f != OUTER_FACE:
                row += f" | w1={weights[0][f]} w2={weights[1][f]}"
            out.append(row)
        return "\n".join(out) + "\n"


def _box_bounds(lines: Sequence[ArrangementLine]) -> tuple[int, int]:
    slopes = sorted({ln.slope for ln in lines})
    intercepts = [ln.intercept for ln in lines]
    spread = max(intercepts) - min(intercepts)
    if len(slopes) > 1:
        gap = min(b - a for a, b in zip(slopes, slopes[1:]))
        xbound = math.floor(spread / gap) + 1
    else:
        xbound = 1
    ybound = max(math.floor(abs(ln.slope) * xbound + abs(ln.intercept)) for ln in lines) + 1
    return xbound, ybound


def group_dual_lines(duals: Sequence[DualLine]) -> list[ArrangementLine]:
    """Merge identical dual lines, counting colors, sorted by (slope, intercept)."""
    merged: dict[tuple[Fraction, Fraction], ArrangementLine] = {}
    for d in duals:
        key = (Fraction(d.slope), Fraction(d.intercept))
        ln = merged.setdefault(key, ArrangementLine(key[0], key[1]))
        if d.color is Color.RED:
            ln.red += 1
        else:
            ln.blue += 1
        ln.source_ids.append(d.source_point_id)
    return [merged[key] for key in sorted(merged)]


def build_arrangement(duals: Sequence[DualLine], validate_each: bool = False) -> Arrangement:
    """Clipped arrangement of ``duals`` built by incremental insertion."""
    if not duals:
        raise ValueError("an arrangement needs at least one line")
    lines = group_dual_lines(duals)
    xbound, ybound = _box_bounds(lines)
    arr = Arrangement(lines, xbound, ybound)
    for k in range(arr.n_lines):
        arr.insert_line(k)
        if validate_each:
            arr.validate()
    return arr


def upper_envelope_start(arr: Arrangement) -> int:
    """The cell above every line: the one bordering the top side of the box."""
    return arr.face[arr.top_edge]


def representative_point(arr: Arrangement, cell: int) -> Point:
    """Vertex average of the cell's clipped boundary, strictly inside the cell."""
    cyc = arr.cycle(cell)
    sx = sum((arr.vertex(arr.origin[h])[0] for h in cyc), Fraction(0))
    sy = sum((arr.vertex(arr.origin[h])[1] for h in cyc), Fraction(0))
    return Point(sx / len(cyc), sy / len(cyc))


@dataclass
class CellGraph:
    """Cells as nodes; an edge per shared boundary segment of an arrangement line.

    ``adjacency[u]`` lists ``(v, line, u_above)`` where ``u_above`` tells
    whether ``u`` lies above the crossed line.
    """

    arrangement: Arrangement
    adjacency: dict[int, list[tuple[int, int, bool]]]

    @property
    def nodes(self) -> list[int]:
        return sorted(self.adjacency)

    def edges(self) -> list[tuple[int, int, int, bool]]:
        return [(u, v, k, above) for u, nbrs in sorted(self.adjacency.items()) for v, k, above in nbrs if u < v]


def cell_graph(arr: Arrangement) -> CellGraph:
    adjacency: dict[int, list[tuple[int, int, bool]]] = {f: [] for f in arr.cells()}
    for h in range(len(arr.origin)):
        k = arr.line[h]
        t = arr.twin[h]
        if k >= arr.n_lines or t < h:
            continue
        dx, _ = arr._direction(h)
        # the face left of a rightward half-edge lies above its line
        h_above = dx > 0
        u, v = arr.face[h], arr.face[t]
        adjacency[u].append((v, k, h_above))
        adjacency[v].append((u, k, not h_above))
    return CellGraph(arr, adjacency)


def propagate_weights(graph: CellGraph, start: int, m: int) -> tuple[dict[int, int], dict[int, int]]:
    """Breadth-first weights from the top cell.

    ``w1[c]`` counts red lines below cell ``c`` and ``w2[c]`` blue lines above
    it (with multiplicity).  Crossing a line downward loses its red count from
    ``w1`` and adds its blue count to ``w2``; crossing upward undoes that.
    """
    lines = graph.arrangement.lines
    w1 = {start: m}
    w2 = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v, k, u_above in graph.adjacency[u]:
            step = -1 if u_above else 1
            nw1 = w1[u] + step * lines[k].red
            nw2 = w2[u] - step * lines[k].blue
            if v in w1:
                if (w1[v], w2[v]) != (nw1, nw2):
                    raise InconsistentArrangement(f"cell {v} reached with two different weights")
                continue
            w1[v], w2[v] = nw1, nw2
            queue.append(v)
    if len(w1) != len(graph.adjacency):
        raise InconsistentArrangement("cell graph is disconnected")
    return w1, w2
