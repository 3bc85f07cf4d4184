"""Cubic reference solver.

Every line through two distinct input sites is a candidate.  Sites lying on
such a line are pushed to definite sides by the small rotations and
translations available around it: choose a pivot between two consecutive
on-line sites (or beyond either end) and a rotation direction, so the on-line
sites before the pivot fall on one side and the rest on the other.  Every
candidate is then costed by strict side counts, so the reported witness is
always strictly valid.

The counting for all pairs sharing an anchor site is vectorized with numpy;
the work is still cubic in the number of sites.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .geometry import Point
from .solution import (
    SeparatorSolution,
    Site,
    check_instance,
    empty_solution,
    group_sites,
    scale_to_integers,
    single_location_solution,
    witness_for,
)

_CHUNK_ELEMENTS = 1 << 21
# |coordinate| bound keeping every cross product inside int64
_INT64_SAFE = 1 << 30


def solve_naive(P: Sequence[Point], M: Sequence[Point]) -> SeparatorSolution:
    """Minimum removal set by exhaustive enumeration of pair lines.

    Among equally cheap removal sets the lexicographically smallest sorted id
    list wins.
    """
    check_instance(P, M)
    if not P and not M:
        return empty_solution()
    sites = group_sites(P, M)
    if len(sites) == 1:
        return single_location_solution(P, M)
    coords, _ = scale_to_integers([(s.x, s.y) for s in sites])
    cost, removed = _search(sites, coords)
    line, orientation = witness_for(P, M, removed)
    return SeparatorSolution(cost, tuple(removed), line, orientation)


def _search(sites: list[Site], coords: list[tuple[int, int]]) -> tuple[int, list[int]]:
    L = len(sites)
    bound = max(max(abs(x), abs(y)) for x, y in coords)
    dtype = np.int64 if bound < _INT64_SAFE else object
    xs = np.array([c[0] for c in coords], dtype=dtype)
    ys = np.array([c[1] for c in coords], dtype=dtype)
    pc = np.array([s.n_plus for s in sites], dtype=np.float64)
    mc = np.array([s.n_minus for s in sites], dtype=np.float64)
    on_min = np.minimum(pc, mc)
    idx = np.arange(L)

    best = math.inf
    rows: list[tuple[int, int, np.ndarray]] = []
    chunk = max(1, _CHUNK_ELEMENTS // (L * L))
    for u0 in range(0, L - 1, chunk):
        us = idx[u0 : min(u0 + chunk, L - 1)]
        wx = xs[None, :] - xs[us, None]
        wy = ys[None, :] - ys[us, None]
        # cross[c, v, w]: turn of site w relative to the directed line u -> v
        cross = wx[:, :, None] * wy[:, None, :] - wy[:, :, None] * wx[:, None, :]
        side = np.sign(cross).astype(np.int8)
        left = (side > 0).astype(np.float64)
        right = (side < 0).astype(np.float64)
        plus_left, plus_right = left @ pc, right @ pc
        minus_left, minus_right = left @ mc, right @ mc
        on_count = L - left.sum(axis=2) - right.sum(axis=2)
        cost = np.minimum(plus_right + minus_left, plus_left + minus_right)
        cost += on_min[us, None] + on_min[None, :]
        upper = idx[None, :] > us[:, None]
        cost[~(upper & (on_count == 2))] = math.inf

        # lines through three or more sites, handled once from their two lowest sites
        for ci, v in zip(*np.nonzero(upper & (on_count > 2))):
            on = np.flatnonzero(side[ci, v] == 0)
            if on[0] == us[ci] and on[1] == v:
                u = int(us[ci])
                cost[ci, v] = min(c for c, _ in _patterns(sites, coords, side[ci, v], u, int(v)))

        low = cost.min()
        if low < best:
            best, rows = low, []
        if low == best:
            rows.extend((int(us[ci]), int(v), side[ci, v]) for ci, v in zip(*np.nonzero(cost == best)))

    # per-point lookup arrays, ordered by id so masks give sorted id lists
    owners = sorted((pid, w, True) for w, s in enumerate(sites) for pid in s.plus_ids)
    owners += sorted((pid, w, False) for w, s in enumerate(sites) for pid in s.minus_ids)
    owners.sort()
    point_ids = np.array([o[0] for o in owners])
    point_site = np.array([o[1] for o in owners])
    point_plus = np.array([o[2] for o in owners])

    best_removed = None
    for u, v, side_row in rows:
        for cost, (keep_plus, first, pivot) in _patterns(sites, coords, side_row, u, v):
            if cost != best:
                continue
            assigned = side_row.copy()
            on = _on_sites(coords, side_row, u, v)
            assigned[on[:pivot]] = first
            assigned[on[pivot:]] = -first
            removed = point_ids[(assigned[point_site] == keep_plus) != point_plus].tolist()
            if best_removed is None or removed < best_removed:
                best_removed = removed
    return int(best), best_removed


def _on_sites(coords, side_row: np.ndarray, u: int, v: int) -> list[int]:
    """Sites on line uv, ordered along the direction u -> v."""
    ux, uy = coords[u]
    dx, dy = coords[v][0] - ux, coords[v][1] - uy
    on = np.flatnonzero(side_row == 0).tolist()
    return sorted(on, key=lambda w: dx * (coords[w][0] - ux) + dy * (coords[w][1] - uy))


def _patterns(sites: list[Site], coords, side_row: np.ndarray, u: int, v: int):
    """Yield ``(cost, (keep_plus, first, pivot))`` for every resolved perturbation of uv.

    ``keep_plus`` is +1 when plus points are kept left of u -> v.  The first
    ``pivot`` on-line sites go to side ``first`` and the rest to ``-first``.
    """
    on = _on_sites(coords, side_row, u, v)
    plus_left = plus_right = minus_left = minus_right = 0
    for w in np.flatnonzero(side_row).tolist():
        if side_row[w] > 0:
            plus_left += sites[w].n_plus
            minus_left += sites[w].n_minus
        else:
            plus_right += sites[w].n_plus
            minus_right += sites[w].n_minus
    for keep_plus in (1, -1):
        off = plus_right + minus_left if keep_plus > 0 else plus_left + minus_right
        for first in (1, -1):
            for pivot in range(len(on) + 1):
                cost = off
                for j, w in enumerate(on):
                    s = first if j < pivot else -first
                    cost += sites[w].n_minus if s == keep_plus else sites[w].n_plus
                yield cost, (keep_plus, first, pivot)
