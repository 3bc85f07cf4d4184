"""Quadratic solver on the dual arrangement.

Each input point becomes a dual line, red for plus and blue for minus.  A
point ``v`` of the dual plane is the dual of a primal line, and the red lines
below ``v`` are exactly the plus points above that primal line (likewise the
blue lines above ``v`` are the minus points below it).  Weights propagated
over the cell graph therefore give, per cell, the cost of keeping plus points
below the primal line (``w1 + w2``) and, by complement, of keeping them above
(``(m - w1) + (n - w2)``).

Vertical primal lines have no dual point.  This loses nothing: a strictly
separating vertical line can be tilted slightly about any point on it
without any input point changing side.
"""

from __future__ import annotations

from typing import Sequence

from .arrangement import (
    Arrangement,
    build_arrangement,
    cell_graph,
    propagate_weights,
    representative_point,
    upper_envelope_start,
)
from .geometry import Color, DualLine, Line, Point, dual_of_point, line_of_dual
from .solution import (
    Orientation,
    SeparatorSolution,
    check_instance,
    empty_solution,
    wrong_side_ids,
)


def primal_line(v: Point) -> Line:
    """The primal line whose dual is the point ``v``."""
    return line_of_dual(dual_of_point(v))


class DualSolve:
    """The weighted arrangement of one instance."""

    def __init__(self, P: Sequence[Point], M: Sequence[Point]):
        self.P = list(P)
        self.M = list(M)
        duals = [DualLine(p.x, p.y, Color.RED, p.id) for p in self.P]
        duals += [DualLine(q.x, q.y, Color.BLUE, q.id) for q in self.M]
        self.arrangement: Arrangement = build_arrangement(duals)
        self.graph = cell_graph(self.arrangement)
        self.start = upper_envelope_start(self.arrangement)
        self.w1, self.w2 = propagate_weights(self.graph, self.start, len(self.P))

    def costs(self, cell: int) -> dict[Orientation, int]:
        m, n = len(self.P), len(self.M)
        w1, w2 = self.w1[cell], self.w2[cell]
        return {Orientation.PLUS_BELOW: w1 + w2, Orientation.PLUS_ABOVE: (m - w1) + (n - w2)}

    def best(self) -> tuple[int, int, Orientation, Line, list[int]]:
        """Cheapest (cell, orientation); ties resolved by smallest sorted removal ids."""
        ranked = []
        for cell in self.arrangement.cells():
            for orientation, cost in self.costs(cell).items():
                ranked.append((cost, cell, orientation))
        low = min(cost for cost, _, _ in ranked)
        best = None
        for cost, cell, orientation in ranked:
            if cost != low:
                continue
            line = primal_line(representative_point(self.arrangement, cell))
            removed = wrong_side_ids(self.P, self.M, line, orientation)
            if best is None or removed < best[4]:
                best = (cost, cell, orientation, line, removed)
        return best


def solve_dual(P: Sequence[Point], M: Sequence[Point]) -> SeparatorSolution:
    check_instance(P, M)
    if not P and not M:
        return empty_solution()
    cost, _, orientation, line, removed = DualSolve(P, M).best()
    return SeparatorSolution(cost, tuple(removed), line, orientation)
