import random
from collections import Counter
from fractions import Fraction
from pathlib import Path

import pytest

from disjoint_hulls.arrangement import (
    InconsistentArrangement,
    build_arrangement,
    cell_graph,
    propagate_weights,
    representative_point,
    upper_envelope_start,
)
from disjoint_hulls.dual import DualSolve, primal_line, solve_dual
from disjoint_hulls.geometry import Color, DualLine, Point, Sign, dual_of_point, instance
from disjoint_hulls.oracle import solve_subsets
from disjoint_hulls.solution import cost_of_line

from helpers import random_dual_lines, random_points

GOLDEN = Path(__file__).parent / "golden"


def dl(slope, intercept, color=Color.RED):
    return DualLine(Fraction(slope), Fraction(intercept), color)


def weighted(duals):
    arr = build_arrangement(duals, validate_each=True)
    g = cell_graph(arr)
    top = upper_envelope_start(arr)
    m = sum(1 for d in duals if d.color is Color.RED)
    return arr, top, propagate_weights(g, top, m)


def direct_counts(duals, p: Point):
    below_red = sum(1 for d in duals if d.color is Color.RED and d.y_at(p.x) < p.y)
    above_blue = sum(1 for d in duals if d.color is Color.BLUE and d.y_at(p.x) > p.y)
    return below_red, above_blue


def vertex_degree(arr, v):
    return sum(1 for h in range(len(arr.origin)) if arr.origin[h] == v)


class TestCombinatorics:
    def test_two_crossing_lines(self):
        arr = build_arrangement([dl(0, 0), dl(1, 0)], validate_each=True)
        assert len(arr.cells()) == 4
        assert len(arr.interior_vertices()) == 1

    def test_two_parallel_lines(self):
        arr = build_arrangement([dl(1, 0), dl(1, 3)], validate_each=True)
        assert len(arr.cells()) == 3
        assert arr.interior_vertices() == []

    def test_three_concurrent_lines(self):
        arr = build_arrangement([dl(-1, 0), dl(0, 0), dl(2, 0)], validate_each=True)
        assert len(arr.cells()) == 6
        (v,) = arr.interior_vertices()
        assert arr.vertex(v) == (0, 0)
        assert vertex_degree(arr, v) == 6

    def test_general_position_cell_count(self):
        duals = [dl(s, s * s) for s in range(-3, 4)]
        arr = build_arrangement(duals, validate_each=True)
        n = len(duals)
        assert len(arr.cells()) == 1 + n + n * (n - 1) // 2

    def test_duplicate_lines_merge_with_multiplicity(self):
        arr = build_arrangement([dl(1, 1), dl(1, 1), dl(1, 1, Color.BLUE)])
        (line,) = arr.lines
        assert (line.red, line.blue, line.color) == (2, 1, None)
        assert len(arr.cells()) == 2

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            build_arrangement([])


class TestUpperEnvelope:
    @pytest.mark.parametrize(
        "duals",
        [[dl(0, 0), dl(1, 0)], [dl(0, 0)], [dl(-1, 0), dl(0, 0), dl(2, 0)]],
    )
    def test_start_cell_is_above_every_line(self, duals):
        arr = build_arrangement(duals)
        p = representative_point(arr, upper_envelope_start(arr))
        assert all(p.y > d.y_at(p.x) for d in duals)


class TestWeights:
    def test_worked_example(self):
        red, blue = dual_of_point(Point(0, 0, sign=Sign.PLUS)), dual_of_point(Point(1, 0, sign=Sign.MINUS))
        arr, top, (w1, w2) = weighted([red, blue])
        assert (w1[top], w2[top]) == (1, 0)
        by_region = {}
        for cell in arr.cells():
            p = representative_point(arr, cell)
            by_region[(p.y > red.y_at(p.x), p.y > blue.y_at(p.x))] = (w1[cell], w2[cell])
        assert by_region[(True, False)] == (1, 1)  # east cell
        assert by_region[(False, True)] == (0, 0)  # west cell

    def test_weights_match_direct_counts(self):
        rng = random.Random(31)
        for _ in range(60):
            duals = random_dual_lines(rng)
            arr, _, (w1, w2) = weighted(duals)
            for cell in arr.cells():
                assert (w1[cell], w2[cell]) == direct_counts(duals, representative_point(arr, cell))

    def test_representatives_avoid_every_line(self):
        rng = random.Random(32)
        for _ in range(40):
            duals = random_dual_lines(rng)
            arr = build_arrangement(duals)
            signatures = set()
            for cell in arr.cells():
                p = representative_point(arr, cell)
                assert all(d.y_at(p.x) != p.y for d in duals)
                signatures.add(tuple(p.y > ln.slope * p.x - ln.intercept for ln in arr.lines))
            # distinct cells lie on distinct sides of some line
            assert len(signatures) == len(arr.cells())

    def test_inconsistent_graph_detected(self):
        arr = build_arrangement([dl(0, 0), dl(1, 0)])
        g = cell_graph(arr)
        u = next(iter(g.adjacency))
        v, k, above = g.adjacency[u][0]
        g.adjacency[u][0] = (v, k, not above)
        with pytest.raises(InconsistentArrangement):
            propagate_weights(g, upper_envelope_start(arr), 1)


class TestDualSolver:
    def test_orientation_identity_and_cost_identity(self):
        rng = random.Random(33)
        for _ in range(40):
            P, M = random_points(rng, rng.randint(1, 12))
            solve = DualSolve(P, M)
            for cell in solve.arrangement.cells():
                costs = solve.costs(cell)
                assert sum(costs.values()) == len(P) + len(M)
                line = primal_line(representative_point(solve.arrangement, cell))
                assert cost_of_line(P, M, line)[0] == min(costs.values())

    def test_examples(self):
        assert solve_dual(*instance([(0, 0)], [(1, 0)])).k_min == 0
        assert solve_dual(*instance([(0, 0), (2, 0)], [(1, 0), (3, 0)])).k_min == 1
        assert solve_dual(*instance([(0, 0), (1, 1)], [(5, 0), (6, 1)])).k_min == 0

    def test_never_worse_than_best_vertical_line(self):
        rng = random.Random(34)
        for _ in range(200):
            P, M = random_points(rng, rng.randint(1, 12), -5, 5)
            assert solve_dual(P, M).k_min <= vertical_sweep_cost(P, M)

    def test_vertical_optimum_is_matched(self):
        P, M = instance([(0, 0), (0, 5), (1, -3)], [(3, 9), (4, -9), (3, 0)])
        assert vertical_sweep_cost(P, M) == 0
        assert solve_dual(P, M).k_min == solve_subsets(P, M).k_min == 0


def vertical_sweep_cost(P, M) -> int:
    """Best strict vertical separator, by prefix counts over sorted x."""
    xs = sorted({p.x for p in P + M})
    cuts = [xs[0] - 1] + [(a + b) / 2 for a, b in zip(xs, xs[1:])] + [xs[-1] + 1]
    best = len(P) + len(M)
    for c in cuts:
        plus_left = sum(1 for p in P if p.x < c)
        minus_left = sum(1 for q in M if q.x < c)
        best = min(best, plus_left + (len(M) - minus_left), minus_left + (len(P) - plus_left))
    return best


def test_golden_dump():
    red, blue = dual_of_point(Point(0, 0, sign=Sign.PLUS)), dual_of_point(Point(1, 0, sign=Sign.MINUS))
    third = dual_of_point(Point(-1, 2, sign=Sign.PLUS))
    arr, _, (w1, w2) = weighted([red, blue, third])
    expected = (GOLDEN / "three_points.dump").read_text()
    assert arr.dump((w1, w2)) == expected
    again, _, weights = weighted([third, blue, red])
    assert again.dump(weights) == expected
