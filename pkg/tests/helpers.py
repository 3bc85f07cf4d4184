"""Instance generators and transforms shared by the test modules."""

import random
from fractions import Fraction

from disjoint_hulls.geometry import Point, Sign, instance


def random_points(rng: random.Random, n: int, lo: int = -8, hi: int = 8) -> tuple[list[Point], list[Point]]:
    """``n`` labeled points with small integer coordinates; both sets may be empty."""
    plus, minus = [], []
    for _ in range(n):
        xy = (rng.randint(lo, hi), rng.randint(lo, hi))
        (plus if rng.random() < 0.5 else minus).append(xy)
    return instance(plus, minus)


def affine_map(points, A, b):
    (a11, a12), (a21, a22) = A
    return [
        Point(a11 * p.x + a12 * p.y + b[0], a21 * p.x + a22 * p.y + b[1], p.id, p.sign)
        for p in points
    ]


def swap_colors(P, M):
    return [q.with_sign(Sign.PLUS) for q in M], [p.with_sign(Sign.MINUS) for p in P]


def random_invertible(rng: random.Random):
    while True:
        A = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(2)] for _ in range(2)]
        if A[0][0] * A[1][1] - A[0][1] * A[1][0] != 0:
            return A, (Fraction(rng.randint(-9, 9), rng.randint(1, 4)), Fraction(rng.randint(-9, 9)))


def random_hull_pair(rng: random.Random):
    """Two point clouds of up to 8 points each, often degenerate or touching."""
    def cloud():
        size = rng.choice([0, 1, 2, 3, 4, 5, 6, 8])
        span = rng.choice([2, 4, 8])
        ox, oy = rng.randint(-4, 4), rng.randint(-4, 4)
        if rng.random() < 0.15:
            # collinear cloud
            dx, dy = rng.randint(-2, 2), rng.randint(-2, 2)
            return [Point(ox + t * dx, oy + t * dy) for t in (rng.randint(-3, 3) for _ in range(size))]
        return [Point(ox + rng.randint(-span, span), oy + rng.randint(-span, span)) for _ in range(size)]

    return cloud(), cloud()


def random_dual_lines(rng: random.Random, max_lines: int = 12):
    """Colored dual lines with forced parallel pairs and concurrent triples."""
    from disjoint_hulls.geometry import Color, DualLine

    lines = []

    def add(slope, intercept):
        lines.append(DualLine(Fraction(slope), Fraction(intercept), rng.choice([Color.RED, Color.BLUE]), len(lines)))

    for _ in range(rng.randint(1, 4)):
        add(rng.randint(-5, 5), rng.randint(-5, 5))
    while len(lines) < max_lines - 2:
        kind = rng.random()
        if kind < 0.3:
            base = rng.choice(lines)
            add(base.slope, base.intercept + rng.randint(1, 4))
        elif kind < 0.6:
            # three lines through one point
            x0, y0 = Fraction(rng.randint(-3, 3), rng.randint(1, 2)), rng.randint(-4, 4)
            for s in rng.sample(range(-5, 6), 3):
                add(s, s * x0 - y0)
        elif kind < 0.7:
            add(*rng.choice([(d.slope, d.intercept) for d in lines]))  # duplicate line
        else:
            add(Fraction(rng.randint(-9, 9), rng.randint(1, 3)), rng.randint(-6, 6))
        if rng.random() < 0.25:
            break
    return lines[:max_lines]
