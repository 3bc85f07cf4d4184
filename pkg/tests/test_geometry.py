from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from disjoint_hulls.geometry import (
    Color,
    Line,
    Point,
    Side,
    Sign,
    Turn,
    VerticalLine,
    as_scalar,
    dual_of_line,
    dual_of_point,
    orientation,
    side_of_line,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
points = st.builds(Point, rationals, rationals)


def P(x, y, sign=Sign.UNLABELED):
    return Point(Fraction(x), Fraction(y), sign=sign)


@pytest.mark.parametrize(
    "a, b, c, expected",
    [
        ((0, 0), (1, 0), (0, 1), Turn.LEFT),
        ((0, 0), (1, 1), (2, 2), Turn.COLLINEAR),
        ((0, 0), (0, 1), (1, 0), Turn.RIGHT),
    ],
)
def test_orientation_examples(a, b, c, expected):
    assert orientation(P(*a), P(*b), P(*c)) is expected


def test_dual_of_point_examples():
    d = dual_of_point(P(2, 3, Sign.PLUS))
    assert (d.slope, d.intercept, d.color) == (2, 3, Color.RED)
    assert d.y_at(Fraction(1)) == -1
    origin = dual_of_point(P(0, 0, Sign.MINUS))
    assert origin.color is Color.BLUE and origin.y_at(Fraction(7)) == 0


def test_dual_of_line_examples():
    assert dual_of_line(Line.from_slope_intercept(2, -3)).xy == (2, 3)
    assert dual_of_line(Line.from_slope_intercept(0, 0)).xy == (0, 0)
    with pytest.raises(VerticalLine):
        dual_of_line(Line(1, 0, 1))


def test_duality_roundtrip_example():
    d = dual_of_point(P(-1, 5))
    assert dual_of_line(Line.from_slope_intercept(d.slope, -d.intercept)).xy == (-1, 5)


def test_side_examples():
    x_axis = Line.from_slope_intercept(0, 0)
    assert side_of_line(x_axis, P(0, 1)) is Side.ABOVE
    assert side_of_line(x_axis, P(5, 0)) is Side.ON
    assert side_of_line(Line.from_slope_intercept(1, 0), P(10, 5)) is Side.BELOW


def test_vertical_line_above_means_right():
    x1 = Line(1, 0, 1)
    assert x1.side(P(2, 0)) is Side.ABOVE
    assert x1.side(P(0, 0)) is Side.BELOW


def test_line_normalization_is_unique():
    assert Line(2, 4, 6) == Line(-1, -2, -3) == Line(Fraction(1, 3), Fraction(2, 3), 1)
    assert Line(0, -3, 6) == Line(0, 1, -2)
    with pytest.raises(ValueError):
        Line(0, 0, 1)


def test_as_scalar_rejects_non_finite():
    assert as_scalar(0.5) == Fraction(1, 2)
    with pytest.raises(ValueError):
        as_scalar(float("nan"))


@given(points, points, points)
def test_orientation_antisymmetric(a, b, c):
    assert orientation(a, b, c) == -orientation(a, c, b)


@given(rationals, rationals, points)
def test_duality_preserves_order(s, t, p):
    line = Line.from_slope_intercept(s, t)
    v = dual_of_line(line)
    dual_y = dual_of_point(p).y_at(v.x)
    expected = Side.ABOVE if v.y > dual_y else Side.BELOW if v.y < dual_y else Side.ON
    assert side_of_line(line, p) is expected


@given(points, points)
def test_line_through_contains_both_points(p, q):
    if p.xy == q.xy:
        return
    line = Line.through(p, q)
    assert line.side(p) is Side.ON and line.side(q) is Side.ON


@given(st.lists(st.tuples(st.sampled_from("+-*/"), rationals), max_size=30))
def test_scalar_arithmetic_matches_integer_reference(ops):
    # reference keeps an explicit (numerator, denominator) pair of Python ints
    value, num, den = Fraction(1), 1, 1
    for op, operand in ops:
        n, d = operand.numerator, operand.denominator
        if op == "/" and n == 0:
            continue
        if op == "+":
            value, num, den = value + operand, num * d + n * den, den * d
        elif op == "-":
            value, num, den = value - operand, num * d - n * den, den * d
        elif op == "*":
            value, num, den = value * operand, num * n, den * d
        else:
            value, num, den = value / operand, num * d, den * n
        assert value * den == num
