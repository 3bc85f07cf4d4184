"""Exact rational points and lines, with the point/line duality used by the dual solver.

Scalars are :class:`fractions.Fraction` throughout; no floating point value is
ever used in a predicate.

Duality convention: the point ``(a, b)`` maps to the line ``y = a*x - b`` and
the non-vertical line ``y = s*x + t`` maps back to the point ``(s, -t)``.  It
preserves above/below relations: ``p`` lies above ``l`` exactly when
``dual(l)`` lies above ``dual(p)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Number = Union[int, Fraction, str]


class VerticalLine(ValueError):
    """Raised when a vertical line is passed where duality is required."""


class Sign(enum.Enum):
    PLUS = "+"
    MINUS = "-"
    UNLABELED = "?"

    def flipped(self) -> "Sign":
        if self is Sign.PLUS:
            return Sign.MINUS
        if self is Sign.MINUS:
            return Sign.PLUS
        return self


class Color(enum.Enum):
    RED = "red"
    BLUE = "blue"


class Turn(enum.IntEnum):
    LEFT = 1
    COLLINEAR = 0
    RIGHT = -1


class Side(enum.IntEnum):
    ABOVE = 1
    ON = 0
    BELOW = -1


def as_scalar(value: Number) -> Fraction:
    """Convert ``value`` to an exact Fraction (floats are converted exactly)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite coordinate {value!r}")
        return Fraction(value)
    return Fraction(value)


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction
    id: int = -1
    sign: Sign = Sign.UNLABELED

    def __post_init__(self):
        if not isinstance(self.x, Fraction):
            object.__setattr__(self, "x", as_scalar(self.x))
        if not isinstance(self.y, Fraction):
            object.__setattr__(self, "y", as_scalar(self.y))

    @property
    def xy(self) -> tuple[Fraction, Fraction]:
        return (self.x, self.y)

    def with_sign(self, sign: Sign) -> "Point":
        return Point(self.x, self.y, self.id, sign)


def _normalize_coefficients(a: Fraction, b: Fraction, c: Fraction) -> tuple[int, int, int]:
    den = math.lcm(a.denominator, b.denominator, c.denominator)
    ia, ib, ic = int(a * den), int(b * den), int(c * den)
    if ia == 0 and ib == 0:
        raise ValueError("line normal (a, b) must be nonzero")
    g = math.gcd(math.gcd(ia, ib), ic)
    ia, ib, ic = ia // g, ib // g, ic // g
    if ia < 0 or (ia == 0 and ib < 0):
        ia, ib, ic = -ia, -ib, -ic
    return ia, ib, ic


@dataclass(frozen=True, init=False)
class Line:
    """The line ``a*x + b*y = c`` with coprime integer coefficients.

    The first nonzero of ``(a, b)`` is positive.  ``ABOVE`` is the side with
    larger ``y``, or larger ``x`` when the line is vertical.
    """

    a: int
    b: int
    c: int

    def __init__(self, a: Number, b: Number, c: Number):
        na, nb, nc = _normalize_coefficients(as_scalar(a), as_scalar(b), as_scalar(c))
        object.__setattr__(self, "a", na)
        object.__setattr__(self, "b", nb)
        object.__setattr__(self, "c", nc)

    @classmethod
    def through(cls, p: Point, q: Point) -> "Line":
        if p.xy == q.xy:
            raise ValueError("a line needs two distinct points")
        a = q.y - p.y
        b = p.x - q.x
        return cls(a, b, a * p.x + b * p.y)

    @classmethod
    def from_slope_intercept(cls, slope: Number, intercept: Number) -> "Line":
        """Line ``y = slope*x + intercept``."""
        return cls(-as_scalar(slope), 1, as_scalar(intercept))

    @property
    def is_vertical(self) -> bool:
        return self.b == 0

    def evaluate(self, p: Point) -> Fraction:
        return self.a * p.x + self.b * p.y - self.c

    def side(self, p: Point) -> Side:
        v = self.evaluate(p)
        if self.b < 0:
            v = -v
        return Side.ABOVE if v > 0 else Side.BELOW if v < 0 else Side.ON

    def slope_intercept(self) -> tuple[Fraction, Fraction]:
        if self.b == 0:
            raise VerticalLine(f"{self} is vertical")
        return Fraction(-self.a, self.b), Fraction(self.c, self.b)

    def __str__(self) -> str:
        return f"{self.a}*x + {self.b}*y = {self.c}"


@dataclass(frozen=True)
class DualLine:
    """The line ``y = slope*x - intercept``."""

    slope: Fraction
    intercept: Fraction
    color: Color
    source_point_id: int = -1

    def y_at(self, x: Fraction) -> Fraction:
        return self.slope * x - self.intercept


def orientation(a: Point, b: Point, c: Point) -> Turn:
    cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if cross > 0:
        return Turn.LEFT
    if cross < 0:
        return Turn.RIGHT
    return Turn.COLLINEAR


def side_of_line(line: Line, p: Point) -> Side:
    return line.side(p)


def color_of(sign: Sign) -> Color:
    if sign is Sign.PLUS:
        return Color.RED
    if sign is Sign.MINUS:
        return Color.BLUE
    raise ValueError("unlabeled points have no dual color")


def dual_of_point(p: Point) -> DualLine:
    # unlabeled points are drawn red; the color only matters for labeled input
    color = Color.BLUE if p.sign is Sign.MINUS else Color.RED
    return DualLine(p.x, p.y, color, p.id)


def dual_of_line(line: Line) -> Point:
    slope, intercept = line.slope_intercept()
    return Point(slope, -intercept)


def line_of_dual(d: DualLine) -> Line:
    """The primal :class:`Line` object describing the dual line ``d`` itself."""
    return Line.from_slope_intercept(d.slope, -d.intercept)


def split_by_sign(points: Iterable[Point]) -> tuple[list[Point], list[Point]]:
    plus, minus = [], []
    for p in points:
        if p.sign is Sign.PLUS:
            plus.append(p)
        elif p.sign is Sign.MINUS:
            minus.append(p)
        else:
            raise ValueError(f"point {p.id} has no sign")
    return plus, minus


def labeled(coords: Iterable[tuple[Number, Number]], sign: Sign, start_id: int = 0) -> list[Point]:
    """Build signed points with consecutive ids from plain coordinate pairs."""
    return [Point(as_scalar(x), as_scalar(y), start_id + i, sign) for i, (x, y) in enumerate(coords)]


def instance(plus: Iterable[tuple[Number, Number]], minus: Iterable[tuple[Number, Number]]):
    """Convenience constructor: ids run over ``plus`` first, then ``minus``."""
    P = labeled(plus, Sign.PLUS)
    M = labeled(minus, Sign.MINUS, start_id=len(P))
    return P, M
