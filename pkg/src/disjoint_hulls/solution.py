"""Solution container and the strict-side cost of a candidate line."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .geometry import Line, Point, Side, Sign
from .hull import hull_indices, separating_line_coords


class PointOnLine(ValueError):
    """A point lies exactly on a line that was supposed to avoid it."""


class Orientation(enum.Enum):
    PLUS_ABOVE = "plus_above"
    PLUS_BELOW = "plus_below"

    @property
    def plus_side(self) -> Side:
        return Side.ABOVE if self is Orientation.PLUS_ABOVE else Side.BELOW

    @property
    def minus_side(self) -> Side:
        return Side.BELOW if self is Orientation.PLUS_ABOVE else Side.ABOVE

    def opposite(self) -> "Orientation":
        return Orientation.PLUS_BELOW if self is Orientation.PLUS_ABOVE else Orientation.PLUS_ABOVE


@dataclass(frozen=True)
class SeparatorSolution:
    k_min: int
    removed_ids: tuple[int, ...]
    line: Line
    orientation: Orientation

    def __post_init__(self):
        object.__setattr__(self, "removed_ids", tuple(sorted(self.removed_ids)))


def check_instance(P: Sequence[Point], M: Sequence[Point]) -> None:
    ids = [p.id for p in P] + [p.id for p in M]
    if len(set(ids)) != len(ids):
        raise ValueError("point ids must be unique across both sets")


def wrong_side_ids(P: Iterable[Point], M: Iterable[Point], line: Line, orientation: Orientation) -> list[int]:
    """Ids of points not strictly on their own side (points on the line count as wrong)."""
    plus_side = orientation.plus_side
    minus_side = orientation.minus_side
    out = [p.id for p in P if line.side(p) != plus_side]
    out += [p.id for p in M if line.side(p) != minus_side]
    return sorted(out)


def cost_of_line(P: Sequence[Point], M: Sequence[Point], line: Line) -> tuple[int, Orientation, list[int]]:
    """Cheaper orientation of ``line`` and the points it would have to drop.

    Ties go to ``PLUS_ABOVE``.  Raises :class:`PointOnLine` when any input
    point lies on the line.
    """
    plus_above = plus_below = minus_above = minus_below = 0
    for group, is_plus in ((P, True), (M, False)):
        for p in group:
            s = line.side(p)
            if s == Side.ON:
                raise PointOnLine(f"point {p.id} lies on {line}")
            if is_plus:
                if s == Side.ABOVE:
                    plus_above += 1
                else:
                    plus_below += 1
            elif s == Side.ABOVE:
                minus_above += 1
            else:
                minus_below += 1
    cost_a = plus_below + minus_above
    cost_b = plus_above + minus_below
    orientation = Orientation.PLUS_ABOVE if cost_a <= cost_b else Orientation.PLUS_BELOW
    return min(cost_a, cost_b), orientation, wrong_side_ids(P, M, line, orientation)


def kept_sets(P: Sequence[Point], M: Sequence[Point], removed: Iterable[int]) -> tuple[list[Point], list[Point]]:
    gone = set(removed)
    return [p for p in P if p.id not in gone], [p for p in M if p.id not in gone]


def witness_for(P: Sequence[Point], M: Sequence[Point], removed: Iterable[int]) -> tuple[Line, Orientation]:
    """Strictly separating line for the kept sets, built from their separating axis."""
    keep_p, keep_m = kept_sets(P, M, removed)
    # integer coordinates keep the hull arithmetic cheap; scaling preserves sides
    coords, den = scale_to_integers([p.xy for p in keep_p + keep_m])
    cp, cm = coords[: len(keep_p)], coords[len(keep_p) :]
    hp = [cp[i] for i in hull_indices(cp)]
    hm = [cm[i] for i in hull_indices(cm)]
    line, plus_side = separating_line_coords(hp, hm)
    line = Line(line.a, line.b, Fraction(line.c, den))
    return line, (Orientation.PLUS_ABOVE if plus_side == Side.ABOVE else Orientation.PLUS_BELOW)


def empty_solution() -> SeparatorSolution:
    return SeparatorSolution(0, (), Line(0, 1, 0), Orientation.PLUS_ABOVE)


def single_location_solution(P: Sequence[Point], M: Sequence[Point]) -> SeparatorSolution:
    """All points share one coordinate: keep exactly one color."""
    drop_plus = sorted(p.id for p in P)
    drop_minus = sorted(p.id for p in M)
    if (len(drop_plus), drop_plus) < (len(drop_minus), drop_minus):
        removed = drop_plus
    else:
        removed = drop_minus
    line, orientation = witness_for(P, M, removed)
    return SeparatorSolution(len(removed), tuple(removed), line, orientation)


def relabel(P: Sequence[Point], M: Sequence[Point], flips: Iterable[int]) -> tuple[list[Point], list[Point]]:
    """Instance after inverting the reported sign of every id in ``flips``."""
    chosen = set(flips)
    new_p = [p for p in P if p.id not in chosen] + [q.with_sign(Sign.PLUS) for q in M if q.id in chosen]
    new_m = [q for q in M if q.id not in chosen] + [p.with_sign(Sign.MINUS) for p in P if p.id in chosen]
    return new_p, new_m


def scale_to_integers(coords: Sequence[tuple[Fraction, Fraction]]) -> tuple[list[tuple[int, int]], int]:
    """Integer coordinates after a uniform scale by the common denominator."""
    den = 1
    for x, y in coords:
        den = math.lcm(den, x.denominator, y.denominator)
    return [(int(x * den), int(y * den)) for x, y in coords], den


@dataclass
class Site:
    """All input points sharing one coordinate."""

    x: Fraction
    y: Fraction
    plus_ids: list[int]
    minus_ids: list[int]

    @property
    def n_plus(self) -> int:
        return len(self.plus_ids)

    @property
    def n_minus(self) -> int:
        return len(self.minus_ids)


def group_sites(P: Sequence[Point], M: Sequence[Point]) -> list[Site]:
    """Distinct coordinates in (x, y) order with the ids found at each."""
    sites: dict[tuple[Fraction, Fraction], Site] = {}
    for p in P:
        sites.setdefault(p.xy, Site(p.x, p.y, [], [])).plus_ids.append(p.id)
    for q in M:
        sites.setdefault(q.xy, Site(q.x, q.y, [], [])).minus_ids.append(q.id)
    return [sites[key] for key in sorted(sites)]
