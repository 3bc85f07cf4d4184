"""Binary sensor network scenarios.

A target sits at ``target`` and moves along ``direction``.  Each sensor
reports +1 when it lies ahead of the target, ``(s - target) . direction > 0``,
and -1 behind it.  The line through the target perpendicular to the motion
separates the two groups, so noise-free reports always have disjoint hulls
with the target outside both.  Faulty sensors are simulated by inverting
some reports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .dual import solve_dual
from .geometry import Point, Sign
from .naive import solve_naive
from .solution import SeparatorSolution

WINDOW = 100
TARGET_WINDOW = 50
MAX_DIRECTION = 5

SOLVERS = {"naive": solve_naive, "dual": solve_dual}


class InvalidParams(ValueError):
    pass


@dataclass(frozen=True)
class Scenario:
    sensors: tuple[Point, ...]
    target: Point
    direction: tuple[Fraction, Fraction]
    flipped_ids: frozenset[int]
    seed: int

    @property
    def plus(self) -> list[Point]:
        return [s for s in self.sensors if s.sign is Sign.PLUS]

    @property
    def minus(self) -> list[Point]:
        return [s for s in self.sensors if s.sign is Sign.MINUS]

    def true_sign(self, sensor: Point) -> Sign:
        dx, dy = self.direction
        ahead = (sensor.x - self.target.x) * dx + (sensor.y - self.target.y) * dy
        return Sign.PLUS if ahead > 0 else Sign.MINUS

    def clean(self) -> "Scenario":
        """The same scenario with every report correct."""
        sensors = tuple(s.with_sign(self.true_sign(s)) for s in self.sensors)
        return Scenario(sensors, self.target, self.direction, frozenset(), self.seed)

    def negated(self) -> "Scenario":
        """Reverse the motion direction; every report changes sign."""
        dx, dy = self.direction
        sensors = tuple(s.with_sign(s.sign.flipped()) for s in self.sensors)
        return Scenario(sensors, self.target, (-dx, -dy), self.flipped_ids, self.seed)


def generate_scenario(n: int, k: int, seed: int) -> Scenario:
    """Deterministic scenario with ``n`` sensors, ``k`` of them reporting wrongly."""
    if n < 0 or k < 0 or k > n:
        raise InvalidParams(f"need 0 <= k <= n, got n={n}, k={k}")
    rng = random.Random(seed)
    tx = rng.randint(-TARGET_WINDOW, TARGET_WINDOW)
    ty = rng.randint(-TARGET_WINDOW, TARGET_WINDOW)
    dx = dy = 0
    while dx == 0 and dy == 0:
        dx = rng.randint(-MAX_DIRECTION, MAX_DIRECTION)
        dy = rng.randint(-MAX_DIRECTION, MAX_DIRECTION)
    sensors = []
    while len(sensors) < n:
        x = rng.randint(-WINDOW, WINDOW)
        y = rng.randint(-WINDOW, WINDOW)
        ahead = (x - tx) * dx + (y - ty) * dy
        if ahead == 0:
            continue  # on the boundary line: resample
        sign = Sign.PLUS if ahead > 0 else Sign.MINUS
        sensors.append(Point(Fraction(x), Fraction(y), len(sensors), sign))
    flipped = frozenset(rng.sample(range(n), k))
    sensors = [s.with_sign(s.sign.flipped()) if s.id in flipped else s for s in sensors]
    return Scenario(tuple(sensors), Point(Fraction(tx), Fraction(ty)), (Fraction(dx), Fraction(dy)), flipped, seed)


@dataclass(frozen=True)
class FaultMetrics:
    k_min: int
    n_flipped: int
    precision: Optional[float]
    recall: Optional[float]

    def as_dict(self) -> dict:
        return {"k_min": self.k_min, "n_flipped": self.n_flipped, "precision": self.precision, "recall": self.recall}


def identify_faulty(sc: Scenario, algo: str = "dual") -> tuple[SeparatorSolution, FaultMetrics]:
    """Run a solver on the reported signs and score the removal set against the flips.

    Precision and recall are ``None`` when their denominators are zero.
    """
    try:
        solver = SOLVERS[algo]
    except KeyError:
        raise InvalidParams(f"unknown algorithm {algo!r}") from None
    sol = solver(sc.plus, sc.minus)
    hits = len(set(sol.removed_ids) & sc.flipped_ids)
    precision = hits / sol.k_min if sol.k_min else None
    recall = hits / len(sc.flipped_ids) if sc.flipped_ids else None
    return sol, FaultMetrics(sol.k_min, len(sc.flipped_ids), precision, recall)


def scenario_sidecar(sc: Scenario) -> dict:
    """JSON-ready metadata accompanying a scenario's instance file."""
    return {
        "seed": sc.seed,
        "target": [str(sc.target.x), str(sc.target.y)],
        "direction": [str(sc.direction[0]), str(sc.direction[1])],
        "flipped_ids": sorted(sc.flipped_ids),
    }
