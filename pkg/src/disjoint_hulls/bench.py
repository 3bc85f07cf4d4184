"""Random instances and a timing harness comparing the two solvers."""

from __future__ import annotations

import csv
import io
import random
import statistics
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geometry import Point, Sign
from .io import split_instance
from .sensors import SOLVERS

COORD_RANGE = 1000


def random_instance(n: int, seed: int, coord_range: int = COORD_RANGE) -> list[Point]:
    """``n`` integer points in ``[-coord_range, coord_range]^2``, half plus, in shuffled order."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    rng = random.Random(seed)
    signs = [Sign.PLUS] * ((n + 1) // 2) + [Sign.MINUS] * (n // 2)
    rng.shuffle(signs)
    return [
        Point(Fraction(rng.randint(-coord_range, coord_range)), Fraction(rng.randint(-coord_range, coord_range)), i, s)
        for i, s in enumerate(signs)
    ]


@dataclass(frozen=True)
class BenchRow:
    size: int
    algo: str
    median_ms: float
    k_min: int
    agreement: bool


def time_solver(algo: str, P, M, reps: int) -> tuple[float, int]:
    solver = SOLVERS[algo]
    times, k = [], None
    for _ in range(reps):
        t0 = time.perf_counter()
        k = solver(P, M).k_min
        times.append(time.perf_counter() - t0)
    return statistics.median(times), k


def run_benchmark(sizes: Sequence[int], algos: Sequence[str], reps: int = 5, seed: int = 0) -> list[BenchRow]:
    """One row per (size, algo); ``agreement`` is true when every algo found the same ``k_min``."""
    if not sizes:
        raise ValueError("no sizes given")
    if reps < 1:
        raise ValueError("reps must be at least 1")
    unknown = [a for a in algos if a not in SOLVERS]
    if unknown or not algos:
        raise ValueError(f"unknown algorithms {unknown}" if unknown else "no algorithms given")
    rows = []
    for size in sizes:
        P, M = split_instance(random_instance(size, seed + size))
        results = {a: time_solver(a, P, M, reps) for a in algos}
        agree = len({k for _, k in results.values()}) == 1
        rows.extend(BenchRow(size, a, t * 1000, k, agree) for a, (t, k) in results.items())
    return rows


def rows_to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["size", "algo", "median_ms", "k_min", "agreement"])
    for r in rows:
        writer.writerow([r.size, r.algo, f"{r.median_ms:.3f}", r.k_min, str(r.agreement).lower()])
    return buf.getvalue()
