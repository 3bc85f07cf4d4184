"""Ground truth by enumerating removal subsets in increasing size."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .geometry import Point
from .hull import convex_hull, hulls_disjoint_bruteforce
from .solution import SeparatorSolution, check_instance, kept_sets, witness_for

DEFAULT_LIMIT = 12


class InstanceTooLarge(ValueError):
    pass


def solve_subsets(P: Sequence[Point], M: Sequence[Point], limit: int = DEFAULT_LIMIT) -> SeparatorSolution:
    """Smallest removal set (lexicographically first of its size) leaving disjoint hulls."""
    check_instance(P, M)
    n = len(P) + len(M)
    if n > limit:
        raise InstanceTooLarge(f"{n} points exceed the oracle cap of {limit}")
    ids = sorted(p.id for p in list(P) + list(M))
    for size in range(n + 1):
        for removed in combinations(ids, size):
            keep_p, keep_m = kept_sets(P, M, removed)
            if hulls_disjoint_bruteforce(convex_hull(keep_p), convex_hull(keep_m)):
                line, orientation = witness_for(P, M, removed)
                return SeparatorSolution(size, removed, line, orientation)
    raise AssertionError("removing every point always succeeds")
