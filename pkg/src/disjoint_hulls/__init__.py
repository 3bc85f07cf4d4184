"""Fewest point removals that make two labeled planar point sets have disjoint convex hulls."""

from .dual import solve_dual
from .geometry import Color, DualLine, Line, Point, Side, Sign, Turn, dual_of_line, dual_of_point, instance, orientation
from .hull import Hull, convex_hull, hulls_disjoint, hulls_disjoint_bruteforce, separating_line
from .naive import solve_naive
from .oracle import InstanceTooLarge, solve_subsets
from .sensors import Scenario, generate_scenario, identify_faulty
from .solution import Orientation, PointOnLine, SeparatorSolution, cost_of_line
from .verify import VerificationReport, verify_solution

__version__ = "0.1.0"

__all__ = [
    "Color", "DisjointHullsClassifier", "DualLine", "Hull", "InstanceTooLarge", "Line", "Orientation",
    "Point", "PointOnLine", "Scenario", "SeparatorSolution", "Side", "Sign", "Turn", "VerificationReport",
    "convex_hull", "cost_of_line", "dual_of_line", "dual_of_point", "generate_scenario", "hulls_disjoint",
    "hulls_disjoint_bruteforce", "identify_faulty", "instance", "orientation", "separating_line",
    "solve_dual", "solve_naive", "solve_subsets", "verify_solution",
]


def __getattr__(name):
    # keeps scikit-learn off the import path unless the estimator is used
    if name == "DisjointHullsClassifier":
        from .estimator import DisjointHullsClassifier

        return DisjointHullsClassifier
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
