"""Independent validity checks for a :class:`SeparatorSolution`.

Nothing here trusts solver internals: hulls and sides are recomputed from
the raw input points.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from .geometry import Point, Side
from .hull import convex_hull, hulls_disjoint, hulls_disjoint_bruteforce
from .oracle import DEFAULT_LIMIT, solve_subsets
from .solution import SeparatorSolution, kept_sets, relabel

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if c.status == FAIL]

    def add(self, name: str, ok: Optional[bool], detail: str = "") -> None:
        status = SKIP if ok is None else PASS if ok else FAIL
        self.checks.append(Check(name, status, detail))

    def to_dict(self) -> dict:
        return {"valid": self.valid, "checks": [asdict(c) for c in self.checks]}


def verify_solution(
    P: Sequence[Point],
    M: Sequence[Point],
    sol: SeparatorSolution,
    certify_optimal: bool = False,
    mode: str = "remove",
    oracle_limit: int = DEFAULT_LIMIT,
) -> VerificationReport:
    report = VerificationReport()
    all_ids = {p.id for p in P} | {q.id for q in M}
    removed = list(sol.removed_ids)

    unknown = sorted(set(removed) - all_ids)
    count_ok = len(removed) == sol.k_min and len(set(removed)) == len(removed) and not unknown
    report.add(
        "removal_count",
        count_ok,
        f"k_min={sol.k_min}, |removed_ids|={len(removed)}" + (f", unknown ids {unknown}" if unknown else ""),
    )

    keep_p, keep_m = kept_sets(P, M, removed)
    on_line = sorted(p.id for p in keep_p + keep_m if sol.line.side(p) == Side.ON)
    report.add("no_kept_point_on_line", not on_line, f"on line: {on_line}" if on_line else "")

    plus_side, minus_side = sol.orientation.plus_side, sol.orientation.minus_side
    wrong = sorted(
        [p.id for p in keep_p if sol.line.side(p) != plus_side]
        + [q.id for q in keep_m if sol.line.side(q) != minus_side]
    )
    report.add("strict_sides", not wrong, f"not strictly on own side: {wrong}" if wrong else "")

    hp, hm = convex_hull(keep_p), convex_hull(keep_m)
    report.add("hulls_disjoint_sat", hulls_disjoint(hp, hm))
    report.add("hulls_disjoint_bruteforce", hulls_disjoint_bruteforce(hp, hm))

    if mode == "flip":
        fp, fm = relabel(P, M, removed)
        report.add("flips_restore_disjointness", hulls_disjoint(convex_hull(fp), convex_hull(fm)))

    if not certify_optimal:
        report.add("optimal", None, "not requested")
    elif len(P) + len(M) > oracle_limit:
        report.add("optimal", None, f"instance exceeds oracle cap {oracle_limit}")
    else:
        best = solve_subsets(P, M, limit=oracle_limit).k_min
        report.add("optimal", best == sol.k_min, f"oracle k_min={best}")
    return report
