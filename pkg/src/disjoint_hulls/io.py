"""Instance and solution file formats.

Instance files hold one ``x,y,sign`` record per line, where ``x`` and ``y``
are integers or exact fractions ``p/q`` and ``sign`` is ``+1`` or ``-1``.
``#`` starts a comment line and blank lines are ignored.  Point ids follow
record order starting at 0.

Solutions are JSON objects; exact rationals are always written as strings.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence, Union

from .geometry import Line, Point, Sign
from .solution import Orientation, SeparatorSolution

_SIGNS = {"+1": Sign.PLUS, "1": Sign.PLUS, "-1": Sign.MINUS}


class InstanceParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


_NUMBER = re.compile(r"[+-]?\d+(?:/\d+)?")


def _parse_number(text: str) -> Fraction:
    text = text.strip()
    if not _NUMBER.fullmatch(text):
        raise ValueError(f"expected an integer or p/q, got {text!r}")
    return Fraction(text)


def parse_instance(text: str) -> list[Point]:
    points = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 3:
            raise InstanceParseError(line_no, f"expected 'x,y,sign', got {raw!r}")
        try:
            x, y = _parse_number(fields[0]), _parse_number(fields[1])
        except (ValueError, ZeroDivisionError) as exc:
            raise InstanceParseError(line_no, str(exc)) from None
        if fields[2] not in _SIGNS:
            raise InstanceParseError(line_no, f"sign must be +1 or -1, got {fields[2]!r}")
        points.append(Point(x, y, len(points), _SIGNS[fields[2]]))
    return points


def read_instance(path: Union[str, Path]) -> list[Point]:
    return parse_instance(Path(path).read_text())


def format_instance(points: Iterable[Point], header: str = "") -> str:
    lines = [f"# {row}" for row in header.splitlines()] if header else []
    for p in points:
        if p.sign is Sign.UNLABELED:
            raise ValueError(f"point {p.id} has no sign")
        lines.append(f"{p.x},{p.y},{'+1' if p.sign is Sign.PLUS else '-1'}")
    return "\n".join(lines) + "\n" if lines else ""


def solution_to_dict(sol: SeparatorSolution, algo: str, mode: str = "remove") -> dict:
    return {
        "k_min": sol.k_min,
        "removed_ids": sorted(sol.removed_ids),
        "line": {"a": str(sol.line.a), "b": str(sol.line.b), "c": str(sol.line.c)},
        "orientation": sol.orientation.value,
        "algo": algo,
        "mode": mode,
    }


def solution_from_dict(data: dict) -> tuple[SeparatorSolution, str, str]:
    line = Line(Fraction(data["line"]["a"]), Fraction(data["line"]["b"]), Fraction(data["line"]["c"]))
    sol = SeparatorSolution(int(data["k_min"]), tuple(int(i) for i in data["removed_ids"]), line,
                            Orientation(data["orientation"]))
    return sol, data.get("algo", ""), data.get("mode", "remove")


def dump_solution(sol: SeparatorSolution, algo: str, mode: str = "remove") -> str:
    return json.dumps(solution_to_dict(sol, algo, mode), indent=2, sort_keys=True) + "\n"


def load_solution(text: str) -> tuple[SeparatorSolution, str, str]:
    return solution_from_dict(json.loads(text))


def split_instance(points: Sequence[Point]) -> tuple[list[Point], list[Point]]:
    return [p for p in points if p.sign is Sign.PLUS], [p for p in points if p.sign is Sign.MINUS]
