"""Command-line front end: ``disjoint-hulls {solve,verify,gen,bench,render}``.

Exit codes: 0 success, 1 benchmark disagreement, 2 bad input or parameters,
3 failed verification, 4 instance too large for the exhaustive solver.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import bench, render
from .dual import solve_dual
from .io import (
    InstanceParseError,
    dump_solution,
    format_instance,
    load_solution,
    read_instance,
    split_instance,
)
from .naive import solve_naive
from .oracle import DEFAULT_LIMIT, InstanceTooLarge, solve_subsets
from .sensors import InvalidParams, generate_scenario, scenario_sidecar
from .verify import verify_solution

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_INVALID, EXIT_TOO_LARGE = 0, 1, 2, 3, 4

SOLVERS = {"naive": solve_naive, "dual": solve_dual, "oracle": solve_subsets}


class _Abort(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _fail(code: int, message: str) -> int:
    print(f"disjoint-hulls: {message}", file=sys.stderr)
    return code


def _load(path: str):
    try:
        return read_instance(path)
    except InstanceParseError as exc:
        raise _Abort(EXIT_USAGE, f"{path}: {exc}") from None
    except OSError as exc:
        raise _Abort(EXIT_USAGE, str(exc)) from None


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    P, M = split_instance(_load(args.input))
    try:
        sol = SOLVERS[args.algo](P, M)
    except InstanceTooLarge as exc:
        return _fail(EXIT_TOO_LARGE, str(exc))
    if args.certify:
        report = verify_solution(P, M, sol, certify_optimal=True, mode=args.mode)
        if not report.valid:
            print(json.dumps(report.to_dict(), indent=2), file=sys.stderr)
            return _fail(EXIT_INVALID, f"certification failed: {', '.join(report.failed())}")
    _write(dump_solution(sol, args.algo, args.mode), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    P, M = split_instance(_load(args.input))
    try:
        sol, _, mode = load_solution(Path(args.solution).read_text())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        return _fail(EXIT_USAGE, f"{args.solution}: unreadable solution ({exc})")
    report = verify_solution(P, M, sol, certify_optimal=args.certify_optimal, mode=mode)
    sys.stdout.write(json.dumps(report.to_dict(), indent=2) + "\n")
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_gen(args) -> int:
    if args.n < 0:
        return _fail(EXIT_USAGE, f"--n must be non-negative, got {args.n}")
    if args.preset == "random":
        _write(format_instance(bench.random_instance(args.n, args.seed), f"random n={args.n} seed={args.seed}"), args.out)
        return EXIT_OK
    try:
        sc = generate_scenario(args.n, args.k, args.seed)
    except InvalidParams as exc:
        return _fail(EXIT_USAGE, str(exc))
    _write(format_instance(sc.sensors, f"sensor n={args.n} k={args.k} seed={args.seed}"), args.out)
    sidecar = args.sidecar or (f"{args.out}.sidecar.json" if args.out else None)
    if sidecar:
        Path(sidecar).write_text(json.dumps(scenario_sidecar(sc), indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def cmd_bench(args) -> int:
    try:
        sizes = _int_list(args.sizes)
        algos = [a.strip() for a in args.algos.split(",") if a.strip()]
        rows = bench.run_benchmark(sizes, algos, reps=args.reps, seed=args.seed)
    except ValueError as exc:
        return _fail(EXIT_USAGE, str(exc))
    _write(bench.rows_to_csv(rows), args.out)
    if not all(r.agreement for r in rows):
        return _fail(EXIT_DISAGREE, "solvers disagree on k_min")
    return EXIT_OK


def cmd_render(args) -> int:
    points = _load(args.input)
    sol = None
    if args.solution:
        try:
            sol, _, _ = load_solution(Path(args.solution).read_text())
        except (OSError, ValueError, KeyError, TypeError) as exc:
            return _fail(EXIT_USAGE, f"{args.solution}: unreadable solution ({exc})")
    draw = render.render_primal if args.view == "primal" else render.render_dual
    _write(draw(points, sol), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="disjoint-hulls", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="minimum removals for disjoint hulls")
    p.add_argument("input")
    p.add_argument("--algo", choices=sorted(SOLVERS), default="dual")
    p.add_argument("--mode", choices=["remove", "flip"], default="remove")
    p.add_argument("--certify", action="store_true", help=f"verify the result (optimality too when n <= {DEFAULT_LIMIT})")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a solution file against an instance")
    p.add_argument("input")
    p.add_argument("solution")
    p.add_argument("--certify-optimal", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument("--preset", choices=["random", "sensor"], default="random")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--k", type=int, default=0, help="faulty sensors (sensor preset)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--sidecar", help="JSON metadata path (sensor preset)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the solvers on random instances")
    p.add_argument("--algos", default="naive,dual")
    p.add_argument("--sizes", default="100,200,400")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("render", help="SVG picture of an instance")
    p.add_argument("input")
    p.add_argument("--view", choices=["primal", "dual"], default="primal")
    p.add_argument("--solution")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Abort as exc:
        return _fail(exc.code, str(exc))


if __name__ == "__main__":
    sys.exit(main())
