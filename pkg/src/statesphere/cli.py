"""Batch front end.

Reads a problem file (JSON; complex numbers as [re, im] pairs), runs the
requested analysis and emits deterministic JSON or CSV.  Exit codes:
0 success, 1 I/O or parse failure, 2 validation failure, 3 dimension
mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import serialize
from .canonical import Grid, momentum_op, position_op
from .errors import DimensionMismatch, GeometryError, InvalidParameter
from .evolution import trace_flow
from .hilbert import Observable, State, validate_state
from .optimize import minimize_multistart
from .projective import triangle_report
from .realify import metric_g, parallelogram_area, symplectic
from .uncertainty import REPORT_FIELDS, relations_report, tangent_field


@dataclass
class ProblemFile:
    dim: int
    state: State
    observables: dict
    grid: Grid | None
    options: dict


def _complex_vector(pairs) -> np.ndarray:
    return np.array([complex(re, im) for re, im in pairs])


def _complex_matrix(rows) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in rows])


def load_problem(path: str, tol: float = 1e-10) -> ProblemFile:
    """Parse and validate a problem file; grid problems gain 'x' and 'p'."""
    with open(path) as fh:
        raw = json.load(fh)
    dim = int(raw["dim"])
    state = validate_state(_complex_vector(raw["state"]), tol=max(tol, 1e-10))
    if state.dim != dim:
        raise DimensionMismatch(f"state has dim {state.dim}, file says {dim}")
    observables = {}
    for name, rows in raw.get("observables", {}).items():
        obs = Observable(_complex_matrix(rows))
        if obs.dim != dim:
            raise DimensionMismatch(f"observable {name!r} has dim {obs.dim}, file says {dim}")
        observables[name] = obs
    grid = None
    if raw.get("grid") is not None:
        spec = raw["grid"]
        grid = Grid(int(spec["n"]), float(spec["length"]), float(spec.get("hbar", 1.0)))
        if grid.n != dim:
            raise DimensionMismatch(f"grid has n={grid.n}, file says dim {dim}")
        observables.setdefault("x", position_op(grid))
        observables.setdefault("p", momentum_op(grid))
    return ProblemFile(dim, state, observables, grid, raw.get("options", {}))


def _resolve(problem: ProblemFile, name: str) -> Observable:
    if name not in problem.observables:
        raise GeometryError(f"unknown observable {name!r}")
    return problem.observables[name]


def cmd_report(args) -> int:
    problem = load_problem(args.input, args.tol)
    a = _resolve(problem, args.pair[0])
    b = _resolve(problem, args.pair[1])
    report = relations_report(a, b, problem.state).to_dict()
    if args.format == "csv":
        print(",".join(REPORT_FIELDS))
        print(serialize.csv_row(report.values()))
    else:
        print(serialize.dumps(report))
    return 0


def cmd_evolve(args) -> int:
    problem = load_problem(args.input, args.tol)
    gen = _resolve(problem, args.generator)
    trace = trace_flow(gen, problem.state, args.t_max, args.steps)
    if args.out is None:
        trace.write_csv(sys.stdout)
    else:
        with open(args.out, "w", newline="") as fh:
            trace.write_csv(fh)
    return 0


def cmd_distances(args) -> int:
    problem = load_problem(args.input, args.tol)
    a = _resolve(problem, args.pair[0])
    b = _resolve(problem, args.pair[1])
    report = triangle_report(a, b, problem.state, args.metric_scale).to_dict()
    if args.format == "csv":
        print(",".join(report))
        print(serialize.csv_row(report.values()))
    else:
        print(serialize.dumps(report))
    return 0


def cmd_minimize(args) -> int:
    if args.restarts < 1:
        raise InvalidParameter(f"restarts must be >= 1, got {args.restarts}")
    if args.format == "csv":
        raise InvalidParameter("minimize output is nested; only json is supported")
    problem = load_problem(args.input, args.tol)
    a = _resolve(problem, args.pair[0])
    b = _resolve(problem, args.pair[1])
    result = minimize_multistart(
        a,
        b,
        phi0=problem.state,
        restarts=args.restarts,
        seed=args.seed,
        max_iter=args.max_iter,
    )
    print(serialize.dumps(result.to_dict()))
    return 0


def _random_hermitian(rng, n) -> Observable:
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    h = 0.5 * (m + m.conj().T)
    return Observable(h / np.max(np.abs(h)))


def cmd_selftest(args) -> int:
    if args.input is not None:
        load_problem(args.input, args.tol)
        print(f"selftest: problem file {args.input!r} validates")
        return 0
    rng = np.random.default_rng(args.seed)
    dims = (2, 3, 4, 8, 16)
    checks = 0
    for i in range(args.n_random):
        n = dims[i % len(dims)]
        a = _random_hermitian(rng, n)
        b = _random_hermitian(rng, n)
        phi = validate_state(
            rng.standard_normal(n) + 1j * rng.standard_normal(n), tol=np.inf
        )
        rep = relations_report(a, b, phi)
        x = tangent_field(a, phi, True).vec
        y = tangent_field(b, phi, True).vec
        ok = (
            abs(rep.identity_residual) <= 1e-10
            and rep.robertson_slack >= -1e-10
            and rep.area_bound_slack >= -1e-10
            and abs(rep.anticommutator_half - abs(metric_g(x, y))) <= 1e-10
            and abs(rep.commutator_half - abs(symplectic(x, y))) <= 1e-10
            and abs(rep.area - parallelogram_area(x, y)) <= 1e-10
        )
        if not ok:
            raise GeometryError(f"selftest invariant violated at instance {i} (n={n})")
        checks += 6
    print(
        f"selftest: verified {checks} identities over {args.n_random} "
        f"random instances (seed={args.seed})"
    )
    return 0


def _add_common(parser) -> None:
    parser.add_argument("--input", help="problem file (JSON)")
    parser.add_argument("--tol", type=float, default=1e-10)
    parser.add_argument("--metric-scale", type=float, default=1.0)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="statesphere",
        description="Uncertainty geometry on the sphere of states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="uncertainty relations for an observable pair")
    _add_common(p)
    p.add_argument("--pair", nargs=2, required=True, metavar=("A", "B"))
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("evolve", help="trace the unitary flow of a generator")
    _add_common(p)
    p.add_argument("--generator", required=True)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("distances", help="triangle relation between eigenstate sets")
    _add_common(p)
    p.add_argument("--pair", nargs=2, required=True, metavar=("A", "B"))
    p.set_defaults(func=cmd_distances)

    p = sub.add_parser("minimize", help="search for minimal-uncertainty states")
    _add_common(p)
    p.add_argument("--pair", nargs=2, required=True, metavar=("A", "B"))
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--max-iter", type=int, default=500)
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("selftest", help="run the random invariant suite")
    _add_common(p)
    p.add_argument("--n-random", type=int, default=1000)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DimensionMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GeometryError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
