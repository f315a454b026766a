"""Command-line surface: compute, clique, compress, verify, generate, sweep.

Exit codes: 0 for success (and passing verdicts), 2 when a verification ran
fine but the check failed, 1 for usage or input errors. All numeric output
uses 12-digit fixed precision. ``LAGRANGIAN_LAB_SEED`` overrides the default
seed when no --seed flag is given.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .cliques import max_complete_subgraph
from .compression import is_left_compressed, left_compress_fixpoint
from .generators import FAMILIES, GenerationError, gen_planted
from .hypergraph import Hypergraph, HypergraphError, dump, load, to_json
from .objective import Coefficients, MissingCoefficientError
from .optimizer import GridTooLargeError, SolverConfig, grid_oracle, maximize, polish
from .theorems import TheoremId, theorem_ids, verify

_SWEEP_COLUMNS = [
    "family",
    "seed",
    "theorem",
    "t",
    "r",
    "m",
    "hypotheses_ok",
    "closed_form",
    "numerical",
    "uniform_on_clique",
    "kkt_residual",
    "pass",
    "wall_ms",
]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors by default; this surface reserves 2
    for failed verdicts, so usage problems become exit 1."""

    def error(self, message):
        raise _UsageError(message)


def _fmt(value: float | None) -> str:
    if value is None:
        return ""
    return f"{value:.12f}"


def _default_seed(args_seed: int | None) -> int:
    if args_seed is not None:
        return args_seed
    env = os.environ.get("LAGRANGIAN_LAB_SEED")
    return int(env) if env else 0


def _solver_config(args) -> SolverConfig:
    kwargs = {}
    if getattr(args, "starts", None) is not None:
        kwargs["starts"] = args.starts
    if getattr(args, "grid_d", None) is not None:
        kwargs["grid_resolution"] = args.grid_d
    if getattr(args, "max_iters", None) is not None:
        kwargs["max_iters"] = args.max_iters
    kwargs["seed"] = _default_seed(getattr(args, "seed", None))
    return SolverConfig(**kwargs)


def _load_params(text: str | None) -> dict:
    if not text:
        return {}
    path = Path(text)
    if path.exists():
        text = path.read_text()
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise _UsageError("--params must be a JSON object")
    return doc


def _coefficients_for(args, h: Hypergraph) -> tuple[Coefficients, int]:
    """Objective selection: returns (coefficients, value scale)."""
    objective = getattr(args, "objective", "lambda")
    if objective == "lambda":
        return Coefficients.ones(h.edge_types), 1
    if objective == "lambda-prime":
        return (
            Coefficients.lambda_prime_weights(h.edge_types),
            math.factorial(min(h.edge_types)),
        )
    if not args.coeffs:
        raise _UsageError("--objective weighted requires --coeffs")
    return Coefficients.from_json(Path(args.coeffs).read_text()), 1


def _cmd_compute(args) -> int:
    h = load(args.input)
    if not h.edge_types:
        value, result = 0.0, None
    else:
        coeffs, scale = _coefficients_for(args, h)
        cfg = _solver_config(args)
        result = maximize(h, coeffs, cfg)
        value = scale * result.value
        if args.grid:
            gval, gx = grid_oracle(h, coeffs, cfg.grid_resolution)
            polished = polish(h, coeffs, gx, cfg, method="grid")
            if scale * polished.value > value:
                value, result = scale * polished.value, polished
    if args.json:
        payload = {"value": value}
        if result is not None:
            payload.update(
                {
                    "x": [float(v) for v in result.x],
                    "support": list(result.support),
                    "kkt_residual": result.kkt_residual,
                    "method": result.method,
                    "iterations": result.iterations,
                    "converged": result.converged,
                    "sort_permutation": list(result.sort_permutation),
                }
            )
        print(json.dumps(payload))
    else:
        print(_fmt(value))
    return 0


def _cmd_clique(args) -> int:
    h = load(args.input)
    types = [int(tok) for tok in args.types.split(",")] if args.types else list(h.edge_types)
    if not types:
        raise _UsageError("hypergraph has no edges; pass --types explicitly")
    res = max_complete_subgraph(h, types)
    print(
        json.dumps(
            {
                "order": res.order,
                "vertices": list(res.vertices),
                "is_unique_max": res.is_unique_max,
            }
        )
    )
    return 0


def _cmd_compress(args) -> int:
    h = load(args.input)
    if args.check:
        flag = is_left_compressed(h)
        print(json.dumps({"left_compressed": flag}) if args.json else str(flag).lower())
        return 0
    compressed = left_compress_fixpoint(h)
    text = to_json(compressed)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return 0


def _cmd_verify(args) -> int:
    h = load(args.input)
    params = _load_params(args.params)
    cfg = _solver_config(args)
    verdict = verify(args.theorem, h, params, cfg, tol=args.tol)
    if args.json:
        print(json.dumps(verdict.to_dict()))
    else:
        print(f"theorem {verdict.theorem.value}")
        print(f"hypotheses_ok {str(verdict.hypotheses_ok).lower()}")
        for cond in verdict.conditions:
            mark = "ok" if cond.ok else "FAIL"
            print(f"  [{mark}] {cond.name}: {cond.detail}")
        print(f"closed_form {_fmt(verdict.closed_form)}")
        print(f"numerical {_fmt(verdict.numerical)}")
        print(f"uniform_on_clique {_fmt(verdict.uniform_on_clique)}")
        if verdict.kkt_residual is not None:
            print(f"kkt_residual {_fmt(verdict.kkt_residual)}")
        if verdict.margin is not None:
            print(f"margin {_fmt(verdict.margin)}")
        for note in verdict.notes:
            print(f"note: {note}")
        print(f"pass {str(verdict.passed).lower()}")
    return 0 if verdict.passed else 2


def _cmd_generate(args) -> int:
    params = _load_params(args.params)
    seed = _default_seed(args.seed)
    h = gen_planted(args.family, params, seed)
    if args.output:
        dump(h, args.output)
    else:
        print(to_json(h))
    return 0


def _sweep_task(task: dict) -> dict:
    started = time.perf_counter()
    h = gen_planted(task["family"], task["params"], task["seed"])
    verdict = verify(
        task["theorem"],
        h,
        task["params"],
        SolverConfig(starts=task["starts"], seed=task["seed"]),
        tol=task["tol"],
    )
    wall_ms = (time.perf_counter() - started) * 1000.0
    return {
        "family": task["family"],
        "seed": task["seed"],
        "theorem": verdict.theorem.value,
        "t": verdict.t if verdict.t is not None else "",
        "r": verdict.r if verdict.r is not None else "",
        "m": verdict.m if verdict.m is not None else "",
        "hypotheses_ok": verdict.hypotheses_ok,
        "closed_form": _fmt(verdict.closed_form),
        "numerical": _fmt(verdict.numerical),
        "uniform_on_clique": _fmt(verdict.uniform_on_clique),
        "kkt_residual": "" if verdict.kkt_residual is None else f"{verdict.kkt_residual:.3e}",
        "pass": verdict.passed,
        "wall_ms": f"{wall_ms:.1f}",
    }


def _parse_seed_range(spec: str) -> list[int]:
    if ".." in spec:
        a, b = spec.split("..", 1)
        return list(range(int(a), int(b) + 1))
    return [int(tok) for tok in spec.split(",")]


def _cmd_sweep(args) -> int:
    params = _load_params(args.params)
    seeds = _parse_seed_range(args.seeds)
    theorems = [tok.strip() for tok in args.theorem.split(",")]
    for name in theorems:
        TheoremId(name)  # validate up front
    tasks = [
        {
            "family": args.family,
            "params": params,
            "seed": seed,
            "theorem": name,
            "starts": args.starts if args.starts is not None else 16,
            "tol": args.tol,
        }
        for seed in seeds
        for name in theorems
    ]
    jobs = args.jobs or os.cpu_count() or 1
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_task, tasks))
    else:
        rows = [_sweep_task(t) for t in tasks]

    out = Path(args.out) if args.out else None
    sink = out.open("w", newline="") if out else sys.stdout
    try:
        writer = csv.DictWriter(sink, fieldnames=_SWEEP_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if out:
            sink.close()
    failed = sum(1 for row in rows if not row["pass"])
    if failed:
        print(f"{failed}/{len(rows)} sweep rows failed", file=sys.stderr)
        return 2
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="lagrangian", description=__doc__)
    parser.add_argument("--version", action="version", version=f"lagrangian-lab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_solver_flags(p):
        p.add_argument("--starts", type=int, default=None, help="random multistart count")
        p.add_argument("--max-iters", dest="max_iters", type=int, default=None)
        p.add_argument("--grid-d", dest="grid_d", type=int, default=None, help="grid resolution")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--tol", type=float, default=1e-6)

    p = sub.add_parser("compute", help="maximize an objective over the simplex")
    p.add_argument("input", help="hypergraph file (JSON or text)")
    p.add_argument(
        "--objective",
        choices=["lambda", "lambda-prime", "weighted"],
        default="lambda",
    )
    p.add_argument("--coeffs", help="coefficients JSON file for --objective weighted")
    p.add_argument("--grid", action="store_true", help="also run the grid oracle and keep the best")
    p.add_argument("--json", action="store_true")
    add_solver_flags(p)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("clique", help="maximum complete T-subgraph")
    p.add_argument("input")
    p.add_argument("--types", help="comma-separated cardinalities, e.g. 2,3")
    p.set_defaults(func=_cmd_clique)

    p = sub.add_parser("compress", help="left-compression predicate or fixpoint")
    p.add_argument("input")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--check", action="store_true", help="test whether already left-compressed")
    group.add_argument("--fixpoint", action="store_true", help="compress to the fixed point")
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_compress)

    p = sub.add_parser("verify", help="check a registered closed form on an instance")
    p.add_argument("--theorem", required=True, choices=theorem_ids())
    p.add_argument("--input", required=True)
    p.add_argument("--params", help="JSON object (inline or a file path)")
    p.add_argument("--json", action="store_true")
    add_solver_flags(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("generate", help="build a planted instance family member")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--params", help="JSON object (inline or a file path)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("sweep", help="generate-and-verify over a seed range, CSV out")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--theorem", required=True, help="theorem id, or comma-separated list")
    p.add_argument("--seeds", required=True, help="range a..b or comma list")
    p.add_argument("--params", help="JSON object (inline or a file path)")
    p.add_argument("--out", help="CSV path (stdout when omitted)")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: cores)")
    p.add_argument("--starts", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=_cmd_sweep)

    return parser


def run(argv: list[str]) -> int:
    """Entry point used by tests; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (
        HypergraphError,
        MissingCoefficientError,
        GenerationError,
        GridTooLargeError,
        FileNotFoundError,
        json.JSONDecodeError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
