"""Command-line benchmark harness (`splitwave <subcommand>`).

Subcommands: evolve, sweep-dt, sweep-n, stationary, reference,
list-schemes.  Everything is driven by a JSON config file (see README);
--scheme and --dt override the config, --out redirects outputs,
--no-cache forces recomputation of cached references/ground states.
Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from . import harness as hn
from .errors import (
    BlowUpError,
    ConfigError,
    MaxStepsExceededError,
    NoConvergenceError,
    StepUnderflowError,
)
from .schemes import SCHEME_NAMES
from .spectral import Field
from .stationary import GroundStateProblem, ground_state_residual, solve_ground_state

_NUMERICAL_ERRORS = (NoConvergenceError, MaxStepsExceededError, StepUnderflowError,
                     BlowUpError)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitwave",
        description="Time-splitting pseudo-spectral PDE benchmark harness",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_config=True):
        if needs_config:
            p.add_argument("--config", required=True, help="JSON experiment config")
        p.add_argument("--out", default=None, help="output directory (overrides config)")
        p.add_argument("--no-cache", action="store_true",
                       help="recompute cached references and ground states")
        p.add_argument("--scheme", default=None, choices=SCHEME_NAMES,
                       help="run only this scheme (overrides config)")
        p.add_argument("--dt", type=float, default=None,
                       help="time step override")
        p.add_argument("--workers", type=int, default=1,
                       help="parallel workers for sweep points")

    add_common(sub.add_parser("evolve", help="run one evolution, write time series"))
    add_common(sub.add_parser("sweep-dt", help="error/cost table over time steps"))
    add_common(sub.add_parser("sweep-n", help="error table over basis sizes"))
    add_common(sub.add_parser("stationary", help="compute a ground state"))
    add_common(sub.add_parser("reference", help="compute and cache the reference solution"))
    sub.add_parser("list-schemes", help="print the built-in scheme names")
    return parser


def _load(args) -> hn.ExperimentConfig:
    config = hn.load_config(args.config)
    if args.scheme is not None:
        config.schemes = [args.scheme]
    if args.dt is not None:
        config.dt = args.dt
        config.dt_list = None
        config.dt_lists = {}
    if args.out is not None:
        config.out_dir = Path(args.out)
    return config


def _snapshot_meta(config: hn.ExperimentConfig, t: float, extra: dict | None = None) -> dict:
    meta = {
        "t": t,
        "basis": hn._basis_payload(config.basis),
        "model": hn._model_payload(config.model),
        "version": __version__,
    }
    if extra:
        meta.update(extra)
    return meta


def _cmd_evolve(args) -> int:
    config = _load(args)
    if len(config.schemes) != 1:
        raise ConfigError("schemes: evolve runs exactly one scheme (use --scheme)")
    dts = config.scheme_dts(config.schemes[0])
    if len(dts) != 1:
        raise ConfigError("dt: evolve needs a single dt (use --dt)")
    dt = dts[0]
    u0 = hn.initial_condition(config, no_cache=args.no_cache)
    exact = None
    reference = None
    if config.reference.get("type") == "exact":
        exact = hn.exact_solution(config)
    elif config.reference.get("type") in ("rk853", "file"):
        reference = hn.compute_reference(config, no_cache=args.no_cache)
    final, record, row = hn.run_single(
        config, config.schemes[0], dt, u0, reference, exact,
        snapshot_stride=config.snapshot_stride)

    out = config.out_dir
    out.mkdir(parents=True, exist_ok=True)
    series_rows = []
    mass0 = record.metrics["mass"][0]
    ham0 = record.metrics["hamiltonian"][0]
    err_series = record.metrics.get("err_inf")
    for i, t in enumerate(record.times):
        series_rows.append({
            "t": t,
            "err_inf": err_series[i] if err_series else float("nan"),
            "eps_mass": abs(record.metrics["mass"][i] / mass0 - 1.0) if mass0 else float("nan"),
            "eps_ham": abs(record.metrics["hamiltonian"][i] / ham0 - 1.0) if ham0 else float("nan"),
            "evals_a": record.evals_a_series[i],
            "evals_b": record.evals_b_series[i],
        })
    metric_map = {"err_inf": "err_inf", "mass": "eps_mass", "hamiltonian": "eps_ham"}
    selected = tuple(metric_map[m] for m in (config.metrics or metric_map))
    hn.write_csv(out / "run.csv", series_rows,
                 ("t",) + selected + ("evals_a", "evals_b"))
    meta = {
        "config": config.raw,
        "row": row,
        "status": record.status,
        "blowup_step": record.blowup_step,
        "evals_a": record.counter.evals_a,
        "evals_b": record.counter.evals_b,
        "wall_time": record.wall_time,
        "version": __version__,
    }
    (out / "meta.json").write_text(json.dumps(meta, sort_keys=True, indent=2) + "\n")
    for i, (t, values) in enumerate(record.snapshots):
        hn.save_snapshot(out / "snapshots" / f"snap_{i:06d}.csv",
                         Field(values, config.basis), _snapshot_meta(config, t))
    print(f"{row['scheme']} dt={dt!r} status={row['status']} err_inf={row['err_inf']!r}")
    return 0 if record.completed else 3


def _cmd_sweep_dt(args) -> int:
    config = _load(args)
    rows = hn.sweep_dt(config, no_cache=args.no_cache, workers=args.workers)
    out = config.out_dir
    hn.write_csv(out / "sweep_dt.csv", rows, hn.SWEEP_CSV_COLUMNS)
    (out / "sweep_dt.json").write_text(
        json.dumps({"config": config.raw, "version": __version__}, sort_keys=True,
                   indent=2) + "\n")
    print(f"wrote {out / 'sweep_dt.csv'} ({len(rows)} rows)")
    return 0


def _cmd_sweep_n(args) -> int:
    config = _load(args)
    rows = hn.sweep_basis(config, no_cache=args.no_cache)
    out = config.out_dir
    hn.write_csv(out / "sweep_n.csv", rows, ("n",) + hn.SWEEP_CSV_COLUMNS)
    (out / "sweep_n.json").write_text(
        json.dumps({"config": config.raw, "version": __version__}, sort_keys=True,
                   indent=2) + "\n")
    print(f"wrote {out / 'sweep_n.csv'} ({len(rows)} rows)")
    return 0


def _cmd_stationary(args) -> int:
    config = _load(args)
    init = config.initial
    if init.get("type") != "stationary":
        raise ConfigError("initial.type: stationary subcommand needs a stationary initial condition")
    alpha, omega = float(init["alpha"]), float(init["omega"])
    tolerance = float(init.get("tolerance", 1e-12))
    problem = GroundStateProblem(alpha=alpha, omega=omega, basis=config.basis,
                                 tolerance=tolerance)
    fld = solve_ground_state(problem)
    residual = float(np.max(np.abs(ground_state_residual(fld.values.real, problem))))
    out = config.out_dir
    hn.save_snapshot(out / "psi.csv", fld, _snapshot_meta(config, 0.0, {
        "alpha": alpha, "omega": omega, "residual": residual, "tolerance": tolerance}))
    print(f"ground state alpha={alpha} omega={omega} residual={residual:.3e}")
    return 0


def _cmd_reference(args) -> int:
    config = _load(args)
    fld = hn.compute_reference(config, no_cache=args.no_cache)
    out = config.out_dir
    hn.save_snapshot(out / "reference.csv", fld,
                     _snapshot_meta(config, config.t_final, {"reference": config.reference}))
    print(f"wrote {out / 'reference.csv'} (t = {config.t_final!r})")
    return 0


def run_cli(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "list-schemes":
        for name in SCHEME_NAMES:
            print(name)
        return 0
    handlers = {
        "evolve": _cmd_evolve,
        "sweep-dt": _cmd_sweep_dt,
        "sweep-n": _cmd_sweep_n,
        "stationary": _cmd_stationary,
        "reference": _cmd_reference,
    }
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except _NUMERICAL_ERRORS as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
