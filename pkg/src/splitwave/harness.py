"""Experiment configuration, sweeps, reference solutions and persistence.

Configurations are plain JSON dicts (see README for the schema); the
harness builds the basis/model/scheme objects, runs Δt and basis-size
sweeps, computes cached high-accuracy reference solutions with the
adaptive 8(5,3) integrator, and writes CSV/JSON outputs whose bytes are
reproducible for identical configurations.

Cost convention: the cost of a run is the number of evaluations of the
most expensive propagator; for composition schemes that propagator is
taken as the least invoked one (a lower bound), for affine schemes both
counts coincide.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Mapping, Sequence

import numpy as np

from . import models as mdl
from .errors import ConfigError
from .ode import RKConfig, rk853_integrate
from .propagators import LinearFlow
from .schemes import SCHEME_NAMES, RunRecord, evolve, get_scheme
from .spectral import Field, FourierBasis, HermiteBasis, two_thirds_mask
from .stationary import GroundStateProblem, solve_ground_state

REFERENCE_TOLERANCE = 1e-13
DEFAULT_SWEEP_RANGE = (1e-3, 0.5)
DEFAULT_SWEEP_POINTS = 16
SWEEP_CSV_COLUMNS = ("scheme", "dt", "err_inf", "eps_mass", "eps_ham", "cost", "status")


# --- configuration ----------------------------------------------------------


@dataclass
class ExperimentConfig:
    raw: dict
    model: mdl.ModelSpec
    basis: FourierBasis | HermiteBasis
    schemes: list[str]
    dt: float | None
    dt_list: list[float] | None
    dt_lists: dict[str, list[float]]
    t_final: float
    initial: dict
    reference: dict
    observer_stride: int
    snapshot_stride: int | None
    out_dir: Path
    n_list: list[int] | None
    dealias: bool = False
    metrics: list[str] | None = None  # run.csv column selection; None = all

    def scheme_dts(self, scheme: str) -> list[float]:
        """Δt grid for one scheme: per-scheme override, shared list, or default."""
        if scheme in self.dt_lists:
            return self.dt_lists[scheme]
        if self.dt_list is not None:
            return self.dt_list
        if self.dt is not None:
            return [self.dt]
        return default_dt_sweep(self.t_final)


def default_dt_sweep(t_final: float, points: int = DEFAULT_SWEEP_POINTS,
                     span: tuple[float, float] = DEFAULT_SWEEP_RANGE) -> list[float]:
    """Log-spaced step sizes snapped to exact divisors of t_final, decreasing."""
    lo, hi = span
    raw = np.geomspace(hi, lo, points)
    dts = []
    for r in raw:
        m = max(1, round(t_final / r))
        dt = t_final / m
        if not dts or dt < dts[-1] * (1 - 1e-12):
            dts.append(dt)
    return dts


def _require(cond: bool, field: str, message: str) -> None:
    if not cond:
        raise ConfigError(f"{field}: {message}")


def _build_model(raw: dict) -> mdl.ModelSpec:
    _require(isinstance(raw, dict), "model", "must be an object")
    kind = raw.get("kind")
    _require(kind in mdl.MODEL_KINDS, "model.kind",
             f"must be one of {', '.join(mdl.MODEL_KINDS)} (got {kind!r})")
    kwargs = {}
    for name in ("alpha", "beta", "delta", "gamma", "nu", "mu"):
        if name in raw:
            kwargs[name] = float(raw[name])
    if "sign" in raw:
        kwargs["sign"] = int(raw["sign"])
    epsilon = raw.get("epsilon", 0.0)
    if epsilon is None:  # matched arbitrary-amplitude gain for cgle3
        _require(kind == "cgle3", "model.epsilon", "null is only meaningful for cgle3")
        epsilon = mdl.matched_epsilon(kwargs.get("beta", 0.0), kwargs.get("gamma", -1.0))
    kwargs["epsilon"] = float(epsilon)
    if kind in ("nlse3", "fnlse3"):
        kwargs.setdefault("sign", -1)
        kwargs["gamma"] = float(kwargs["sign"])
        kwargs["epsilon"] = 0.0
    try:
        return mdl.ModelSpec(kind, **kwargs)
    except ValueError as exc:
        raise ConfigError(f"model: {exc}") from exc


def _build_basis(raw: dict):
    _require(isinstance(raw, dict), "basis", "must be an object")
    kind = raw.get("type")
    if kind == "fourier":
        _require("n" in raw and "interval" in raw, "basis", "fourier basis needs n and interval")
        interval = raw["interval"]
        _require(isinstance(interval, (list, tuple)) and len(interval) == 2,
                 "basis.interval", "must be [x_min, x_max]")
        try:
            return FourierBasis(int(raw["n"]), (float(interval[0]), float(interval[1])))
        except ValueError as exc:
            raise ConfigError(f"basis: {exc}") from exc
    if kind == "hermite":
        _require("n" in raw, "basis", "hermite basis needs n")
        try:
            return HermiteBasis(int(raw["n"]), float(raw.get("scaling", 1.0)))
        except ValueError as exc:
            raise ConfigError(f"basis: {exc}") from exc
    raise ConfigError(f"basis.type: must be 'fourier' or 'hermite' (got {kind!r})")


def parse_config(raw: dict, base_dir: Path | str = ".") -> ExperimentConfig:
    """Validate a configuration dict, reporting offending fields."""
    _require(isinstance(raw, dict), "config", "must be a JSON object")
    base_dir = Path(base_dir)
    model = _build_model(raw.get("model", {}))
    basis = _build_basis(raw.get("basis", {}))

    schemes = raw.get("schemes")
    if schemes is None:
        schemes = [raw["scheme"]] if "scheme" in raw else []
    _require(isinstance(schemes, list), "schemes", "must be a list of scheme names")
    for name in schemes:
        _require(name in SCHEME_NAMES, "schemes",
                 f"unknown scheme {name!r}; choose from {', '.join(SCHEME_NAMES)}")

    t_final = float(raw.get("t_final", 0.0))
    _require(t_final >= 0, "t_final", "must be nonnegative")

    dt = float(raw["dt"]) if "dt" in raw else None
    dt_list = [float(x) for x in raw["dt_list"]] if "dt_list" in raw else None
    if dt_list is not None:
        _require(all(a > b for a, b in zip(dt_list, dt_list[1:])),
                 "dt_list", "must be strictly decreasing")
        _require(all(x > 0 for x in dt_list), "dt_list", "steps must be positive")
    dt_lists = {}
    for name, lst in (raw.get("dt_lists") or {}).items():
        _require(name in SCHEME_NAMES, "dt_lists", f"unknown scheme {name!r}")
        lst = [float(x) for x in lst]
        _require(all(a > b for a, b in zip(lst, lst[1:])),
                 f"dt_lists.{name}", "must be strictly decreasing")
        dt_lists[name] = lst

    n_list = [int(x) for x in raw["n_list"]] if "n_list" in raw else None
    if n_list is not None:
        _require(all(a < b for a, b in zip(n_list, n_list[1:])),
                 "n_list", "must be strictly increasing")

    initial = raw.get("initial")
    _require(isinstance(initial, dict) and "type" in initial,
             "initial", "must be an object with a 'type'")
    _require(initial["type"] in ("nlse-soliton", "cgle3-soliton", "gaussian",
                                 "stationary", "file"),
             "initial.type", f"unsupported kind {initial.get('type')!r}")

    reference = raw.get("reference", {"type": "exact"})
    _require(isinstance(reference, dict) and reference.get("type") in ("exact", "rk853", "file"),
             "reference.type", "must be 'exact', 'rk853' or 'file'")

    observers = raw.get("observers", {})
    stride = int(observers.get("stride", 1))
    _require(stride >= 1, "observers.stride", "must be a positive integer")
    snapshot_stride = observers.get("snapshot_stride")
    if snapshot_stride is not None:
        snapshot_stride = int(snapshot_stride)
        _require(snapshot_stride >= 1, "observers.snapshot_stride", "must be positive")
    metrics = observers.get("metrics")
    if metrics is not None:
        _require(isinstance(metrics, list) and
                 all(m in ("err_inf", "mass", "hamiltonian") for m in metrics),
                 "observers.metrics",
                 "entries must be among err_inf, mass, hamiltonian")

    dealias = bool(raw.get("basis", {}).get("dealias", False))
    _require(not dealias or isinstance(basis, FourierBasis),
             "basis.dealias", "the 2/3-rule filter needs a fourier basis")

    out_dir = base_dir / raw.get("out", "runs")
    return ExperimentConfig(
        raw=raw, model=model, basis=basis, schemes=schemes, dt=dt,
        dt_list=dt_list, dt_lists=dt_lists, t_final=t_final, initial=initial,
        reference=reference, observer_stride=stride, snapshot_stride=snapshot_stride,
        out_dir=out_dir, n_list=n_list, dealias=dealias, metrics=metrics,
    )


def load_config(path: Path | str) -> ExperimentConfig:
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config: {path} is not valid JSON ({exc})") from exc
    return parse_config(raw, base_dir=path.parent)


# --- snapshots ---------------------------------------------------------------


def save_snapshot(path: Path | str, fld: Field, meta: dict) -> None:
    """Write a field as CSV (x, re, im) with a JSON metadata sidecar."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = ["x,re,im"]
    for x, v in zip(fld.basis.nodes, fld.values):
        lines.append(f"{float(x)!r},{float(v.real)!r},{float(v.imag)!r}")
    path.write_text("\n".join(lines) + "\n")
    path.with_suffix(".json").write_text(json.dumps(meta, sort_keys=True, indent=2) + "\n")


def load_snapshot(path: Path | str, basis) -> Field:
    path = Path(path)
    rows = path.read_text().strip().splitlines()[1:]
    data = np.array([[float(c) for c in row.split(",")] for row in rows])
    if data.shape[0] != basis.n:
        raise ConfigError(f"initial.path: snapshot has {data.shape[0]} rows, basis expects {basis.n}")
    return Field(data[:, 1] + 1j * data[:, 2], basis)


# --- initial conditions and references --------------------------------------


def _config_hash(payload: dict) -> str:
    canon = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()[:16]


def _basis_payload(basis) -> dict:
    if isinstance(basis, FourierBasis):
        return {"type": "fourier", "n": basis.n, "interval": list(basis.interval)}
    return {"type": "hermite", "n": basis.n, "scaling": basis.scaling}


def _model_payload(model: mdl.ModelSpec) -> dict:
    return {k: getattr(model, k) for k in
            ("kind", "alpha", "beta", "delta", "gamma", "epsilon", "nu", "mu", "sign")}


def ground_state_field(alpha: float, omega: float, basis: FourierBasis,
                       tolerance: float = 1e-12, cache_dir: Path | None = None,
                       no_cache: bool = False) -> Field:
    """Ground-state initial condition, disk-cached by content hash."""
    if not isinstance(basis, FourierBasis):
        raise ConfigError("initial: stationary states require a fourier basis")
    key = _config_hash({"alpha": alpha, "omega": omega, "tol": tolerance,
                        "basis": _basis_payload(basis)})
    cache_file = None
    if cache_dir is not None:
        cache_file = Path(cache_dir) / f"gs_{key}.npz"
        if cache_file.exists() and not no_cache:
            return Field(np.load(cache_file)["values"], basis)
    problem = GroundStateProblem(alpha=alpha, omega=omega, basis=basis, tolerance=tolerance)
    fld = solve_ground_state(problem)
    if cache_file is not None:
        cache_file.parent.mkdir(parents=True, exist_ok=True)
        np.savez(cache_file, values=fld.values)
    return fld


def initial_condition(config: ExperimentConfig, no_cache: bool = False) -> Field:
    basis, init = config.basis, config.initial
    kind = init["type"]
    if kind == "nlse-soliton":
        params = mdl.NLSESolitonParams(
            eta=float(init.get("eta", 1.0)), c=float(init.get("c", 0.0)),
            x0=float(init.get("x0", 0.0)), phi0=float(init.get("phi0", 0.0)))
        return Field(mdl.nlse3_soliton(params, basis.nodes, 0.0), basis)
    if kind == "cgle3-soliton":
        params = mdl.CGLE3SolitonParams(
            beta=float(init["beta"]), G=float(init.get("G", 1.0)),
            phi0=float(init.get("phi0", 0.0)))
        return Field(mdl.cgle3_soliton(params, basis.nodes, 0.0), basis)
    if kind == "gaussian":
        amp = float(init.get("amplitude", 1.0))
        width = float(init.get("width", 1.0))
        return Field(amp * np.exp(-basis.nodes**2 / (2.0 * width**2)) + 0.0j, basis)
    if kind == "stationary":
        return ground_state_field(
            float(init["alpha"]), float(init["omega"]), basis,
            tolerance=float(init.get("tolerance", 1e-12)),
            cache_dir=config.out_dir / "cache", no_cache=no_cache)
    if kind == "file":
        return load_snapshot(Path(init["path"]), basis)
    raise ConfigError(f"initial.type: unsupported kind {kind!r}")


def exact_solution(config: ExperimentConfig) -> Callable[[float], np.ndarray]:
    """Closed-form reference u(x, t) on the grid, when the model admits one."""
    basis, init, model = config.basis, config.initial, config.model
    kind = init["type"]
    if kind == "nlse-soliton" and model.kind == "nlse3" and model.sign == -1:
        params = mdl.NLSESolitonParams(
            eta=float(init.get("eta", 1.0)), c=float(init.get("c", 0.0)),
            x0=float(init.get("x0", 0.0)), phi0=float(init.get("phi0", 0.0)))
        return lambda t: mdl.nlse3_soliton(params, basis.nodes, t)
    if kind == "cgle3-soliton" and model.kind == "cgle3":
        params = mdl.CGLE3SolitonParams(
            beta=float(init["beta"]), G=float(init.get("G", 1.0)),
            phi0=float(init.get("phi0", 0.0)))
        expected_eps = mdl.matched_epsilon(params.beta, model.gamma)
        if abs(model.epsilon - expected_eps) > 1e-12 or model.delta != 0.0:
            raise ConfigError(
                "reference: the cgle3 soliton is exact only for delta = 0 and the "
                f"matched epsilon {expected_eps!r} (model has {model.epsilon!r})")
        return lambda t: mdl.cgle3_soliton(params, basis.nodes, t)
    if kind == "stationary" and model.kind in ("nlse3", "fnlse3") and model.sign == -1:
        if float(init["alpha"]) != model.alpha:
            raise ConfigError("initial.alpha: must match model.alpha for a standing wave")
        omega = float(init["omega"])
        psi = None

        def standing_wave(t: float, _cfg=config) -> np.ndarray:
            nonlocal psi
            if psi is None:
                psi = initial_condition(_cfg).values
            return psi * np.exp(1j * omega * t)

        return standing_wave
    raise ConfigError(
        f"reference: no exact solution for initial {kind!r} with model {model.kind!r}")


def semidiscrete_rhs(model: mdl.ModelSpec, basis) -> Callable[[float, np.ndarray], np.ndarray]:
    """du/dt = -i (A u + B(u)) of the full semi-discrete system."""
    symbol = mdl.linear_symbol(model)
    b_rhs = mdl.nonlinear_rhs(model)
    if isinstance(basis, FourierBasis):
        sym_grid = symbol(basis.wavenumbers)

        def rhs(_t, u):
            return -1j * np.fft.ifft(sym_grid * np.fft.fft(u)) + b_rhs(u)
    else:
        flow = LinearFlow(symbol, basis)
        a_grid = basis.idht_matrix @ flow.a_matrix @ basis.dht_matrix

        def rhs(_t, u):
            return -1j * (a_grid @ u) + b_rhs(u)
    return rhs


def compute_reference(config: ExperimentConfig, no_cache: bool = False) -> Field:
    """High-accuracy endpoint solution of the semi-discrete system, disk-cached."""
    ref = config.reference
    if ref.get("type") == "file":
        return load_snapshot(Path(ref["path"]), config.basis)
    if ref.get("type") == "exact":
        return Field(exact_solution(config)(config.t_final), config.basis)
    u0 = initial_condition(config, no_cache=no_cache)
    key = _config_hash({
        "model": _model_payload(config.model),
        "basis": _basis_payload(config.basis),
        "initial": config.initial,
        "t_final": config.t_final,
        "tol": REFERENCE_TOLERANCE,
    })
    cache_file = config.out_dir / "cache" / f"ref_{key}.npz"
    if cache_file.exists() and not no_cache:
        return Field(np.load(cache_file)["values"], config.basis)
    rhs = semidiscrete_rhs(config.model, config.basis)
    cfg = RKConfig(abs_tol=REFERENCE_TOLERANCE, rel_tol=REFERENCE_TOLERANCE,
                   max_steps=20_000_000)
    values = rk853_integrate(rhs, u0.values, (0.0, config.t_final), cfg)
    cache_file.parent.mkdir(parents=True, exist_ok=True)
    np.savez(cache_file, values=values)
    return Field(values, config.basis)


# --- runs and sweeps ---------------------------------------------------------


def make_observers(config: ExperimentConfig,
                   exact: Callable[[float], np.ndarray] | None) -> dict:
    model = config.model
    observers: dict[str, Callable[[Field, float], float]] = {
        "mass": lambda f, t: mdl.mass(f),
        "hamiltonian": lambda f, t: mdl.hamiltonian(f, model.alpha, model.sign),
        "max_amp": lambda f, t: float(np.max(np.abs(f.values))),
    }
    if exact is not None:
        observers["err_inf"] = lambda f, t: float(np.max(np.abs(f.values - exact(t))))
    return observers


def run_single(config: ExperimentConfig, scheme_name: str, dt: float,
               u0: Field, reference: Field | None,
               exact: Callable[[float], np.ndarray] | None = None,
               snapshot_stride: int | None = None) -> tuple[Field, RunRecord, dict]:
    """Evolve one (scheme, dt) point and assemble its sweep row."""
    model = config.model
    scheme = get_scheme(scheme_name)
    flow = LinearFlow(mdl.linear_symbol(model), config.basis)
    phi_b = mdl.nonlinear_flow(model)
    if config.dealias:
        mask = two_thirds_mask(config.basis)
        inner_b = phi_b
        phi_b = lambda u, dt: np.fft.ifft(mask * np.fft.fft(inner_b(u, dt)))
    observers = make_observers(config, exact)
    final, record = evolve(scheme, flow.apply, phi_b, dt, config.t_final, u0,
                           observers=observers, stride=config.observer_stride,
                           snapshot_stride=snapshot_stride)

    if record.completed:
        if exact is not None:
            err = float(np.max(np.abs(final.values - exact(config.t_final))))
        elif reference is not None:
            err = mdl.error_inf(final, reference)
        else:
            err = float("nan")
        eps_mass = mdl.relative_invariant_error(record.metrics["mass"][-1],
                                                record.metrics["mass"][0])
        h0, h1 = record.metrics["hamiltonian"][0], record.metrics["hamiltonian"][-1]
        eps_ham = abs(h1 / h0 - 1.0) if h0 != 0.0 else float("nan")
    else:
        err = eps_mass = eps_ham = float("nan")
    row = {
        "scheme": scheme_name,
        "dt": dt,
        "err_inf": err,
        "eps_mass": eps_mass,
        "eps_ham": eps_ham,
        "cost": min(record.counter.evals_a, record.counter.evals_b),
        "status": "completed" if record.completed else f"blowup@{record.blowup_step}",
    }
    return final, record, row


def sweep_dt(config: ExperimentConfig, no_cache: bool = False,
             workers: int = 1) -> list[dict]:
    """One row per (scheme, dt): error, invariant drift, cost and status."""
    if not config.schemes:
        raise ConfigError("schemes: sweep-dt needs at least one scheme")
    points = []
    for scheme in config.schemes:
        for dt in config.scheme_dts(scheme):
            m = round(config.t_final / dt)
            _require(m >= 1 and abs(m * dt - config.t_final) <= 1e-9 * max(1.0, config.t_final),
                     "dt_list", f"dt = {dt!r} does not divide t_final = {config.t_final!r}")
            points.append((scheme, dt))
    u0 = initial_condition(config, no_cache=no_cache)
    exact = None
    reference = None
    if config.reference.get("type") == "exact":
        exact = exact_solution(config)
    else:
        reference = compute_reference(config, no_cache=no_cache)

    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        ref_values = None if reference is None else reference.values
        args = [(config.raw, scheme, dt, u0.values, ref_values) for scheme, dt in points]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_worker, args))
        return rows

    rows = []
    for scheme, dt in points:
        _, _, row = run_single(config, scheme, dt, u0, reference, exact)
        rows.append(row)
    return rows


def _sweep_worker(args) -> dict:
    raw, scheme, dt, u0_values, ref_values = args
    config = parse_config(raw)
    u0 = Field(u0_values, config.basis)
    exact = exact_solution(config) if config.reference.get("type") == "exact" else None
    reference = None if ref_values is None else Field(ref_values, config.basis)
    _, _, row = run_single(config, scheme, dt, u0, reference, exact)
    return row


def sweep_basis(config: ExperimentConfig, no_cache: bool = False) -> list[dict]:
    """Error at fixed dt as a function of the basis dimension."""
    if config.n_list is None:
        raise ConfigError("n_list: sweep-n needs a list of basis sizes")
    if len(config.schemes) != 1:
        raise ConfigError("schemes: sweep-n runs a single scheme")
    dt = config.dt if config.dt is not None else 0.025
    rows = []
    for n in config.n_list:
        raw = dict(config.raw)
        raw_basis = dict(raw["basis"])
        raw_basis["n"] = n
        raw["basis"] = raw_basis
        raw["dt"] = dt
        sub = parse_config(raw)
        sub.out_dir = config.out_dir
        u0 = initial_condition(sub, no_cache=no_cache)
        exact = None
        reference = None
        if sub.reference.get("type") == "exact":
            exact = exact_solution(sub)
        else:
            reference = compute_reference(sub, no_cache=no_cache)
        _, _, row = run_single(sub, config.schemes[0], dt, u0, reference, exact)
        row = {"n": n, **row}
        rows.append(row)
    return rows


def slope_fit(dts: Sequence[float], errs: Sequence[float],
              window: tuple[float, float] = (1e-9, 1e-2)) -> float:
    """Least-squares slope of log(err) vs log(dt) inside the error window."""
    dts = np.asarray(dts, dtype=float)
    errs = np.asarray(errs, dtype=float)
    mask = np.isfinite(errs) & (errs >= window[0]) & (errs <= window[1]) & (dts > 0)
    if mask.sum() < 3:
        raise ValueError(
            f"insufficient points: need >= 3 errors inside [{window[0]:g}, {window[1]:g}], "
            f"got {int(mask.sum())}")
    return float(np.polyfit(np.log(dts[mask]), np.log(errs[mask]), 1)[0])


# --- amplitude-series diagnostics (dissipative-soliton experiments) ----------


def settle_time(times: Sequence[float], amps: Sequence[float],
                band: float = 0.01, tail_fraction: float = 0.2) -> float:
    """Earliest time from which the series stays within +-band of its tail mean.

    Returns inf when the series never settles.
    """
    times = np.asarray(times, dtype=float)
    amps = np.asarray(amps, dtype=float)
    n_tail = max(1, int(len(amps) * tail_fraction))
    ref = float(np.mean(amps[-n_tail:]))
    inside = np.abs(amps - ref) <= band * abs(ref)
    if not inside[-1]:
        return float("inf")
    # last index that violates the band; settle right after it
    violations = np.nonzero(~inside)[0]
    if violations.size == 0:
        return float(times[0])
    last = violations[-1]
    if last + 1 >= len(times):
        return float("inf")
    return float(times[last + 1])


def count_extrema(amps: Sequence[float], min_swing: float = 0.01) -> int:
    """Number of interior local extrema with relative swing above min_swing."""
    amps = np.asarray(amps, dtype=float)
    scale = float(np.max(np.abs(amps)))
    if scale == 0:
        return 0
    count = 0
    direction = 0
    last_turn = amps[0]
    for v in amps[1:]:
        step = v - last_turn
        if abs(step) < min_swing * scale:
            continue
        new_dir = 1 if step > 0 else -1
        if direction != 0 and new_dir != direction:
            count += 1
        direction = new_dir
        last_turn = v
    return count


# --- persistence -------------------------------------------------------------


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(float(value))  # plain-float repr, shortest round-trip
    return str(value)


def write_csv(path: Path | str, rows: Sequence[Mapping], columns: Sequence[str]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(_fmt(row[c]) for c in columns))
    path.write_text("\n".join(lines) + "\n")


def read_csv(path: Path | str) -> list[dict]:
    lines = Path(path).read_text().strip().splitlines()
    header = lines[0].split(",")
    rows = []
    for line in lines[1:]:
        cells = line.split(",")
        row = {}
        for key, cell in zip(header, cells):
            try:
                row[key] = int(cell) if key in ("n", "cost") else float(cell)
            except ValueError:
                row[key] = cell
        rows.append(row)
    return rows
