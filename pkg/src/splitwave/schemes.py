"""Time-splitting integrators: composition products and affine combinations.

A composition scheme applies ``phi_B(b_s dt) o phi_A(a_s dt) o ... o
phi_B(b_1 dt) o phi_A(a_1 dt)`` (stage 1 acts first); orders above two
force some negative coefficients.  An affine scheme of ``s`` stages
forms the weighted sum ``sum_j gamma_j (P_j^+(dt/j) + P_j^-(dt/j))``
where ``P_j^{+/-}`` is the j-fold self-composition of the two adjoint
Lie-Trotter maps, uses only positive substeps, and converges with order
``2 s`` once the gammas satisfy the linear order conditions
``sum gamma_j = 1/2`` and ``sum gamma_j / j^(2k) = 0`` (k < s).

Propagators are plain callables ``(values, dt) -> values`` acting on the
grid arrays; every invocation is tallied in a StepCounter (evaluation
counts are the cost unit of the benchmark harness).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Mapping

import numpy as np

from .errors import BlowUpError
from .spectral import Field

Propagator = Callable[[np.ndarray, float], np.ndarray]

SCHEME_NAMES = (
    "lie-trotter",
    "strang",
    "ruth",
    "neri",
    "yoshida6",
    "affine2",
    "affine4",
    "affine6",
)


@dataclass
class StepCounter:
    """Running tally of propagator evaluations (monotone; reset only explicitly)."""

    evals_a: int = 0
    evals_b: int = 0

    def reset(self) -> None:
        self.evals_a = 0
        self.evals_b = 0


@dataclass(frozen=True)
class CompositionScheme:
    name: str
    a: tuple[float, ...]
    b: tuple[float, ...]
    order: int

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("coefficient lists must have equal length")
        for coeffs, label in ((self.a, "a"), (self.b, "b")):
            if abs(math.fsum(coeffs) - 1.0) > 1e-14:
                raise ValueError(f"{label} coefficients of {self.name} must sum to 1")

    @property
    def stages(self) -> int:
        return len(self.a)

    @property
    def evals_per_step(self) -> tuple[int, int]:
        return (
            sum(1 for c in self.a if c != 0.0),
            sum(1 for c in self.b if c != 0.0),
        )


@dataclass(frozen=True)
class AffineScheme:
    name: str
    gammas: tuple[float, ...]

    def __post_init__(self):
        s = len(self.gammas)
        if s < 1:
            raise ValueError("need at least one stage")
        if abs(math.fsum(self.gammas) - 0.5) > 1e-14:
            raise ValueError(f"gammas of {self.name} must sum to 1/2")
        for k in range(1, s):
            cond = math.fsum(g / j ** (2 * k) for j, g in enumerate(self.gammas, start=1))
            if abs(cond) > 1e-13:
                raise ValueError(f"order condition k={k} violated for {self.name}")

    @property
    def stages(self) -> int:
        return len(self.gammas)

    @property
    def order(self) -> int:
        return 2 * len(self.gammas)

    @property
    def evals_per_step(self) -> tuple[int, int]:
        s = self.stages
        return (s * (s + 1), s * (s + 1))


Scheme = CompositionScheme | AffineScheme


def lie_trotter_plus(phi_a: Propagator, phi_b: Propagator, dt: float, values, counter: StepCounter):
    """phi_B(dt) o phi_A(dt)."""
    out = phi_a(values, dt)
    counter.evals_a += 1
    out = phi_b(out, dt)
    counter.evals_b += 1
    return out


def lie_trotter_minus(phi_a: Propagator, phi_b: Propagator, dt: float, values, counter: StepCounter):
    """phi_A(dt) o phi_B(dt) (adjoint of the plus propagator)."""
    out = phi_b(values, dt)
    counter.evals_b += 1
    out = phi_a(out, dt)
    counter.evals_a += 1
    return out


def composition_step(
    scheme: CompositionScheme,
    phi_a: Propagator,
    phi_b: Propagator,
    dt: float,
    values,
    counter: StepCounter,
):
    """One step of the composition product; zero coefficients cost nothing."""
    out = values
    for ai, bi in zip(scheme.a, scheme.b):
        if ai != 0.0:
            out = phi_a(out, ai * dt)
            counter.evals_a += 1
        if bi != 0.0:
            out = phi_b(out, bi * dt)
            counter.evals_b += 1
    return out


def affine_step(
    scheme: AffineScheme,
    phi_a: Propagator,
    phi_b: Propagator,
    dt: float,
    values,
    counter: StepCounter,
):
    """One step of the symmetric affine combination.

    Branches are evaluated in ascending j with the plus branch before
    the minus branch, and all start from the same input state, so the
    reduction order (and hence the rounding) is reproducible.
    """
    acc = None
    for j, gamma in enumerate(scheme.gammas, start=1):
        sub = dt / j
        plus = values
        for _ in range(j):
            plus = lie_trotter_plus(phi_a, phi_b, sub, plus, counter)
        acc = gamma * plus if acc is None else acc + gamma * plus
        minus = values
        for _ in range(j):
            minus = lie_trotter_minus(phi_a, phi_b, sub, minus, counter)
        acc = acc + gamma * minus
    return acc


def scheme_step(
    scheme: Scheme,
    phi_a: Propagator,
    phi_b: Propagator,
    dt: float,
    values,
    counter: StepCounter,
):
    if isinstance(scheme, AffineScheme):
        return affine_step(scheme, phi_a, phi_b, dt, values, counter)
    return composition_step(scheme, phi_a, phi_b, dt, values, counter)


def _affine_gammas_exact(s: int) -> list[Fraction]:
    """Solve the affine order conditions exactly over the rationals."""
    if s < 1:
        raise ValueError("need at least one stage")
    rows = [[Fraction(1)] * s]
    rows += [[Fraction(1, j ** (2 * k)) for j in range(1, s + 1)] for k in range(1, s)]
    rhs = [Fraction(1, 2)] + [Fraction(0)] * (s - 1)
    m = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    for col in range(s):
        pivot = next(r for r in range(col, s) if m[r][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col]
        m[col] = [v / inv for v in m[col]]
        for r in range(s):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return [m[i][s] for i in range(s)]


def solve_affine_coefficients(s: int) -> tuple[float, ...]:
    """Gammas of the s-stage symmetric affine scheme (order 2s)."""
    return tuple(float(g) for g in _affine_gammas_exact(s))


# Sixth-order composition constants from H. Yoshida, "Construction of
# higher order symplectic integrators", Phys. Lett. A 150 (1990),
# solution A of the w-equations; w0 makes the step sum to one.
_YOSHIDA6_W = (-1.17767998417887, 0.235573213359357, 0.784513610477560)


def _yoshida6_coefficients() -> tuple[tuple[float, ...], tuple[float, ...]]:
    w1, w2, w3 = _YOSHIDA6_W
    w0 = 1.0 - 2.0 * (w1 + w2 + w3)
    c = (w3, w2, w1, w0, w1, w2, w3)
    a = [c[0] / 2.0]
    a += [(c[i - 1] + c[i]) / 2.0 for i in range(1, 7)]
    a += [c[6] / 2.0]
    b = list(c) + [0.0]
    return tuple(a), tuple(b)


def builtin_schemes() -> Mapping[str, Scheme]:
    """Catalog of the schemes exposed by the CLI, keyed by name."""
    w = 2.0 ** (1.0 / 3.0)
    neri_a1 = 1.0 / (2.0 * (2.0 - w))
    neri_a2 = -(w - 1.0) / (2.0 * (2.0 - w))
    ya, yb = _yoshida6_coefficients()
    return {
        "lie-trotter": CompositionScheme("lie-trotter", (1.0,), (1.0,), order=1),
        "strang": CompositionScheme("strang", (0.5, 0.5), (1.0, 0.0), order=2),
        # Ruth's third-order coefficients, composed in the adjoint order
        # (linear flow takes 7/24, 3/4, -1/24); same order, smaller error
        # mix on traveling-wave benchmarks than the direct reading
        "ruth": CompositionScheme(
            "ruth",
            (7.0 / 24.0, 3.0 / 4.0, -1.0 / 24.0),
            (2.0 / 3.0, -2.0 / 3.0, 1.0),
            order=3,
        ),
        "neri": CompositionScheme(
            "neri",
            (neri_a1, neri_a2, neri_a2, neri_a1),
            (2.0 * neri_a1, -w * 2.0 * neri_a1, 2.0 * neri_a1, 0.0),
            order=4,
        ),
        "yoshida6": CompositionScheme("yoshida6", ya, yb, order=6),
        "affine2": AffineScheme("affine2", solve_affine_coefficients(1)),
        "affine4": AffineScheme("affine4", solve_affine_coefficients(2)),
        "affine6": AffineScheme("affine6", solve_affine_coefficients(3)),
    }


def get_scheme(name: str) -> Scheme:
    catalog = builtin_schemes()
    if name not in catalog:
        raise KeyError(f"unknown scheme {name!r}; choose from {', '.join(catalog)}")
    return catalog[name]


@dataclass
class RunRecord:
    """Time series and bookkeeping of one evolution run."""

    status: str = "completed"  # "completed" or "blowup"
    blowup_step: int | None = None
    steps: int = 0
    counter: StepCounter = dc_field(default_factory=StepCounter)
    times: list[float] = dc_field(default_factory=list)
    metrics: dict[str, list[float]] = dc_field(default_factory=dict)
    evals_a_series: list[int] = dc_field(default_factory=list)
    evals_b_series: list[int] = dc_field(default_factory=list)
    snapshots: list[tuple[float, np.ndarray]] = dc_field(default_factory=list)
    wall_time: float = 0.0  # informational only, never a benchmark metric

    @property
    def completed(self) -> bool:
        return self.status == "completed"


def evolve(
    scheme: Scheme,
    phi_a: Propagator,
    phi_b: Propagator,
    dt: float,
    t_final: float,
    start: Field,
    observers: Mapping[str, Callable[[Field, float], float]] | None = None,
    stride: int = 1,
    snapshot_stride: int | None = None,
    max_amplitude: float = 1e10,
) -> tuple[Field, RunRecord]:
    """March ``start`` to t_final in steps of dt, sampling observers.

    Observers are callables ``(field, t) -> float`` sampled at t = 0,
    every ``stride`` steps and at the end.  ``t_final`` must be an
    integer multiple of ``dt``.  A non-finite state or one exceeding
    ``max_amplitude`` in max-norm terminates the run with a blow-up
    record (carrying the offending step) instead of raising; the
    returned field is the last usable state.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    n_steps = round(t_final / dt)
    if abs(n_steps * dt - t_final) > 1e-9 * max(1.0, abs(t_final)):
        raise ValueError(f"t_final = {t_final!r} is not an integer multiple of dt = {dt!r}")
    if stride < 1:
        raise ValueError("stride must be positive")

    observers = dict(observers or {})
    record = RunRecord()
    record.metrics = {name: [] for name in observers}
    u = start.values.astype(complex)
    basis = start.basis

    def sample(t: float) -> None:
        fld = Field(u, basis)
        record.times.append(t)
        record.evals_a_series.append(record.counter.evals_a)
        record.evals_b_series.append(record.counter.evals_b)
        for name, fn in observers.items():
            record.metrics[name].append(float(fn(fld, t)))

    tic = time.perf_counter()
    sample(0.0)
    if snapshot_stride:
        record.snapshots.append((0.0, u.copy()))
    for step in range(1, n_steps + 1):
        try:
            u_next = scheme_step(scheme, phi_a, phi_b, dt, u, record.counter)
        except BlowUpError:
            record.status = "blowup"
            record.blowup_step = step
            break
        finite = bool(np.all(np.isfinite(u_next.view(float))))
        if not finite or np.max(np.abs(u_next)) > max_amplitude:
            record.status = "blowup"
            record.blowup_step = step
            break
        u = u_next
        record.steps = step
        if step % stride == 0 or step == n_steps:
            sample(step * dt)
        if snapshot_stride and (step % snapshot_stride == 0 or step == n_steps):
            record.snapshots.append((step * dt, u.copy()))
    record.wall_time = time.perf_counter() - tic
    return Field(u, basis), record
