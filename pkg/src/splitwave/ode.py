"""Adaptive explicit Runge-Kutta 8(5,3) integrator.

The stepper advances with the 12-stage 8th-order Dormand-Prince formula
and controls the step with the blended 5th/3rd-order embedded error
estimate (``err = |h| E5^2 / sqrt(n (E5^2 + 0.01 E3^2))`` in the scaled
RMS norm).  Step-size selection uses a PI controller with safety 0.9
and growth factor clamped to [0.2, 10].  Complex states are supported
throughout; scales use the complex modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _rk_tableau as tab
from .errors import MaxStepsExceededError, StepUnderflowError

_EPS = float(np.finfo(float).eps)
_SAFETY = 0.9
_MIN_FACTOR = 0.2
_MAX_FACTOR = 10.0
_BETA = 0.04  # PI stabilization
_EXPO = 1.0 / 8.0 - 0.2 * _BETA


@dataclass(frozen=True)
class RKConfig:
    abs_tol: float = 1e-13
    rel_tol: float = 1e-13
    max_steps: int = 1_000_000
    initial_step: float | None = None

    def __post_init__(self):
        if self.abs_tol < _EPS or self.rel_tol < _EPS:
            raise ValueError("tolerances below machine epsilon stall the controller")
        if self.max_steps <= 0:
            raise ValueError("max_steps must be positive")
        if self.initial_step is not None and self.initial_step <= 0:
            raise ValueError("initial_step must be positive")


def rk853_core_step(f: Callable, t: float, y: np.ndarray, h: float, k0=None):
    """One fixed step of the 8th-order core.

    Returns ``(y_new, K)`` where ``K`` holds the 13 stage derivatives
    (the last one evaluated at ``(t + h, y_new)``, reusable as the first
    stage of the next step and needed by the error estimate).
    """
    K = np.empty((13,) + y.shape, dtype=y.dtype)
    K[0] = f(t, y) if k0 is None else k0
    for i in range(1, 12):
        K[i] = f(t + tab.C[i] * h, y + h * (tab.A[i, :i] @ K[:i]))
    y_new = y + h * (tab.B @ K[:12])
    K[12] = f(t + h, y_new)
    return y_new, K


def _error_norm(K, h, y, y_new, abs_tol, rel_tol) -> float:
    scale = abs_tol + rel_tol * np.maximum(np.abs(y), np.abs(y_new))
    e5 = np.sum(np.abs((tab.E5 @ K) / scale) ** 2)
    e3 = np.sum(np.abs((tab.E3 @ K) / scale) ** 2)
    denom = e5 + 0.01 * e3
    if denom <= 0.0:
        return 0.0
    return abs(h) * e5 / np.sqrt(y.size * denom)


def _initial_step(f, t0, y0, f0, t_end, abs_tol, rel_tol) -> float:
    # standard starting-step heuristic (Hairer I.II.4): two trial derivatives
    scale = abs_tol + rel_tol * np.abs(y0)
    d0 = np.sqrt(np.mean(np.abs(y0 / scale) ** 2))
    d1 = np.sqrt(np.mean(np.abs(f0 / scale) ** 2))
    h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
    h0 = min(h0, t_end - t0)
    f1 = f(t0 + h0, y0 + h0 * f0)
    d2 = np.sqrt(np.mean(np.abs((f1 - f0) / scale) ** 2)) / h0
    if max(d1, d2) <= 1e-15:
        h1 = max(1e-6, 1e-3 * h0)
    else:
        h1 = (0.01 / max(d1, d2)) ** 0.125
    return min(100 * h0, h1, t_end - t0)


def rk853_integrate(f: Callable, y0, t_span, config: RKConfig = RKConfig()) -> np.ndarray:
    """Integrate ``y' = f(t, y)`` from t_span[0] to t_span[1], returning y(t_end)."""
    t0, t_end = float(t_span[0]), float(t_span[1])
    if not t_end > t0:
        raise ValueError("t_end must exceed t_start")
    y = np.atleast_1d(np.asarray(y0))
    scalar_input = np.ndim(y0) == 0
    k_first = np.asarray(f(t0, y))
    dtype = np.result_type(y.dtype, k_first.dtype, np.float64)
    y = y.astype(dtype)
    k_first = k_first.astype(dtype)

    h = config.initial_step
    if h is None:
        h = _initial_step(f, t0, y, k_first, t_end, config.abs_tol, config.rel_tol)
    h = min(h, t_end - t0)

    t = t0
    fac_old = 1e-4
    attempts = 0
    while t < t_end:
        if attempts >= config.max_steps:
            raise MaxStepsExceededError(
                f"no convergence within {config.max_steps} step attempts (t = {t:.6g})"
            )
        if h <= _EPS * max(abs(t), abs(t_end)) or h < 1e-300:
            raise StepUnderflowError(
                f"step size underflow at t = {t:.6g} (stiffness or blow-up)"
            )
        last = t + h >= t_end
        if last:
            h = t_end - t
        attempts += 1
        y_new, K = rk853_core_step(f, t, y, h, k_first)
        if np.all(np.isfinite(y_new.view(float))):
            err = _error_norm(K, h, y, y_new, config.abs_tol, config.rel_tol)
        else:
            err = np.inf
        if err <= 1.0:
            t = t_end if last else t + h
            y = y_new
            k_first = K[12]
            if err == 0.0:
                factor = _MAX_FACTOR
            else:
                factor = min(
                    _MAX_FACTOR,
                    max(_MIN_FACTOR, _SAFETY * fac_old**_BETA * err**-_EXPO),
                )
            fac_old = max(err, 1e-4)
            h *= factor
        else:
            shrink = _MIN_FACTOR if not np.isfinite(err) else max(
                _MIN_FACTOR, min(1.0, _SAFETY * err**-_EXPO)
            )
            h *= shrink
    return y[0] if scalar_input else y


def rk853_fixed(f: Callable, y0, t_span, n_steps: int) -> np.ndarray:
    """Apply the 8th-order core with ``n_steps`` equal steps (no error control)."""
    t0, t_end = float(t_span[0]), float(t_span[1])
    if n_steps < 1:
        raise ValueError("need at least one step")
    y = np.atleast_1d(np.asarray(y0))
    scalar_input = np.ndim(y0) == 0
    k_first = np.asarray(f(t0, y))
    dtype = np.result_type(y.dtype, k_first.dtype, np.float64)
    y = y.astype(dtype)
    k_first = k_first.astype(dtype)
    h = (t_end - t0) / n_steps
    for m in range(n_steps):
        y, K = rk853_core_step(f, t0 + m * h, y, h, k_first)
        k_first = K[12]
    return y[0] if scalar_input else y
