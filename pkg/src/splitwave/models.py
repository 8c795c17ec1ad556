"""Model catalog: symbols, nonlinear flows, exact solutions, invariants.

Covered equations (all in the form i u_t = A u + B(u)):

* nlse3 / fnlse3 -- A(k) = |k|^alpha / 2, B(u) = sign |u|^2 u
  (sign = -1 focusing), conserving mass and Hamiltonian;
* cgle3 / cgle5 / fcgle5 -- A(k) = (1/2 - i beta)|k|^alpha + i delta,
  B(u) = (gamma + i eps)|u|^2 u + (-nu + i mu)|u|^4 u, irreversible.

The cubic Ginzburg-Landau equation with delta = 0 supports a family of
arbitrary-amplitude chirped sech solitons when the nonlinear gain is
matched to the diffusion (`matched_epsilon`); that family provides the
exact reference solution for the irreversibility benchmarks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .propagators import (
    LinearSymbol,
    NonlinearParams,
    build_a_matrix,
    cgle_cubic_step,
    nlse_cubic_step,
    quintic_step_numeric,
)
from .spectral import Field, FourierBasis

MODEL_KINDS = ("nlse3", "fnlse3", "cgle3", "cgle5", "fcgle5")


@dataclass(frozen=True)
class ModelSpec:
    kind: str
    alpha: float = 2.0
    beta: float = 0.0
    delta: float = 0.0
    gamma: float = -1.0
    epsilon: float = 0.0
    nu: float = 0.0
    mu: float = 0.0
    sign: int = -1

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise ValueError(f"unknown model kind {self.kind!r}")
        if not 0.0 < self.alpha <= 2.0:
            raise ValueError("Levy index must lie in (0, 2]")
        if self.sign not in (-1, 1):
            raise ValueError("sign must be +1 (defocusing) or -1 (focusing)")
        if self.kind in ("nlse3", "fnlse3"):
            if any((self.beta, self.delta, self.epsilon, self.nu, self.mu)):
                raise ValueError(f"{self.kind} admits no gain/loss terms")
            if self.kind == "nlse3" and self.alpha != 2.0:
                raise ValueError("nlse3 requires alpha = 2 (use fnlse3 otherwise)")
        if self.kind == "cgle3":
            if self.nu or self.mu:
                raise ValueError("cgle3 has no quintic terms (use cgle5)")
            if self.alpha != 2.0:
                raise ValueError("cgle3 requires alpha = 2 (use fcgle5 otherwise)")
        if self.kind == "cgle5" and self.alpha != 2.0:
            raise ValueError("cgle5 requires alpha = 2 (use fcgle5 otherwise)")

    @property
    def conserves_invariants(self) -> bool:
        return self.kind in ("nlse3", "fnlse3")


def nlse3(sign: int = -1) -> ModelSpec:
    return ModelSpec("nlse3", gamma=float(sign), sign=sign)


def fnlse3(alpha: float, sign: int = -1) -> ModelSpec:
    return ModelSpec("fnlse3", alpha=alpha, gamma=float(sign), sign=sign)


def cgle3(beta: float, gamma: float = -1.0, epsilon: float | None = None,
          delta: float = 0.0) -> ModelSpec:
    """Cubic CGLE; epsilon defaults to the arbitrary-amplitude matched value."""
    if epsilon is None:
        epsilon = matched_epsilon(beta, gamma)
    return ModelSpec("cgle3", beta=beta, delta=delta, gamma=gamma, epsilon=epsilon)


def fcgle5(alpha: float, beta: float, delta: float, gamma: float, epsilon: float,
           nu: float, mu: float) -> ModelSpec:
    kind = "cgle5" if alpha == 2.0 else "fcgle5"
    return ModelSpec(kind, alpha=alpha, beta=beta, delta=delta, gamma=gamma,
                     epsilon=epsilon, nu=nu, mu=mu)


def linear_symbol(model: ModelSpec) -> LinearSymbol:
    """The Fourier-multiplier symbol of the model's linear part."""
    alpha, beta, delta = model.alpha, model.beta, model.delta
    if model.kind in ("nlse3", "fnlse3"):
        fn = lambda k: 0.5 * np.abs(k) ** alpha + 0.0j
    else:
        fn = lambda k: (0.5 - 1j * beta) * np.abs(k) ** alpha + 1j * delta
    return LinearSymbol(fn, alpha=alpha, beta=beta, delta=delta)


def nonlinear_params(model: ModelSpec) -> NonlinearParams:
    if model.kind in ("nlse3", "fnlse3"):
        return NonlinearParams(gamma=float(model.sign), sign=model.sign)
    return NonlinearParams(gamma=model.gamma, epsilon=model.epsilon,
                           nu=model.nu, mu=model.mu, sign=model.sign)


def nonlinear_flow(model: ModelSpec) -> Callable[[np.ndarray, float], np.ndarray]:
    """Pointwise flow of the nonlinear subproblem (exact where available)."""
    if model.kind in ("nlse3", "fnlse3"):
        sign = model.sign
        return lambda u, dt: nlse_cubic_step(u, sign, dt)
    if model.kind == "cgle3":
        gamma, eps = model.gamma, model.epsilon
        return lambda u, dt: cgle_cubic_step(u, gamma, eps, dt)
    params = nonlinear_params(model)
    return lambda u, dt: quintic_step_numeric(u, params, dt)


def nonlinear_rhs(model: ModelSpec) -> Callable[[np.ndarray], np.ndarray]:
    """du/dt contribution of B(u), for full-system reference integration."""
    if model.kind in ("nlse3", "fnlse3"):
        c3 = -1j * model.sign
        return lambda u: c3 * (u.real**2 + u.imag**2) * u
    c3 = model.epsilon - 1j * model.gamma
    c5 = model.mu + 1j * model.nu

    def rhs(u):
        mod2 = u.real**2 + u.imag**2
        return (c3 * mod2 + c5 * mod2**2) * u

    return rhs


# --- exact solutions -------------------------------------------------------


@dataclass(frozen=True)
class NLSESolitonParams:
    """Traveling sech soliton of the focusing cubic equation."""

    eta: float = 1.0
    c: float = 0.0
    x0: float = 0.0
    phi0: float = 0.0

    def __post_init__(self):
        if self.eta <= 0:
            raise ValueError("amplitude eta must be positive")

    @property
    def omega(self) -> float:
        return (self.c**2 - self.eta**2) / 2.0


def nlse3_soliton(params: NLSESolitonParams, x, t: float) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    theta = params.eta * (x - params.c * t - params.x0)
    phase = params.c * x - params.omega * t + params.phi0
    return params.eta / np.cosh(theta) * np.exp(1j * phase)


@dataclass(frozen=True)
class CGLE3SolitonParams:
    """Arbitrary-amplitude chirped soliton of the cubic CGLE (delta = 0).

    The stationary profile is G sqrt(F) sech(G x) with logarithmic chirp
    d; it solves the cubic equation exactly when gamma = -1 and the
    nonlinear gain equals `matched_epsilon(beta)`.
    """

    beta: float
    G: float = 1.0
    phi0: float = 0.0

    def __post_init__(self):
        if self.beta <= 0:
            raise ValueError("diffusion beta must be positive")
        if self.G <= 0:
            raise ValueError("inverse width G must be positive")

    @property
    def lam(self) -> float:
        return math.sqrt(1.0 + 4.0 * self.beta**2)

    @property
    def d(self) -> float:
        return (self.lam - 1.0) / (2.0 * self.beta)

    @property
    def F(self) -> float:
        lam = self.lam
        return lam * (3.0 * lam + 1.0) / (2.0 * (lam + 1.0))

    @property
    def omega(self) -> float:
        return -self.d * self.lam**2 * self.G**2 / (2.0 * self.beta)

    @property
    def peak_amplitude(self) -> float:
        return self.G * math.sqrt(self.F)


def matched_epsilon(beta: float, gamma: float = -1.0) -> float:
    """Nonlinear gain for which the cubic CGLE supports arbitrary-amplitude solitons."""
    lam = math.sqrt(1.0 + 4.0 * beta**2)
    return -gamma * 2.0 * beta / (3.0 * lam + 1.0)


def cgle3_soliton(params: CGLE3SolitonParams, x, t: float) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    gx = np.abs(params.G * x)
    # log of the sech profile, stable for large |x|
    log_amp = math.log(params.peak_amplitude) + math.log(2.0) - gx - np.log1p(np.exp(-2.0 * gx))
    return np.exp((1.0 + 1j * params.d) * log_amp + 1j * (params.phi0 - params.omega * t))


# --- invariants and metrics ------------------------------------------------


def fractional_laplacian(fld: Field, alpha: float) -> Field:
    """(-d^2/dx^2)^(alpha/2) through the |k|^alpha multiplier (Fourier basis)."""
    if not isinstance(fld.basis, FourierBasis):
        raise TypeError("fractional_laplacian needs a Fourier field; "
                        "Hermite discretizations assemble the operator matrix instead")
    if not 0.0 < alpha <= 2.0:
        raise ValueError("alpha must lie in (0, 2]")
    k = fld.basis.wavenumbers
    coeffs = fld.basis.forward(fld.values)
    return Field(fld.basis.inverse(np.abs(k) ** alpha * coeffs), fld.basis)


def mass(fld: Field) -> float:
    """integral of |u|^2 by the basis-native quadrature."""
    return float(np.sum(fld.basis.quadrature_weights * np.abs(fld.values) ** 2))


_hermite_dispersion_cache: dict[tuple[int, float], np.ndarray] = {}
_hermite_dispersion_refs: list = []


def hamiltonian(fld: Field, alpha: float = 2.0, sign: int = -1) -> float:
    """(1/2) integral of |d^(alpha/2) u/dx^(alpha/2)|^2 + sign |u|^4.

    The fractional half-derivative enters only through its modulus, so
    the multiplier |k|^(alpha/2) is applied in frequency space; on a
    Hermite basis the quadratic form of the |k|^alpha operator matrix is
    used instead.
    """
    if not 0.0 < alpha <= 2.0:
        raise ValueError("alpha must lie in (0, 2]")
    w = fld.basis.quadrature_weights
    quartic = float(np.sum(w * np.abs(fld.values) ** 4))
    if isinstance(fld.basis, FourierBasis):
        coeffs = fld.basis.forward(fld.values)
        # unitary transform: sum_j |g_j|^2 dx = sum_k |g^_k|^2 dx
        kinetic = float(fld.basis.dx * np.sum(
            np.abs(fld.basis.wavenumbers) ** alpha * np.abs(coeffs) ** 2))
    else:
        key = (id(fld.basis), float(alpha))
        mat = _hermite_dispersion_cache.get(key)
        if mat is None:
            symbol = LinearSymbol(lambda k: np.abs(k) ** alpha + 0.0j, alpha=alpha)
            mat = build_a_matrix(symbol, fld.basis)
            _hermite_dispersion_cache[key] = mat
            _hermite_dispersion_refs.append(fld.basis)
        coeffs = fld.basis.forward(fld.values)
        kinetic = float(np.real(np.vdot(coeffs, mat @ coeffs)))
    return 0.5 * (kinetic + sign * quartic)


def relative_invariant_error(q_t: float, q_0: float) -> float:
    if q_0 == 0.0:
        raise ZeroDivisionError("reference invariant is zero")
    return abs(q_t / q_0 - 1.0)


def error_inf(u_num: Field, u_ref: Field) -> float:
    """Max pointwise modulus of the difference on the shared grid."""
    if u_num.basis is not u_ref.basis and u_num.basis != u_ref.basis:
        raise ValueError("fields live on different bases")
    return float(np.max(np.abs(u_num.values - u_ref.values)))
