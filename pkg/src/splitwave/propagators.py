"""Exact and semi-exact flows for the split linear/nonlinear subproblems.

The linear flow solves ``i u_t = A u`` with a Fourier-multiplier ``A``:
diagonal phase tables on a Fourier basis, a dense matrix exponential of
the quadrature-assembled operator on a Hermite basis.  The nonlinear
flows are pointwise in grid space: exact closed forms for the cubic
(conservative and gain/loss) cases, an adaptive 8(5,3) integration for
the cubic-quintic case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.linalg import expm

from .errors import BlowUpError
from .ode import RKConfig, rk853_integrate
from .spectral import Field, HermiteBasis, hermite_eval_all, hermite_nodes_weights


@dataclass(frozen=True, eq=False)
class LinearSymbol:
    """Fourier-multiplier symbol k -> A(k), with the model metadata.

    ``alpha`` is the Levy index of the |k|^alpha dispersion, ``beta`` the
    diffusion strength and ``delta`` the linear gain/loss; ``beta == 0``
    and ``delta == 0`` means the symbol is real (norm-preserving flow).
    """

    fn: Callable[[np.ndarray], np.ndarray]
    alpha: float = 2.0
    beta: float = 0.0
    delta: float = 0.0

    def __call__(self, k) -> np.ndarray:
        return np.asarray(self.fn(np.asarray(k, dtype=float)), dtype=complex)

    @property
    def is_real(self) -> bool:
        return self.beta == 0.0 and self.delta == 0.0


def matrix_exponential(m: np.ndarray) -> np.ndarray:
    """exp(M) by scaling-and-squaring with Pade approximants."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    if not np.all(np.isfinite(m.view(float) if np.iscomplexobj(m) else m)):
        raise ValueError("matrix entries must be finite")
    return expm(m)


def build_a_matrix(symbol: LinearSymbol, basis: HermiteBasis) -> np.ndarray:
    """Operator matrix of the multiplier in the (dilated) Hermite basis.

    A_mn = (-i)^(n-m) sum_j w_j phi_m(k_j) symbol(s k_j) phi_n(k_j),
    with (k_j, w_j) the (N+1)-point modified Gauss-Hermite rule; the
    dilation enters only through the symbol argument because Hermite
    functions of scale s transform to Hermite functions of scale 1/s.
    Exact for polynomial symbols of degree <= 2.
    """
    n = basis.n
    nodes, weights = hermite_nodes_weights(n + 1)
    phi = hermite_eval_all(n, nodes)
    sym = symbol(basis.scaling * nodes)
    core = (phi * (weights * sym)[None, :]) @ phi.T
    phase = (-1j) ** np.arange(n)
    return np.conj(phase)[:, None] * core * phase[None, :]


class LinearFlow:
    """Applies exp(-i dt A) on a basis; propagators memoized per dt."""

    def __init__(self, symbol: LinearSymbol, basis):
        self.symbol = symbol
        self.basis = basis
        self._cache: dict[float, np.ndarray] = {}
        if isinstance(basis, HermiteBasis):
            self.a_matrix = build_a_matrix(symbol, basis)
        else:
            self.a_matrix = None
            self._symbol_on_grid = symbol(basis.wavenumbers)

    def propagator(self, dt: float) -> np.ndarray:
        """Phase table (Fourier) or grid-space propagator matrix (Hermite)."""
        key = float(dt)
        table = self._cache.get(key)
        if table is None:
            if self.a_matrix is None:
                table = np.exp(-1j * dt * self._symbol_on_grid)
            else:
                coeff_prop = matrix_exponential(-1j * dt * self.a_matrix)
                table = self.basis.idht_matrix @ coeff_prop @ self.basis.dht_matrix
            self._cache[key] = table
        return table

    def apply(self, values: np.ndarray, dt: float) -> np.ndarray:
        table = self.propagator(dt)
        if self.a_matrix is None:
            return np.fft.ifft(table * np.fft.fft(values))
        return table @ values

    def __call__(self, values: np.ndarray, dt: float) -> np.ndarray:
        return self.apply(values, dt)


_flow_cache: dict[tuple[int, int], LinearFlow] = {}
_flow_cache_refs: list = []  # keep keyed objects alive so ids stay unique


def linear_step(fld: Field, symbol: LinearSymbol, dt: float) -> Field:
    """Advance a field through the linear flow (dispatches on basis)."""
    key = (id(symbol), id(fld.basis))
    flow = _flow_cache.get(key)
    if flow is None:
        flow = LinearFlow(symbol, fld.basis)
        _flow_cache[key] = flow
        _flow_cache_refs.append((symbol, fld.basis))
    out = flow.apply(fld.values, dt)
    return Field(out, fld.basis)


@dataclass(frozen=True)
class NonlinearParams:
    """Coefficients of the cubic-quintic nonlinearity (gamma + i eps)|u|^2 u + (-nu + i mu)|u|^4 u."""

    gamma: float = 0.0
    epsilon: float = 0.0
    nu: float = 0.0
    mu: float = 0.0
    sign: int = -1  # focusing convention for the NLSE family

    def __post_init__(self):
        for name in ("gamma", "epsilon", "nu", "mu"):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")


def nlse_cubic_step(values: np.ndarray, sign: int, dt: float) -> np.ndarray:
    """Exact flow of i u' = sign |u|^2 u: pure phase, modulus preserved."""
    return values * np.exp(-1j * sign * np.abs(values) ** 2 * dt)


def cgle_cubic_step(values: np.ndarray, gamma: float, epsilon: float, dt: float) -> np.ndarray:
    """Exact flow of i u' = (gamma + i epsilon)|u|^2 u.

    Valid while 1 - 2 epsilon |u|^2 dt stays positive; beyond that bound
    the subproblem itself blows up and a BlowUpError is raised.
    """
    if epsilon == 0.0:
        return values * np.exp(-1j * gamma * np.abs(values) ** 2 * dt)
    shift = -2.0 * epsilon * np.abs(values) ** 2 * dt
    if np.any(shift <= -1.0):
        bound = 1.0 / (2.0 * epsilon * np.max(np.abs(values)) ** 2)
        raise BlowUpError(
            f"cubic gain flow leaves its domain: dt = {dt:.3g} exceeds the bound {bound:.3g}"
        )
    # log1p keeps the epsilon -> 0 limit smooth (gamma/epsilon amplifies any
    # rounding of the logarithm)
    return values * np.exp(-0.5 * (1.0 - 1j * gamma / epsilon) * np.log1p(shift))


def quintic_step_numeric(
    values: np.ndarray,
    params: NonlinearParams,
    dt: float,
    include_delta: bool = False,
    delta: float = 0.0,
    rk_config: RKConfig = RKConfig(abs_tol=1e-13, rel_tol=1e-13),
) -> np.ndarray:
    """Flow of i u' = (gamma + i eps)|u|^2 u + (-nu + i mu)|u|^4 u, pointwise.

    No explicit closed form exists for the cubic-quintic case, so the
    grid points are integrated as one batched system with the adaptive
    8(5,3) scheme at tight tolerance.  ``include_delta`` optionally adds
    the linear i delta u term (normally folded into the linear symbol).
    """
    if dt == 0.0:
        return values.copy()
    c3 = params.epsilon - 1j * params.gamma
    c5 = params.mu + 1j * params.nu
    c1 = delta if include_delta else 0.0
    direction = 1.0 if dt > 0 else -1.0  # composition schemes use negative substeps

    def rhs(_t, u):
        mod2 = u.real**2 + u.imag**2
        return direction * (c1 + c3 * mod2 + c5 * mod2**2) * u

    return rk853_integrate(rhs, values.astype(complex), (0.0, abs(dt)), rk_config)
