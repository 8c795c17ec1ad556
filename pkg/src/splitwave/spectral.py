"""Collocation grids, Fourier/Hermite bases, transforms and quadrature.

Both bases expose the same surface: ``nodes`` (collocation points),
``quadrature_weights`` (for integrals of grid functions over the line),
and forward/backward transforms between grid values and spectral
coefficients.  The Fourier transform pair is unitary (``1/sqrt(N)`` both
ways) so that the discrete Parseval identity holds without extra
factors.  The Hermite basis uses normalized Hermite functions
``phi_n(x) = H_n(x) exp(-x^2/2) / sqrt(2^n n! sqrt(pi))`` evaluated by
the stable normalized three-term recurrence, never raw Hermite
polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal


def hermite_eval(n: int, x) -> np.ndarray:
    """Evaluate the normalized Hermite function ``phi_n`` at points ``x``.

    Uses the recurrence
    ``phi_{m+1} = sqrt(2/(m+1)) x phi_m - sqrt(m/(m+1)) phi_{m-1}``
    starting from ``phi_0 = pi^{-1/4} exp(-x^2/2)``.  All intermediate
    values stay bounded by O(1) in the oscillatory region, so there is
    no overflow for any degree; far outside the classical turning point
    the values underflow harmlessly to zero.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    x = np.asarray(x, dtype=float)
    h_prev = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if n == 0:
        return h_prev
    h = np.sqrt(2.0) * x * h_prev
    for m in range(1, n):
        h, h_prev = np.sqrt(2.0 / (m + 1)) * x * h - np.sqrt(m / (m + 1)) * h_prev, h
    return h


def hermite_eval_all(count: int, x) -> np.ndarray:
    """Stack ``phi_0 .. phi_{count-1}`` at points ``x``, shape (count, len(x))."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty((count, x.size))
    out[0] = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if count > 1:
        out[1] = np.sqrt(2.0) * x * out[0]
    for m in range(1, count - 1):
        out[m + 1] = np.sqrt(2.0 / (m + 1)) * x * out[m] - np.sqrt(m / (m + 1)) * out[m - 1]
    return out


def hermite_nodes_weights(n: int, scaling: float = 1.0):
    """Nodes and modified Gauss-Hermite weights of the ``n``-point rule.

    The nodes are the zeros of ``phi_n`` (computed as eigenvalues of the
    symmetric Jacobi matrix of the recurrence) and the weights are the
    modified ones for integrating plain (not Gaussian-weighted)
    functions: ``w_j = 1 / sum_{m<n} phi_m(x_j)^2``.  With the dilated
    basis ``phi_n^s(x) = sqrt(s) phi_n(s x)`` the rule becomes
    ``(x_j / s, w_j / s)``.

    Returns (nodes, weights), nodes ascending and exactly antisymmetric.
    """
    if n < 1:
        raise ValueError("need at least one node")
    if scaling <= 0:
        raise ValueError("scaling must be positive")
    if n == 1:
        nodes = np.zeros(1)
        weights = np.array([np.sqrt(np.pi)])
    else:
        offdiag = np.sqrt(np.arange(1, n) / 2.0)
        nodes = eigh_tridiagonal(np.zeros(n), offdiag, eigvals_only=True)
        nodes = 0.5 * (nodes - nodes[::-1])  # enforce x_j = -x_{n-1-j} exactly
        phi = hermite_eval_all(n, nodes)
        weights = 1.0 / np.sum(phi * phi, axis=0)
        weights = 0.5 * (weights + weights[::-1])
    if not np.all(np.isfinite(weights)):
        raise ArithmeticError("Hermite weight computation lost precision; reduce n")
    return nodes / scaling, weights / scaling


def fourier_wavenumbers(n: int, interval) -> np.ndarray:
    """Wavenumbers ``k_j = 2 pi j / |I|`` in standard FFT ordering."""
    x_min, x_max = interval
    if n < 2:
        raise ValueError("need at least two modes")
    if not x_max > x_min:
        raise ValueError(f"degenerate interval {interval!r}")
    length = x_max - x_min
    j = np.fft.fftfreq(n, d=1.0 / n)  # integer mode indices 0..n/2-1, -n/2..-1
    return 2.0 * np.pi * j / length


@dataclass(frozen=True)
class FourierBasis:
    """Equispaced periodic grid with ``n`` modes on ``[x_min, x_max)``."""

    n: int
    interval: tuple[float, float]
    nodes: np.ndarray = field(init=False, repr=False, compare=False)
    wavenumbers: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        x_min, x_max = self.interval
        if self.n < 2:
            raise ValueError("need at least two modes")
        if not x_max > x_min:
            raise ValueError(f"degenerate interval {self.interval!r}")
        nodes = x_min + (x_max - x_min) * np.arange(self.n) / self.n
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "wavenumbers", fourier_wavenumbers(self.n, self.interval))

    @property
    def length(self) -> float:
        return self.interval[1] - self.interval[0]

    @property
    def dx(self) -> float:
        return self.length / self.n

    @property
    def quadrature_weights(self) -> np.ndarray:
        # periodic rectangle rule; spectrally accurate for smooth periodic integrands
        return np.full(self.n, self.dx)

    def forward(self, values: np.ndarray) -> np.ndarray:
        """Grid values -> spectral coefficients (unitary convention)."""
        if values.shape[-1] != self.n:
            raise ValueError(f"expected {self.n} values, got {values.shape[-1]}")
        return np.fft.fft(values, norm="ortho")

    def inverse(self, coeffs: np.ndarray) -> np.ndarray:
        if coeffs.shape[-1] != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {coeffs.shape[-1]}")
        return np.fft.ifft(coeffs, norm="ortho")


@dataclass(frozen=True)
class HermiteBasis:
    """Gauss-Hermite collocation with ``n`` dilated Hermite functions.

    ``scaling`` contracts the nodes (``x_j / s``) and dilates the basis
    functions (``sqrt(s) phi_n(s x)``), preserving orthonormality on the
    real line.  The discrete Hermite transform (DHT) maps grid values at
    the nodes to coefficients through the modified quadrature weights;
    DHT o IDHT is the identity on coefficient space because the
    ``n``-point rule integrates products ``phi_m phi_n`` (m, n < n)
    exactly.
    """

    n: int
    scaling: float = 1.0
    nodes: np.ndarray = field(init=False, repr=False, compare=False)
    weights: np.ndarray = field(init=False, repr=False, compare=False)
    dht_matrix: np.ndarray = field(init=False, repr=False, compare=False)
    idht_matrix: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("basis dimension must be positive")
        if self.scaling <= 0:
            raise ValueError("scaling must be positive")
        raw_nodes, raw_weights = hermite_nodes_weights(self.n)
        phi = np.sqrt(self.scaling) * hermite_eval_all(self.n, raw_nodes)
        object.__setattr__(self, "nodes", raw_nodes / self.scaling)
        object.__setattr__(self, "weights", raw_weights / self.scaling)
        object.__setattr__(self, "dht_matrix", phi * self.weights[None, :])
        object.__setattr__(self, "idht_matrix", phi.T.copy())

    @property
    def quadrature_weights(self) -> np.ndarray:
        return self.weights

    def forward(self, values: np.ndarray) -> np.ndarray:
        """Grid values -> Hermite coefficients u~_n = sum_j w_j u(x_j) phi_n(x_j)."""
        if values.shape[-1] != self.n:
            raise ValueError(f"expected {self.n} values, got {values.shape[-1]}")
        return self.dht_matrix @ values

    def inverse(self, coeffs: np.ndarray) -> np.ndarray:
        if coeffs.shape[-1] != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {coeffs.shape[-1]}")
        return self.idht_matrix @ coeffs


Basis = FourierBasis | HermiteBasis


@dataclass
class Field:
    """Complex state sampled on the collocation nodes of a basis."""

    values: np.ndarray
    basis: Basis

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape != (self.basis.n,):
            raise ValueError(
                f"field length {self.values.shape} does not match basis size {self.basis.n}"
            )

    @property
    def finite(self) -> bool:
        return bool(np.all(np.isfinite(self.values.view(float))))

    def copy(self) -> "Field":
        return Field(self.values.copy(), self.basis)


def two_thirds_mask(basis: FourierBasis) -> np.ndarray:
    """Boolean mask of the modes kept by the 2/3 dealiasing rule.

    Keeps |j| <= N/3 in FFT ordering; applying it after every nonlinear
    substep removes the aliasing images of quadratic/cubic products.
    Off by default everywhere (the benchmark experiments run unfiltered).
    """
    j = np.fft.fftfreq(basis.n, d=1.0 / basis.n)
    return np.abs(j) <= basis.n / 3.0


def fourier_forward(fld: Field) -> np.ndarray:
    if not isinstance(fld.basis, FourierBasis):
        raise TypeError("field is not on a Fourier basis")
    return fld.basis.forward(fld.values)


def fourier_inverse(coeffs: np.ndarray, basis: FourierBasis) -> Field:
    return Field(basis.inverse(np.asarray(coeffs, dtype=complex)), basis)


def dht_forward(fld: Field) -> np.ndarray:
    if not isinstance(fld.basis, HermiteBasis):
        raise TypeError("field is not on a Hermite basis")
    return fld.basis.forward(fld.values)


def dht_inverse(coeffs: np.ndarray, basis: HermiteBasis) -> Field:
    return Field(basis.inverse(np.asarray(coeffs, dtype=complex)), basis)
