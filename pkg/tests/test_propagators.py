import numpy as np
import pytest

import splitwave as sw
from splitwave.errors import BlowUpError
from splitwave.ode import RKConfig
from splitwave.propagators import LinearFlow, NonlinearParams


def symbol_of(fn, **meta):
    return sw.LinearSymbol(fn, **meta)


class TestAMatrix:
    def test_identity_symbol(self):
        basis = sw.HermiteBasis(8)
        a = sw.build_a_matrix(symbol_of(lambda k: np.ones_like(k, dtype=complex)), basis)
        assert np.max(np.abs(a - np.eye(8))) < 1e-13

    def test_k_squared_small(self):
        basis = sw.HermiteBasis(2)
        a = sw.build_a_matrix(symbol_of(lambda k: k.astype(complex) ** 2), basis)
        assert np.allclose(a, np.diag([0.5, 1.5]), atol=1e-14)

    def test_k_symbol_small(self):
        basis = sw.HermiteBasis(2)
        a = sw.build_a_matrix(symbol_of(lambda k: k.astype(complex)), basis)
        expected = np.array([[0.0, -1j / np.sqrt(2)], [1j / np.sqrt(2), 0.0]])
        assert np.allclose(a, expected, atol=1e-14)

    def test_k_squared_matches_ladder_elements(self):
        # analytic <m|k^2|n>: diagonal n + 1/2, second off-diagonals
        # sqrt((n+1)(n+2))/2 with the (-i)^(n-m) phase turning them negative
        n = 12
        basis = sw.HermiteBasis(n)
        a = sw.build_a_matrix(symbol_of(lambda k: k.astype(complex) ** 2), basis)
        expected = np.zeros((n, n), dtype=complex)
        for m in range(n):
            expected[m, m] = m + 0.5
            if m + 2 < n:
                off = np.sqrt((m + 1) * (m + 2)) / 2.0
                expected[m, m + 2] = -off
                expected[m + 2, m] = -off
        assert np.max(np.abs(a - expected)) < 1e-12

    def test_hermitian_for_real_symbol(self):
        basis = sw.HermiteBasis(40)
        a = sw.build_a_matrix(symbol_of(lambda k: np.abs(k) ** 1.5 + 0j), basis)
        assert np.max(np.abs(a - a.conj().T)) < 1e-13

    def test_scaling_enters_through_symbol(self):
        # with |k|^2 the dilated operator picks up a factor s^2 on the quadrature
        basis1 = sw.HermiteBasis(10, scaling=1.0)
        basis2 = sw.HermiteBasis(10, scaling=1.5)
        sym = symbol_of(lambda k: k.astype(complex) ** 2)
        a1 = sw.build_a_matrix(sym, basis1)
        a2 = sw.build_a_matrix(sym, basis2)
        assert np.allclose(a2, 1.5**2 * a1, rtol=1e-12)


class TestMatrixExponential:
    def test_diagonal(self):
        m = np.diag([0.3, -1.2 + 0.5j])
        assert np.allclose(sw.matrix_exponential(m),
                           np.diag(np.exp([0.3, -1.2 + 0.5j])), rtol=1e-14)

    def test_nilpotent(self):
        m = np.array([[0.0, 1.0], [0.0, 0.0]])
        assert np.allclose(sw.matrix_exponential(m), [[1.0, 1.0], [0.0, 1.0]], atol=1e-15)

    def test_against_power_series(self):
        rng = np.random.default_rng(42)
        m = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        series = np.eye(2, dtype=complex)
        term = np.eye(2, dtype=complex)
        for k in range(1, 60):
            term = term @ m / k
            series = series + term
        assert np.max(np.abs(sw.matrix_exponential(m) - series)) < 1e-12

    def test_group_property_large_norm(self):
        rng = np.random.default_rng(1)
        m = rng.standard_normal((6, 6))
        m *= 100.0 / np.linalg.norm(m)
        half = sw.matrix_exponential(m / 2)
        assert np.allclose(half @ half, sw.matrix_exponential(m), rtol=1e-9)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            sw.matrix_exponential(np.ones((2, 3)))
        with pytest.raises(ValueError):
            sw.matrix_exponential(np.array([[np.inf, 0], [0, 1.0]]))


class TestLinearStep:
    def test_single_mode_phase(self):
        basis = sw.FourierBasis(64, (-np.pi, np.pi))
        sym = symbol_of(lambda k: 0.5 * k.astype(complex) ** 2)
        u = np.exp(1j * basis.nodes)
        out = sw.linear_step(sw.Field(u, basis), sym, 0.3)
        assert np.max(np.abs(out.values - np.exp(-0.3j / 2) * u)) < 1e-13

    def test_zero_mode_untouched(self):
        basis = sw.FourierBasis(32, (-2.0, 2.0))
        sym = symbol_of(lambda k: np.abs(k) ** 1.5 + 0j)
        u = np.full(32, 1.7 - 0.4j)
        out = sw.linear_step(sw.Field(u, basis), sym, 1.1)
        assert np.max(np.abs(out.values - u)) < 1e-14

    def test_fourier_table_moduli(self):
        basis = sw.FourierBasis(128, (-20.0, 20.0))
        real_sym = symbol_of(lambda k: 0.5 * np.abs(k) ** 2 + 0j)
        flow = LinearFlow(real_sym, basis)
        assert np.max(np.abs(np.abs(flow.propagator(0.2)) - 1.0)) < 1e-14
        diss = symbol_of(lambda k: (0.5 - 0.25j) * np.abs(k) ** 1.8 - 0.2j,
                         alpha=1.8, beta=0.25, delta=-0.2)
        table = LinearFlow(diss, basis).propagator(0.2)
        assert np.all(np.abs(table) <= 1.0 + 1e-15)

    def test_dissipative_contraction(self):
        rng = np.random.default_rng(0)
        basis = sw.FourierBasis(128, (-20.0, 20.0))
        sym = symbol_of(lambda k: (0.5 - 0.3j) * np.abs(k) ** 1.6, beta=0.3)
        u = rng.standard_normal(128) + 1j * rng.standard_normal(128)
        out = sw.linear_step(sw.Field(u, basis), sym, 0.4)
        assert np.linalg.norm(out.values) <= np.linalg.norm(u)

    def test_hermite_l2_preservation(self):
        basis = sw.HermiteBasis(200)
        sym = symbol_of(lambda k: 0.5 * k.astype(complex) ** 2)
        flow = LinearFlow(sym, basis)
        rng = np.random.default_rng(2)
        u = rng.standard_normal(200) + 1j * rng.standard_normal(200)
        out = flow.apply(u, 0.37)
        n0 = np.sum(basis.weights * np.abs(u) ** 2)
        n1 = np.sum(basis.weights * np.abs(out) ** 2)
        assert abs(n1 / n0 - 1.0) < 1e-12

    @pytest.mark.parametrize("make_basis", [
        lambda: sw.FourierBasis(128, (-15.0, 15.0)),
        lambda: sw.HermiteBasis(96),
    ])
    def test_semigroup(self, make_basis):
        basis = make_basis()
        sym = symbol_of(lambda k: 0.5 * np.abs(k) ** 1.7 + 0j)
        flow = LinearFlow(sym, basis)
        rng = np.random.default_rng(3)
        u = rng.standard_normal(basis.n) + 1j * rng.standard_normal(basis.n)
        two_steps = flow.apply(flow.apply(u, 0.2), 0.1)
        one_step = flow.apply(u, 0.2 + 0.1)
        assert np.max(np.abs(two_steps - one_step)) < 1e-10

    def test_propagator_cache_reused(self):
        basis = sw.FourierBasis(64, (-5.0, 5.0))
        flow = LinearFlow(symbol_of(lambda k: k.astype(complex) ** 2), basis)
        t1 = flow.propagator(0.125)
        t2 = flow.propagator(0.125)
        assert t1 is t2

    def test_fourier_hermite_agreement_free_gaussian(self):
        # i u_t = (1/2)(-u_xx), u0 = exp(-x^2/2):
        # u(x, t) = (1 + i t)^(-1/2) exp(-x^2 / (2 (1 + i t)))
        t = 0.5
        sym = symbol_of(lambda k: 0.5 * k.astype(complex) ** 2)
        exact = lambda x: (1 + 1j * t) ** -0.5 * np.exp(-x**2 / (2 * (1 + 1j * t)))

        fb = sw.FourierBasis(2**10, (-40.0, 40.0))
        uf = sw.linear_step(sw.Field(np.exp(-fb.nodes**2 / 2) + 0j, fb), sym, t)
        err_f = np.max(np.abs(uf.values - exact(fb.nodes)))

        hb = sw.HermiteBasis(200)
        uh = LinearFlow(sym, hb).apply(np.exp(-hb.nodes**2 / 2) + 0j, t)
        err_h = np.max(np.abs(uh - exact(hb.nodes)))
        assert err_f < 1e-6 and err_h < 1e-6


class TestNonlinearSteps:
    def test_cubic_modulus_preserved(self):
        rng = np.random.default_rng(4)
        u = rng.standard_normal(50) + 1j * rng.standard_normal(50)
        out = sw.nlse_cubic_step(u, -1, 0.7)
        assert np.max(np.abs(np.abs(out) - np.abs(u))) < 1e-14

    def test_cubic_constant_closed_form(self):
        u = np.full(4, 1.3 + 0.0j)
        out = sw.nlse_cubic_step(u, 1, 0.25)
        assert np.allclose(out, 1.3 * np.exp(-1j * 1.3**2 * 0.25), rtol=1e-14)

    def test_cubic_vs_rk_oracle(self):
        rng = np.random.default_rng(5)
        u = rng.standard_normal(12) + 1j * rng.standard_normal(12)
        dt = 0.35
        exact = sw.nlse_cubic_step(u, -1, dt)
        rhs = lambda t, y: 1j * np.abs(y) ** 2 * y  # i u' = -|u|^2 u (focusing)
        numeric = sw.rk853_integrate(rhs, u, (0.0, dt))
        assert np.max(np.abs(exact - numeric)) < 1e-12

    def test_cgle_modulus_law(self):
        u = np.array([1.0 + 0.0j])
        out = sw.cgle_cubic_step(u, -1.0, 1.7, 0.1)
        assert abs(out[0]) ** 2 == pytest.approx(1.0 / (1.0 - 0.34), rel=1e-13)

    def test_cgle_vs_rk_oracle(self):
        rng = np.random.default_rng(6)
        u = 0.8 * (rng.standard_normal(10) + 1j * rng.standard_normal(10))
        gamma, eps = -1.0, 1.7
        dt = 0.5 / (2 * eps * np.max(np.abs(u)) ** 2)  # half the blow-up bound
        exact = sw.cgle_cubic_step(u, gamma, eps, dt)
        rhs = lambda t, y: -1j * (gamma + 1j * eps) * np.abs(y) ** 2 * y
        numeric = sw.rk853_integrate(rhs, u, (0.0, dt))
        assert np.max(np.abs(exact - numeric)) < 1e-11

    def test_cgle_blowup_bound(self):
        u = np.full(3, 1.2 + 0.0j)
        bound = 1.0 / (2 * 1.7 * 1.2**2)
        assert bound == pytest.approx(0.2042, abs=1e-4)
        sw.cgle_cubic_step(u, -1.0, 1.7, 0.9 * bound)  # inside the bound: fine
        with pytest.raises(BlowUpError):
            sw.cgle_cubic_step(u, -1.0, 1.7, 0.25)

    def test_cgle_epsilon_to_zero_limit(self):
        u = np.array([0.9 - 0.3j, 0.2 + 0.1j])
        gamma, dt = -1.0, 0.2
        tiny = sw.cgle_cubic_step(u, gamma, 1e-9, dt)
        zero = sw.cgle_cubic_step(u, gamma, 0.0, dt)
        assert np.max(np.abs(tiny - zero)) < 1e-8

    def test_cgle_negative_dt_safe(self):
        u = np.array([1.5 + 0.5j])
        out = sw.cgle_cubic_step(u, -1.0, 1.7, -0.3)
        assert np.isfinite(out).all()
        assert abs(out[0]) < abs(u[0])  # backward gain flow contracts


class TestQuinticStep:
    def test_reduces_to_cubic(self):
        rng = np.random.default_rng(7)
        u = 0.9 * (rng.standard_normal(16) + 1j * rng.standard_normal(16))
        params = NonlinearParams(gamma=-1.0, epsilon=1.7)
        dt = 0.05
        numeric = sw.quintic_step_numeric(u, params, dt)
        exact = sw.cgle_cubic_step(u, -1.0, 1.7, dt)
        assert np.max(np.abs(numeric - exact)) < 1e-11

    def test_pure_quintic_decay_closed_form(self):
        # |u|^4(t) = |u0|^4 / (1 - 4 mu |u0|^4 t) for gamma = eps = nu = 0
        u = np.array([1.1 + 0.0j, 0.6 - 0.2j])
        mu, dt = -1.0, 0.3
        out = sw.quintic_step_numeric(u, NonlinearParams(mu=mu), dt)
        expected4 = np.abs(u) ** 4 / (1.0 - 4 * mu * np.abs(u) ** 4 * dt)
        assert np.allclose(np.abs(out) ** 4, expected4, rtol=1e-11)
        assert np.all(np.abs(out) < np.abs(u))

    def test_zero_fixed_point(self):
        u = np.zeros(5, dtype=complex)
        out = sw.quintic_step_numeric(u, NonlinearParams(gamma=-1, epsilon=1.7, mu=-1), 0.1)
        assert np.all(out == 0)

    def test_pointwise_locality_permutation(self):
        rng = np.random.default_rng(8)
        u = rng.standard_normal(32) + 1j * rng.standard_normal(32)
        params = NonlinearParams(gamma=-1.0, epsilon=1.7, nu=-0.115, mu=-1.0)
        perm = rng.permutation(32)
        direct = sw.quintic_step_numeric(u, params, 0.025)[perm]
        permuted = sw.quintic_step_numeric(u[perm], params, 0.025)
        assert np.array_equal(direct, permuted)

    def test_negative_dt_inverts(self):
        rng = np.random.default_rng(9)
        u = 0.7 * (rng.standard_normal(8) + 1j * rng.standard_normal(8))
        params = NonlinearParams(gamma=-1.0, epsilon=0.4, nu=-0.115, mu=-0.5)
        fwd = sw.quintic_step_numeric(u, params, 0.04)
        back = sw.quintic_step_numeric(fwd, params, -0.04)
        assert np.max(np.abs(back - u)) < 1e-10

    def test_include_delta_term(self):
        u = np.array([0.5 + 0.1j])
        params = NonlinearParams()
        out = sw.quintic_step_numeric(u, params, 0.2, include_delta=True, delta=-0.3)
        assert np.allclose(out, u * np.exp(-0.3 * 0.2), rtol=1e-12)
