import numpy as np
import pytest

import splitwave as sw
from splitwave.errors import NoConvergenceError
from splitwave.stationary import GroundStateProblem, default_initial_guess


def small_problem(alpha, omega=1.0, tolerance=1e-12):
    basis = sw.FourierBasis(2**11, (-80.0, 80.0))
    return GroundStateProblem(alpha=alpha, omega=omega, basis=basis,
                              tolerance=tolerance)


class TestResidual:
    def test_zero_field(self):
        prob = small_problem(1.5)
        assert np.all(sw.ground_state_residual(np.zeros(prob.basis.n), prob) == 0)

    def test_sech_is_classical_ground_state(self):
        basis = sw.FourierBasis(2**13, (-150.0, 150.0))
        prob = GroundStateProblem(alpha=2.0, omega=0.5, basis=basis)
        psi = 1.0 / np.cosh(basis.nodes)
        assert np.max(np.abs(sw.ground_state_residual(psi, prob))) < 1e-9

    def test_scaled_sech_family(self):
        # eta sech(eta x) solves the alpha = 2 problem with omega = eta^2 / 2
        basis = sw.FourierBasis(2**12, (-100.0, 100.0))
        eta = 1.3
        prob = GroundStateProblem(alpha=2.0, omega=eta**2 / 2, basis=basis)
        psi = eta / np.cosh(eta * basis.nodes)
        assert np.max(np.abs(sw.ground_state_residual(psi, prob))) < 1e-9

    def test_cubic_term_breaks_scaling(self):
        prob = small_problem(1.5)
        psi = default_initial_guess(prob)
        doubled = sw.ground_state_residual(2.0 * psi, prob)
        assert np.max(np.abs(doubled - 2.0 * sw.ground_state_residual(psi, prob))) > 1e-3

    def test_parameter_validation(self):
        basis = sw.FourierBasis(64, (-10.0, 10.0))
        with pytest.raises(ValueError):
            GroundStateProblem(alpha=0.9, omega=1.0, basis=basis)
        with pytest.raises(ValueError):
            GroundStateProblem(alpha=2.0, omega=-1.0, basis=basis)


class TestSolver:
    def test_classical_limit_recovers_sech(self):
        basis = sw.FourierBasis(2**12, (-100.0, 100.0))
        prob = GroundStateProblem(alpha=2.0, omega=0.5, basis=basis)
        fld = sw.solve_ground_state(prob)
        psi = fld.values.real
        assert np.max(np.abs(psi - 1.0 / np.cosh(basis.nodes))) < 1e-8
        assert np.max(np.abs(sw.ground_state_residual(psi, prob))) <= 1e-12

    def test_fractional_state_properties(self):
        prob = small_problem(1.6)
        fld = sw.solve_ground_state(prob)
        psi = fld.values.real
        assert np.max(np.abs(sw.ground_state_residual(psi, prob))) <= 1e-12
        # even, positive at the origin
        mirror = np.concatenate((psi[:1], psi[1:][::-1]))
        assert np.max(np.abs(psi - mirror)) < 1e-10
        assert psi[np.argmin(np.abs(prob.basis.nodes))] > 0

    def test_taller_peak_for_smaller_alpha(self):
        peak = {}
        for alpha in (2.0, 1.4):
            prob = small_problem(alpha)
            psi = sw.solve_ground_state(prob).values.real
            peak[alpha] = psi.max()
        assert peak[1.4] > peak[2.0]

    def test_algebraic_vs_exponential_tails(self):
        x_probe = (30.0, 60.0)
        tails = {}
        for alpha in (2.0, 1.4):
            prob = small_problem(alpha)
            psi = np.abs(sw.solve_ground_state(prob).values.real)
            nodes = prob.basis.nodes
            tails[alpha] = [psi[np.argmin(np.abs(nodes - xp))] for xp in x_probe]
        # fractional tails are fat (algebraic), classical ones are dead by x = 30
        assert tails[1.4][0] > 1e-6 and tails[1.4][1] > 1e-7
        assert tails[2.0][0] < 1e-12
        # log-log slope of the algebraic tail is close to -(1 + alpha)
        prob = small_problem(1.4)
        psi = np.abs(sw.solve_ground_state(prob).values.real)
        nodes = prob.basis.nodes
        sel = (nodes > 25.0) & (nodes < 70.0)
        slope = np.polyfit(np.log(nodes[sel]), np.log(psi[sel]), 1)[0]
        assert -3.2 < slope < -1.6

    def test_custom_initial_guess_used(self):
        prob = small_problem(2.0, omega=0.5)
        guess = 1.05 / np.cosh(prob.basis.nodes)
        fld = sw.solve_ground_state(prob, initial_guess=guess)
        assert np.max(np.abs(fld.values.real - 1.0 / np.cosh(prob.basis.nodes))) < 1e-8

    def test_no_convergence_reports_best_residual(self):
        basis = sw.FourierBasis(256, (-30.0, 30.0))
        prob = GroundStateProblem(alpha=1.8, omega=1.0, basis=basis,
                                  tolerance=1e-16, max_newton=5)
        with pytest.raises(NoConvergenceError) as info:
            sw.solve_ground_state(prob)
        assert info.value.best_residual is not None
        assert info.value.best_residual > 0


class TestStandingWaveEvolution:
    def test_modulus_preserved_under_evolution(self):
        # evolving psi e^{i omega t} under the focusing fractional equation
        # leaves the modulus fixed
        from splitwave.propagators import LinearFlow

        basis = sw.FourierBasis(2**11, (-80.0, 80.0))
        prob = GroundStateProblem(alpha=1.6, omega=1.0, basis=basis)
        psi = sw.solve_ground_state(prob)
        model = sw.fnlse3(alpha=1.6)
        flow = LinearFlow(sw.linear_symbol(model), basis)
        phi_b = sw.nonlinear_flow(model)
        final, record = sw.evolve(sw.get_scheme("affine6"), flow.apply, phi_b,
                                  0.01, 1.0, psi)
        assert record.completed
        assert np.max(np.abs(np.abs(final.values) - np.abs(psi.values))) < 1e-7


class TestBoundaryCheck:
    def test_warns_on_fat_tail_at_boundary(self):
        prob = small_problem(1.4)
        with pytest.warns(RuntimeWarning, match="boundary"):
            sw.solve_ground_state(prob)

    def test_silent_for_exponential_tails(self, recwarn):
        prob = small_problem(2.0, omega=0.5)
        sw.solve_ground_state(prob)
        assert not [w for w in recwarn if issubclass(w.category, RuntimeWarning)]
