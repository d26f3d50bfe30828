"""
EXPLICACIÓN: Pruebas del integrador: soluciones exactas conocidas,
orden de convergencia, permutación de componentes, ventana de memoria
y referencia RK4.
"""

import math

import numpy as np
import pytest

from domain.entities.ivp import FractionalIVP, SolverConfig, SolverMethod
from domain.exceptions import ConfigurationError, FractionalDomainError, ShapeError, SolverAbort
from domain.special_functions import gamma, mittag_leffler, mittag_leffler_relaxation


def _relaxation(alpha=0.5, horizon=1.0):
    return FractionalIVP((alpha,), lambda y: -y, (1.0,), horizon)


def _power(alpha):
    constant = gamma(1.0 + alpha)
    return FractionalIVP((alpha,), lambda y: np.array([constant]), (0.0,), 1.0)


def _coupled():
    def rhs(state):
        return np.array([-state[0] + 0.5 * state[1], -0.3 * state[1] * state[2], 0.2 * state[0]])
    return FractionalIVP((0.5, 0.8, 1.0), rhs, (1.0, 0.5, 2.0), 1.0)


def test_abm_matches_mittag_leffler(solver):
    trajectory = solver.solve(_relaxation(), SolverConfig(1e-3))
    exact = np.array([mittag_leffler(0.5, -t ** 0.5) for t in trajectory.times])
    assert np.max(np.abs(trajectory.component(0) - exact)) <= 1e-3


@pytest.mark.parametrize('alpha', [0.3, 0.5, 0.8])
def test_abm_reproduces_power_solution(solver, alpha):
    trajectory = solver.solve(_power(alpha), SolverConfig(0.01))
    np.testing.assert_allclose(trajectory.component(0), trajectory.times ** alpha, atol=1e-8)


def test_frac_euler_approximates_power_solution(solver):
    trajectory = solver.solve(_power(0.5), SolverConfig(1e-3, SolverMethod.FRAC_EULER))
    assert np.max(np.abs(trajectory.component(0) - trajectory.times ** 0.5)) <= 1e-2
    assert trajectory.method == 'frac-euler'


def test_trajectory_layout(solver):
    trajectory = solver.solve(_coupled(), SolverConfig(0.01))
    assert trajectory.states.shape == (101, 3)
    assert trajectory.final_time == pytest.approx(1.0)
    np.testing.assert_allclose(trajectory.states[0], [1.0, 0.5, 2.0])
    assert trajectory.orders == (0.5, 0.8, 1.0)
    summary = solver.summary(trajectory)
    assert summary['steps'] == 100
    assert len(summary['final_state']) == 3


@pytest.mark.parametrize('permutation', [[2, 0, 1], [1, 0, 2], [2, 1, 0]])
@pytest.mark.parametrize('method', list(SolverMethod))
def test_permuting_components_permutes_solution(solver, permutation, method):
    ivp = _coupled()
    config = SolverConfig(0.01, method)
    original = solver.solve(ivp, config)
    permuted = solver.solve(ivp.permuted(permutation), config)
    np.testing.assert_allclose(permuted.states, original.states[:, permutation], rtol=1e-12, atol=1e-14)


def test_large_memory_window_changes_nothing(solver):
    ivp = _coupled()
    unbounded = solver.solve(ivp, SolverConfig(0.01))
    windowed = solver.solve(ivp, SolverConfig(0.01, memory_window=10 ** 6))
    assert np.array_equal(windowed.states, unbounded.states)


def test_short_memory_window_only_changes_late_steps(solver):
    ivp = _relaxation()
    unbounded = solver.solve(ivp, SolverConfig(0.01))
    windowed = solver.solve(ivp, SolverConfig(0.01, memory_window=50))
    assert np.array_equal(windowed.states[:51], unbounded.states[:51])
    assert not np.array_equal(windowed.states, unbounded.states)
    assert np.all(np.isfinite(windowed.states))


def test_exact_solutions_report_exact_convergence(solver):
    rows = solver.convergence_report(_power(0.5), SolverConfig(0.01), refinements=2,
                                     exact=lambda t: np.array([t ** 0.5]))
    assert len(rows) == 3
    assert rows[0].observed_order is None
    assert all(row.is_exact for row in rows[1:])
    assert math.isinf(solver.minimum_order(rows))


def test_classical_abm_is_second_order(solver):
    ivp = FractionalIVP((1.0,), lambda y: -y, (1.0,), 1.0)
    rows = solver.convergence_report(ivp, SolverConfig(0.05), refinements=3)
    assert len(rows) == 3
    assert solver.minimum_order(rows) > 1.5


def _relaxation_exact(t):
    return mittag_leffler_relaxation(0.5, -1.0, np.array([t]))


def test_abm_order_against_mittag_leffler_relaxation(solver):
    rows = solver.convergence_report(_relaxation(), SolverConfig(0.02), refinements=3, exact=_relaxation_exact)
    assert rows[-1].error <= 1e-3
    assert solver.minimum_order(rows) >= 1.0


def test_frac_euler_order_against_mittag_leffler_relaxation(solver):
    rows = solver.convergence_report(_relaxation(), SolverConfig(0.02, SolverMethod.FRAC_EULER),
                                     refinements=3, exact=_relaxation_exact)
    assert solver.minimum_order(rows) >= 0.4


def test_convergence_report_needs_refinements(solver):
    with pytest.raises(ValueError):
        solver.convergence_report(_power(0.5), SolverConfig(0.01), refinements=1)


def test_rk4_reference(solver):
    growth = FractionalIVP((1.0,), lambda y: y, (1.0,), 1.0)
    trajectory = solver.rk4_reference(growth, 1e-3)
    assert trajectory.final_state[0] == pytest.approx(math.e, abs=1e-8)
    assert trajectory.method == 'rk4'


def test_rk4_reference_rejects_fractional_orders(solver):
    with pytest.raises(FractionalDomainError):
        solver.rk4_reference(_relaxation(), 1e-3)


def test_step_must_divide_horizon(solver):
    with pytest.raises(ConfigurationError):
        solver.solve(_relaxation(), SolverConfig(0.3))


def test_non_finite_right_hand_side_aborts(solver):
    ivp = FractionalIVP((0.5,), lambda y: np.array([np.inf]), (1.0,), 1.0)
    with pytest.raises(SolverAbort) as excinfo:
        solver.solve(ivp, SolverConfig(0.1))
    assert excinfo.value.step_index == 0


def test_domain_failure_in_right_hand_side_aborts(solver):
    def rhs(state):
        raise FractionalDomainError("negative coordinate")

    with pytest.raises(SolverAbort):
        solver.solve(FractionalIVP((0.5,), rhs, (1.0,), 1.0), SolverConfig(0.1))


def test_right_hand_side_shape_is_checked(solver):
    ivp = FractionalIVP((0.5, 0.5), lambda y: np.zeros(3), (1.0, 1.0), 1.0)
    with pytest.raises(ShapeError):
        solver.solve(ivp, SolverConfig(0.1))


def test_mixed_system_solution_shape(solver, catalog):
    system = catalog.build('algebroid-mb', 0.7, 0.9)
    trajectory = solver.solve_mixed(system, SolverConfig(0.01), horizon=0.5,
                                    initial_state=(0.0, 1.0, 1.0, 0.0, 1.0, 1.0))
    assert trajectory.states.shape == (51, 6)
    assert trajectory.variables == ('x1', 'x2', 'x3', 'xi1', 'xi2', 'xi3')
    assert trajectory.orders == (0.7,) * 3 + (0.9,) * 3


@pytest.mark.slow
def test_classical_maxwell_bloch_matches_rk4(solver, catalog):
    ivp = solver.ivp_from_system(catalog.build('maxwell-bloch-frac', 1.0), 5.0, (1.0, 0.5, 0.5))
    reference = solver.rk4_reference(ivp, 1e-3)
    assert solver.solve(ivp, SolverConfig(1e-3)).sup_distance(reference) <= 1e-3


@pytest.mark.slow
def test_classical_algebroid_system_matches_rk4(solver, catalog):
    ivp = solver.ivp_from_mixed(catalog.build('algebroid-mb', 1.0, 1.0), 2.0)
    reference = solver.rk4_reference(ivp, 1e-3)
    assert solver.solve(ivp, SolverConfig(1e-3)).sup_distance(reference) <= 1e-4
