"""
EXPLICACIÓN: Pruebas del oráculo de Grünwald-Letnikov.
"""

import numpy as np
import pytest

from domain.entities.grid import Grid1D, SampledFunction


def test_gl_weights(oracle):
    np.testing.assert_allclose(oracle.gl_weights(0.5, 4), [1.0, -0.5, -0.125, -0.0625])
    np.testing.assert_allclose(oracle.gl_weights(1.0, 4), [1.0, -1.0, 0.0, 0.0])
    with pytest.raises(ValueError):
        oracle.gl_weights(0.5, 0)


def test_constants_have_zero_derivative(oracle):
    grid = Grid1D.over(1.0, 0.01)
    constant = SampledFunction.sample(grid, lambda t: np.full_like(t, 3.0))
    np.testing.assert_allclose(oracle.gl_frac_derivative(constant, 0.6).values, 0.0)


def test_order_one_is_backward_difference(oracle):
    grid = Grid1D.over(1.0, 0.01)
    square = SampledFunction.sample(grid, lambda t: t ** 2)
    derivative = oracle.gl_frac_derivative(square, 1.0).values
    times = grid.times()
    np.testing.assert_allclose(derivative[1:], 2 * times[1:] - 0.01, atol=1e-10)


@pytest.mark.parametrize('gamma_exp, alpha', [(0.5, 0.3), (1.0, 0.5), (2.0, 0.8), (2.5, 0.5)])
def test_power_rule_agrees_with_oracle(oracle, gamma_exp, alpha):
    comparison = oracle.compare_power_rule(gamma_exp, alpha, step=1e-3)
    assert comparison.max_relative_error < 1e-2
    assert comparison.alpha == alpha


def test_oracle_error_shrinks_with_step(oracle):
    coarse = oracle.compare_power_rule(2.0, 0.5, step=1e-2)
    fine = oracle.compare_power_rule(2.0, 0.5, step=1e-3)
    assert fine.max_absolute_error < coarse.max_absolute_error
