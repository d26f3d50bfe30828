"""
EXPLICACIÓN: Pruebas de gamma, binomial generalizado, regla de la
potencia y Mittag-Leffler contra valores cerrados conocidos.
"""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import special

from domain.exceptions import ConvergenceError, FractionalDomainError, PoleError
from domain.special_functions import (
    gamma,
    gen_binomial,
    mittag_leffler,
    mittag_leffler_relaxation,
    power_rule_factor,
)


def test_gamma_half_is_sqrt_pi():
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


@pytest.mark.parametrize('z', [0, -1, -2.0, -7])
def test_gamma_poles(z):
    with pytest.raises(PoleError):
        gamma(z)


@given(st.floats(min_value=0, max_value=3), st.integers(min_value=0, max_value=8))
def test_gen_binomial_matches_gamma_ratio(alpha, k):
    expected = special.binom(alpha, k)
    assert gen_binomial(alpha, k) == pytest.approx(expected, rel=1e-9, abs=1e-12)


def test_gen_binomial_integer_alpha_vanishes_past_alpha():
    assert gen_binomial(2, 3) == 0.0
    with pytest.raises(ValueError):
        gen_binomial(0.5, -1)


def test_power_rule_factor():
    # D^{1/2} t^{1/2} = Γ(3/2)
    assert power_rule_factor(0.5, 0.5) == pytest.approx(gamma(1.5), rel=1e-14)
    assert power_rule_factor(2.0, 1.0) == pytest.approx(2.0)
    # Integral de orden 1 de t: t^2/2
    assert power_rule_factor(1.0, -1.0) == pytest.approx(0.5)


def test_power_rule_factor_pole():
    with pytest.raises(FractionalDomainError):
        power_rule_factor(-0.5, 0.5)


@given(st.floats(min_value=-3, max_value=9.5))
def test_mittag_leffler_order_one_is_exp(z):
    assert mittag_leffler(1.0, z) == pytest.approx(math.exp(z), rel=1e-10, abs=1e-12)


def test_mittag_leffler_half_closed_form():
    expected = math.e * (1.0 + math.erf(1.0))
    assert mittag_leffler(0.5, 1.0) == pytest.approx(expected, rel=1e-10)


def test_mittag_leffler_at_zero():
    assert mittag_leffler(0.3, 0.0) == 1.0


def test_mittag_leffler_outside_radius():
    with pytest.raises(ConvergenceError):
        mittag_leffler(0.5, 11.0)


def test_relaxation_starts_at_one_and_decays():
    times = np.linspace(0.0, 2.0, 21)
    values = mittag_leffler_relaxation(0.7, -1.0, times)
    assert values[0] == 1.0
    assert np.all(np.diff(values) < 0)
