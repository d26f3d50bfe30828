"""
EXPLICACIÓN: Pruebas de CalculusService: regla de la potencia, serie del
producto, Taylor fraccionario y emparejamiento.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domain.entities.polynomial import GenPolynomial
from domain.exceptions import FractionalDomainError, TruncationWarning
from domain.special_functions import gamma
from services.calculus_service import CalculusService

x1 = GenPolynomial.variable('x1')
x2 = GenPolynomial.variable('x2')
x3 = GenPolynomial.variable('x3')
t = GenPolynomial.variable('t')

orders = st.floats(min_value=0.05, max_value=1.0)


def test_partial_of_trilinear_monomial(calculus):
    result = calculus.frac_partial(x1 * x2 * x3, 'x1', 0.5)
    expected = GenPolynomial.variable('x1', 0.5, gamma(2.0) / gamma(1.5)) * x2 * x3
    assert result.is_close(expected)


@given(orders)
def test_partial_kills_constants(alpha):
    calculus = CalculusService()
    assert calculus.frac_partial(GenPolynomial.constant(7.0) + x2, 'x1', alpha).is_zero


@given(orders)
def test_partial_of_own_power_is_gamma(alpha):
    calculus = CalculusService()
    result = calculus.frac_partial(GenPolynomial.variable('x1', alpha), 'x1', alpha)
    assert result.is_constant
    assert result.constant_value == pytest.approx(gamma(1.0 + alpha), rel=1e-12)


@settings(max_examples=50)
@given(st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=3),
       st.floats(min_value=-5, max_value=5).filter(lambda c: abs(c) > 1e-3))
def test_order_one_is_classical_derivative(a, b, coeff):
    calculus = CalculusService()
    p = GenPolynomial.monomial(coeff, {'x1': a, 'x2': b}) + x1 * x3
    assert calculus.frac_partial(p, 'x1', 1.0).is_close(calculus.classical_partial(p, 'x1'))


def test_partial_rejects_negative_result_exponent(calculus):
    with pytest.raises(FractionalDomainError):
        calculus.frac_partial(GenPolynomial.variable('x1', 0.3), 'x1', 0.5)


def test_power_rule(calculus):
    coeff, exponent = calculus.power_rule(0.5, 0.5)
    assert coeff == pytest.approx(gamma(1.5))
    assert exponent == 0.0
    assert calculus.power_rule(0.0, 0.5) == (0.0, 0.0)


def test_fractional_integral_inverts_power_rule(calculus):
    p = GenPolynomial.variable('t', 1.5, 2.0)
    integrated = calculus.frac_antiderivative_power(p, 't', -0.5)
    assert calculus.frac_partial(integrated, 't', 0.5).is_close(p)


def test_classical_partial_repeated(calculus):
    assert calculus.classical_partial(x1 ** 3, 'x1', times=2).is_close(6 * x1)


@given(orders)
def test_product_series_is_exact_for_polynomial_factor(alpha):
    calculus = CalculusService()
    series = calculus.frac_product_series(t, t, 't', alpha)
    assert series.is_close(calculus.frac_partial(t * t, 't', alpha))


def test_product_series_splits_axis_constant(calculus):
    f = GenPolynomial.constant(2.0) + t
    h = t ** 2
    series = calculus.frac_product_series(f, h, 't', 0.4, split_axis_constant=True)
    assert series.is_close(calculus.frac_partial(f * h, 't', 0.4))


def test_product_series_with_fractional_factor_truncates(calculus):
    with pytest.warns(TruncationWarning):
        series = calculus.frac_product_series(t, GenPolynomial.variable('t', 0.5), 't', 0.5, max_terms=4)
    assert not series.is_zero
    assert [term.exponent('t') for term in series.terms] == [pytest.approx(1.0)]


def test_product_series_with_fractional_factor_approaches_direct(calculus):
    with pytest.warns(TruncationWarning):
        series = calculus.frac_product_series(t, GenPolynomial.variable('t', 0.5), 't', 0.5, max_terms=40)
    direct = calculus.frac_partial(GenPolynomial.variable('t', 1.5), 't', 0.5)
    assert series.is_close(direct, rtol=1e-2, atol=1e-3)


def test_product_series_truncation_warns(calculus):
    with pytest.warns(TruncationWarning):
        calculus.frac_product_series(GenPolynomial.variable('t', 0.5), t ** 5, 't', 0.5, max_terms=2)


@pytest.mark.parametrize('alpha', [0.25, 0.5, 0.8])
def test_fractional_taylor_round_trip(calculus, alpha):
    f = GenPolynomial.variable('t', 2 * alpha, 3.0) + GenPolynomial.variable('t', alpha) + 2.0
    coefficients = calculus.fractional_taylor(f, alpha, 2)
    assert coefficients[0] == pytest.approx(2.0)
    assert coefficients[1] == pytest.approx(gamma(1.0 + alpha))
    assert calculus.reconstruct_taylor(coefficients, alpha).is_close(f)


def test_fractional_taylor_rejects_bad_input(calculus):
    with pytest.raises(FractionalDomainError):
        calculus.fractional_taylor(x1 * x2, 0.5, 2)
    with pytest.raises(FractionalDomainError):
        calculus.fractional_taylor(GenPolynomial.variable('t', 0.7), 0.5, 2)


@pytest.mark.parametrize('alpha', [0.3, 1.0])
def test_pairing_basis_is_gamma_delta(calculus, alpha):
    variables = ('x1', 'x2', 'x3')
    for i in range(3):
        for j in range(3):
            value = calculus.pairing_basis(i, j, alpha, variables)
            expected = gamma(1.0 + alpha) if i == j else 0.0
            assert value.is_close(expected)


def test_pairing(calculus):
    omega = calculus.exterior_derivative(x1 * x2, 0.5, ('x1', 'x2'))
    result = calculus.pairing(omega, (GenPolynomial.constant(1.0), GenPolynomial.zero()), 0.5)
    # Γ(1+α)·Γ(2)/Γ(2-α) = 1 para α = 1/2
    expected = GenPolynomial.variable('x1', 0.5) * x2
    assert result.is_close(expected)
    with pytest.raises(ValueError):
        calculus.pairing(omega, (x1,), 0.5)


def test_mixed_exterior_derivative(calculus):
    h = GenPolynomial.variable('x1', 0.5) * GenPolynomial.variable('xi1', 0.8)
    dx, dxi = calculus.exterior_derivative_mixed(h, 0.5, 0.8, ('x1',), ('xi1',))
    assert dx[0].is_close(GenPolynomial.variable('xi1', 0.8, gamma(1.5)))
    assert dxi[0].is_close(GenPolynomial.variable('x1', 0.5, gamma(1.8)))


def test_service_validates_series_cap():
    with pytest.raises(ValueError):
        CalculusService(product_series_max_terms=0)
