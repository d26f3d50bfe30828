"""
EXPLICACIÓN: Pruebas de GenMonomial y GenPolynomial: forma canónica,
aritmética, evaluación e impresión.
"""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from domain.entities.polynomial import GenPolynomial
from domain.exceptions import FractionalDomainError, UnboundVariableError
from domain.value_objects.monomial import GenMonomial, variable_sort_key

x1 = GenPolynomial.variable('x1')
x2 = GenPolynomial.variable('x2')
x3 = GenPolynomial.variable('x3')

coefficients = st.floats(min_value=-10, max_value=10, allow_nan=False).filter(lambda c: abs(c) > 1e-3)
orders = st.floats(min_value=0.01, max_value=1.0)


class TestGenMonomial:

    def test_zero_coefficient_is_rejected(self):
        with pytest.raises(ValueError):
            GenMonomial(0.0, (('x1', 1.0),))

    def test_negative_exponent_is_rejected(self):
        with pytest.raises(FractionalDomainError):
            GenMonomial(1.0, (('x1', -0.5),))

    @given(orders)
    def test_exponent_arithmetic_canonicalises(self, alpha):
        monomial = GenMonomial(1.0, (('x1', 1.0 + alpha), ('x1', -alpha)))
        assert monomial.exponents == (('x1', 1.0),)

    def test_zero_exponents_are_dropped(self):
        assert GenMonomial(2.0, (('x1', 0.0),)).is_constant

    def test_natural_variable_order(self):
        names = ['x10', 'xi1', 'x2', 'x1']
        assert sorted(names, key=variable_sort_key) == ['x1', 'x2', 'x10', 'xi1']

    def test_evaluate(self):
        monomial = GenMonomial(3.0, (('x1', 0.5), ('x2', 2.0)))
        assert monomial.evaluate({'x1': 4.0, 'x2': -1.0}) == pytest.approx(6.0)

    def test_evaluate_errors(self):
        monomial = GenMonomial(1.0, (('x1', 0.5),))
        with pytest.raises(UnboundVariableError):
            monomial.evaluate({'x2': 1.0})
        with pytest.raises(FractionalDomainError):
            monomial.evaluate({'x1': -1.0})

    def test_str(self):
        assert str(GenMonomial(1.0, (('x1', 0.5), ('x2', 1.0)))) == 'x1^0.5*x2'
        assert str(GenMonomial(-1.0, (('x3', 1.0),))) == '-x3'
        assert str(GenMonomial(2.5, (('x1', 2.0),))) == '2.5*x1^2'
        assert str(GenMonomial(4.0)) == '4'


class TestGenPolynomial:

    def test_like_terms_merge_and_cancel(self):
        p = x1 * x2 + 2 * x1 * x2 - 3 * (x2 * x1)
        assert p.is_zero
        assert str(p) == '0'

    def test_constant_queries(self):
        p = GenPolynomial.constant(3.0) + x1
        assert not p.is_constant
        assert p.constant_value == 3.0
        assert GenPolynomial.constant(0).is_zero

    def test_variables_and_degree(self):
        p = x1 ** 2 * x3 + GenPolynomial.variable('x2', 0.5)
        assert p.variables == ('x1', 'x2', 'x3')
        assert p.degree('x1') == 2.0
        assert p.exponents_of('x2') == (0.0, 0.5)
        assert p.depends_on('x3')
        assert not p.depends_on('x4')

    def test_declared_variables_do_not_affect_equality(self):
        assert GenPolynomial.zero(('x1', 'x2')) == GenPolynomial.zero()
        assert x1.with_declared(('x5',)).declared == ('x1', 'x5')

    def test_power_accepts_only_integers(self):
        assert (x1 + 1) ** 2 == x1 ** 2 + 2 * x1 + 1
        with pytest.raises(FractionalDomainError):
            x1 ** 0.5

    @given(coefficients, coefficients, st.floats(min_value=0.1, max_value=3.0))
    def test_eval_is_a_ring_homomorphism(self, a, b, point):
        p = a * x1 + GenPolynomial.variable('x2', 0.5)
        q = b * x2 - 1
        values = {'x1': point, 'x2': point}
        assert (p * q).eval(values) == pytest.approx(p.eval(values) * q.eval(values), rel=1e-9, abs=1e-9)
        assert (p + q).eval(values) == pytest.approx(p.eval(values) + q.eval(values), rel=1e-9, abs=1e-9)

    def test_is_close_and_chop(self):
        p = x1 + 1e-14 * x2
        assert p.is_close(x1)
        assert not p.is_close(x1 + 1e-3 * x2)
        assert p.chop(1e-12) == x1

    def test_compile_matches_eval(self):
        p = 2 * x1 * x2 - GenPolynomial.variable('x3', 1.5)
        compiled = p.compile(('x1', 'x2', 'x3'))
        state = np.array([0.5, 2.0, 4.0])
        assert compiled(state) == pytest.approx(p.eval({'x1': 0.5, 'x2': 2.0, 'x3': 4.0}))

    def test_compile_requires_every_variable(self):
        with pytest.raises(UnboundVariableError):
            (x1 * x3).compile(('x1', 'x2'))

    def test_zero_power_is_one(self):
        assert GenPolynomial.constant(5.0).eval({}) == 5.0
        assert math.isclose((x1 ** 0).eval({'x1': 0.0}), 1.0)

    def test_str(self):
        p = x1 * x2 - 2 * x3 + 1
        assert str(p) == '1 + x1*x2 - 2*x3'
        assert repr(x1) == 'GenPolynomial(x1)'
