"""
EXPLICACIÓN: Pruebas de BracketService: corchete de Leibniz, campos
hamiltoniano, metripléctico y de dos potenciales.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domain.entities.polynomial import GenPolynomial
from domain.entities.tensor_field import TensorField2
from domain.exceptions import ShapeError, SymmetryError
from domain.special_functions import gamma
from services.bracket_service import ProductSide

x1 = GenPolynomial.variable('x1')
x2 = GenPolynomial.variable('x2')
x3 = GenPolynomial.variable('x3')


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([0.3, 0.5, 0.8, 1.0]), st.integers(min_value=0, max_value=10 ** 6))
def test_skew_bracket_is_antisymmetric(verification, brackets, alpha, seed):
    rng = np.random.default_rng(seed)
    variables = ('x1', 'x2', 'x3')
    tensor = verification.random_skew_tensor(rng, variables)
    f = verification.random_monomial(rng, variables) + verification.random_monomial(rng, variables)
    g = verification.random_monomial(rng, variables)
    forward = brackets.leibniz_bracket(tensor, f, g, alpha)
    backward = brackets.leibniz_bracket(tensor, g, f, alpha)
    assert (forward + backward).is_close(0.0, atol=1e-9)
    assert brackets.leibniz_bracket(tensor, f, f, alpha).is_close(0.0, atol=1e-9)


def test_bracket_with_constant_vanishes(brackets, catalog):
    tensor = catalog.rotation_poisson()
    assert brackets.leibniz_bracket(tensor, GenPolynomial.constant(4.0), x1 * x2, 0.5).is_zero


def test_hamiltonian_field_of_gradient_system(brackets, catalog):
    field = brackets.hamiltonian_field(catalog.gradient_tensor(), x1 * x2 * x3, 0.5)
    assert field.is_close(catalog.expectation_table(0.5)['gradient-frac'])


@pytest.mark.parametrize('alpha', [0.4, 1.0])
@pytest.mark.parametrize('weights', [(1.0, 1.0, 1.0), (0.5, 2.0, 3.0)])
def test_metriplectic_closed_form(brackets, catalog, alpha, weights):
    poisson = catalog.rotation_poisson()
    metric = catalog.metriplectic_metric(weights)
    hamiltonian = catalog.metriplectic_hamiltonian(alpha, weights)
    field = brackets.metriplectic_field(poisson, metric, hamiltonian, alpha)
    total = poisson + metric
    for i in range(3):
        expected = GenPolynomial.zero()
        for j in range(3):
            expected = expected + total.entry(i, j).scale((weights[j] + 1.0) * gamma(1.0 + alpha))
        assert field.components[i].is_close(expected)


def test_metriplectic_requires_symmetry_tags(brackets, catalog):
    poisson = catalog.rotation_poisson()
    metric = catalog.metriplectic_metric()
    with pytest.raises(SymmetryError):
        brackets.metriplectic_field(metric, metric, x1, 0.5)
    with pytest.raises(SymmetryError):
        brackets.metriplectic_field(poisson, poisson, x1, 0.5)


def test_two_potential_field_shapes(brackets, catalog):
    poisson, _ = catalog.maxwell_bloch_tensors()
    with pytest.raises(ShapeError):
        brackets.two_potential_field(poisson, TensorField2.diagonal([1, 1]), x1, x2, 0.5)


def test_literal_coordinate_field_carries_extra_factor(brackets, catalog):
    tensor = catalog.gradient_tensor()
    h = x1 * x2 * x3
    classical = brackets.hamiltonian_field(tensor, h, 1.0)
    assert brackets.literal_coordinate_field(tensor, h, 1.0).is_close(classical)

    alpha = 0.5
    assembled = brackets.hamiltonian_field(tensor, h, alpha)
    literal = brackets.literal_coordinate_field(tensor, h, alpha)
    factor = gamma(2.0) / gamma(2.0 - alpha)
    for name, mine, theirs in zip(tensor.variables, literal.components, assembled.components):
        assert mine.is_close(GenPolynomial.variable(name, 1.0 - alpha, factor) * theirs)


@pytest.mark.parametrize('side', list(ProductSide))
@pytest.mark.parametrize('alpha', [0.3, 0.7])
def test_product_identity(brackets, catalog, side, alpha):
    report = brackets.verify_product_identity(catalog.rotation_poisson(), x1, x1 * x2, x3, alpha, side=side)
    assert report.holds
    assert report.residual.is_zero
    assert report.side is side


def test_classical_tangency_vanishes_for_skew_tensor(brackets, catalog):
    h = x1 ** 2 + x2 ** 2 + x3 * x1
    assert brackets.classical_tangency(catalog.rotation_poisson(), h).is_zero
    assert not brackets.classical_tangency(TensorField2.diagonal([1, 1, 1]), x1).is_zero
