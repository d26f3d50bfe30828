"""
EXPLICACIÓN: Pruebas de las entidades del algebroide: estructura,
secciones, tensor Λ y sistema de orden mixto.
"""

import numpy as np
import pytest

from domain.entities.algebroid import AlgebroidStructure, AlgebroidTag, LambdaTensor, MixedOrderSystem, Section
from domain.entities.polynomial import GenPolynomial
from domain.exceptions import ShapeError, SymmetryError

x1 = GenPolynomial.variable('x1')
x2 = GenPolynomial.variable('x2')
xi1 = GenPolynomial.variable('xi1')
ZERO = GenPolynomial.zero()


def _structure(c01, c10, tag=AlgebroidTag.NONE, rho2_sign=-1.0):
    """m = n = 2 con C_01^0 = c01, C_10^0 = c10; structure[a][b][d] = C_ab^d"""
    rho1 = ((x2, ZERO), (ZERO, GenPolynomial.constant(1.0)))
    rho2 = tuple(tuple(entry * rho2_sign for entry in row) for row in rho1)
    structure = (
        ((ZERO, ZERO), (c01, ZERO)),
        ((c10, ZERO), (ZERO, ZERO)),
    )
    return AlgebroidStructure(2, 2, structure, rho1, rho2, tag)


class TestAlgebroidStructure:

    def test_default_variables(self):
        structure = AlgebroidStructure.zero(3, 2)
        assert structure.base_variables == ('x1', 'x2', 'x3')
        assert structure.fibre_variables == ('xi1', 'xi2')
        assert structure.variables == ('x1', 'x2', 'x3', 'xi1', 'xi2')
        assert structure.c(0, 1, 1).is_zero

    def test_shape_errors(self):
        with pytest.raises(ShapeError):
            AlgebroidStructure.zero(0, 2)
        with pytest.raises(ShapeError):
            AlgebroidStructure(1, 1, (((ZERO,),),), ((ZERO, ZERO),), ((ZERO,),))

    def test_structure_may_not_depend_on_fibre(self):
        with pytest.raises(ShapeError):
            AlgebroidStructure(1, 1, (((xi1,),),), ((ZERO,),), ((ZERO,),))

    def test_pre_lie_tag(self):
        structure = _structure(x1, -x1, AlgebroidTag.PRE_LIE)
        assert structure.has_antisymmetric_structure()
        assert structure.has_opposite_anchors()
        with pytest.raises(SymmetryError):
            _structure(x1, x1, AlgebroidTag.PRE_LIE)

    def test_symmetric_tag(self):
        assert _structure(x1, x1, AlgebroidTag.SYMMETRIC).has_symmetric_structure()
        with pytest.raises(SymmetryError):
            _structure(x1, -x1, AlgebroidTag.SYMMETRIC)

    def test_tagged_structure_needs_opposite_anchors(self):
        with pytest.raises(SymmetryError):
            _structure(x1, -x1, AlgebroidTag.PRE_LIE, rho2_sign=1.0)

    def test_with_tag(self):
        untagged = _structure(x1, -x1)
        assert untagged.with_tag(AlgebroidTag.PRE_LIE).tag is AlgebroidTag.PRE_LIE
        with pytest.raises(SymmetryError):
            untagged.with_tag(AlgebroidTag.SYMMETRIC)


class TestSection:

    def test_basis(self):
        assert Section.basis(1, 3).components == (ZERO, GenPolynomial.constant(1.0), ZERO)
        for index in (-1, 3):
            with pytest.raises(ShapeError):
                Section.basis(index, 3)

    def test_arithmetic(self):
        first = Section.basis(0, 2).scaled(x1)
        total = first + Section.basis(1, 2)
        assert total.is_close(Section((x1, 1.0)))
        assert str(total) == '(x1, 1)'
        with pytest.raises(ShapeError):
            first + Section.basis(0, 3)


def test_lambda_tensor_shapes():
    tensor = LambdaTensor(((ZERO,),), ((ZERO, ZERO),), ((ZERO, ZERO),), ('x1', 'x2'), ('xi1',))
    assert tensor.is_zero
    assert (tensor.base_dim, tensor.fibre_dim) == (2, 1)
    with pytest.raises(ShapeError):
        LambdaTensor(((ZERO,),), ((ZERO,),), ((ZERO, ZERO),), ('x1', 'x2'), ('xi1',))


class TestMixedOrderSystem:

    def _system(self, **overrides):
        values = dict(
            alpha=0.5, beta=0.8, rhs_x=(x2, -x1), rhs_xi=(xi1 * x1,),
            base_variables=('x1', 'x2'), fibre_variables=('xi1',),
        )
        values.update(overrides)
        return MixedOrderSystem(**values)

    def test_orders_and_variables(self):
        system = self._system()
        assert system.orders() == (0.5, 0.5, 0.8)
        assert system.variables == ('x1', 'x2', 'xi1')
        assert system.dim == 3

    def test_compile(self):
        rhs = self._system().compile()
        np.testing.assert_allclose(rhs(np.array([2.0, 3.0, 4.0])), [3.0, -2.0, 8.0])

    def test_equations(self):
        assert self._system().equations() == ['D^0.5 x1 = x2', 'D^0.5 x2 = -x1', 'D^0.8 xi1 = x1*xi1']

    def test_validation(self):
        with pytest.raises(ShapeError):
            self._system(rhs_x=(x2,))
        with pytest.raises(ShapeError):
            self._system(initial_state=(1.0, 2.0))

    def test_is_close_compares_orders(self):
        assert self._system().is_close(self._system())
        assert not self._system().is_close(self._system(beta=0.5))
