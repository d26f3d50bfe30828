"""
EXPLICACIÓN: Pruebas del value object FractionalOrder.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from domain.exceptions import FractionalDomainError
from domain.value_objects.fractional_order import FractionalOrder


@given(st.floats(min_value=1e-6, max_value=1.0))
def test_accepts_orders_in_unit_interval(value):
    assert FractionalOrder(value).value == value


@pytest.mark.parametrize('value', [0.0, -0.5, 1.0000001, 2.0, float('nan')])
def test_rejects_orders_outside_unit_interval(value):
    with pytest.raises(FractionalDomainError):
        FractionalOrder(value)


def test_classical_order():
    assert FractionalOrder(1).is_classical
    assert not FractionalOrder(0.999).is_classical


def test_coerce_and_str():
    order = FractionalOrder(0.5)
    assert FractionalOrder.coerce(order) is order
    assert FractionalOrder.coerce(0.25) == FractionalOrder(0.25)
    assert str(order) == '0.5'
    assert float(order) == 0.5
