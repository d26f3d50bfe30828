"""
EXPLICACIÓN: Pruebas del parser de expresiones y de parse_point.
"""

import pytest

from domain.entities.polynomial import GenPolynomial
from domain.exceptions import ExpressionParseError
from infra.parsing.expression_parser import ExpressionParser, parse_expression, parse_point, tokenize

x1 = GenPolynomial.variable('x1')
x2 = GenPolynomial.variable('x2')
x3 = GenPolynomial.variable('x3')


@pytest.mark.parametrize('text, expected', [
    ('x1*x2*x3', x1 * x2 * x3),
    ('-x1 + 2*x2 - 3', -x1 + 2 * x2 - 3),
    ('(x1 + x2)^2', x1 ** 2 + 2 * x1 * x2 + x2 ** 2),
    ('x1^0.5*x2', GenPolynomial.variable('x1', 0.5) * x2),
    ('4*x1/2', 2 * x1),
    ('(2*x1^2)^1.5', GenPolynomial.variable('x1', 3.0, 2.0 ** 1.5)),
    ('x1^(1/2)', GenPolynomial.variable('x1', 0.5)),
    ('1.5e-1', GenPolynomial.constant(0.15)),
])
def test_parses(text, expected):
    assert parse_expression(text).is_close(expected)


def test_parameters_are_substituted():
    result = parse_expression('x2^(1+alpha)*xi2^beta + alpha', alpha=0.5, beta=0.8)
    expected = (GenPolynomial.variable('x2', 1.5) * GenPolynomial.variable('xi2', 0.8)) + 0.5
    assert result.is_close(expected)


def test_declared_variables_are_enforced():
    parser = ExpressionParser(variables=('x1', 'x2'))
    assert parser.parse('x1*x2').declared == ('x1', 'x2')
    with pytest.raises(ExpressionParseError) as excinfo:
        parser.parse('x1 + x3')
    assert excinfo.value.offset == 5


@pytest.mark.parametrize('text, offset', [
    ('', 0),
    ('x1 +', 4),
    ('x1 $ x2', 3),
    ('(x1 + x2', 8),
    ('x1 x2', 3),
    ('x1^x2', 3),
    ('x1 / x2', 5),
    ('x1^-1', 0),
    ('(x1 + x2)^0.5', 0),
    ('(-2)^0.5', 0),
])
def test_errors_report_offsets(text, offset):
    with pytest.raises(ExpressionParseError) as excinfo:
        parse_expression(text)
    assert excinfo.value.offset == offset


def test_offsets_count_utf8_bytes():
    with pytest.raises(ExpressionParseError) as excinfo:
        parse_expression('x1 + é')
    assert excinfo.value.offset == 5
    with pytest.raises(ExpressionParseError) as excinfo:
        parse_expression('é')
    assert excinfo.value.offset == 0
    assert tokenize('x1')[-1].offset == 2


def test_unbound_parameter():
    with pytest.raises(ExpressionParseError, match="'alpha' is not bound"):
        parse_expression('x1^alpha')


def test_parse_point():
    assert parse_point('x1=4, x2=0.5') == {'x1': 4.0, 'x2': 0.5}
    with pytest.raises(ExpressionParseError):
        parse_point('x1')
    with pytest.raises(ExpressionParseError) as excinfo:
        parse_point('x1=1,x2=abc')
    assert excinfo.value.offset == 8


@pytest.mark.parametrize('text, offset', [
    ('x1=1, x2=  abc', 11),
    ('é=1,x2=  q', 10),
    ('x1=1,  x2', 7),
    ('x1=1,é=2, =3', 11),
])
def test_parse_point_offsets_point_at_the_bad_field(text, offset):
    with pytest.raises(ExpressionParseError) as excinfo:
        parse_point(text)
    assert excinfo.value.offset == offset
