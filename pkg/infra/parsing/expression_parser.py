"""
EXPLICACIÓN: Parser de expresiones para GenPolynomial, usado por la CLI y
por los archivos de estructura JSON.

Gramática:
    expression := ['+'|'-'] term (('+'|'-') term)*
    term       := power (('*'|'/') power)*
    power      := primary ('^' exponent)?
    primary    := number | ident | 'alpha' | 'beta' | '(' expression ')'
    exponent   := ['-'] number | 'alpha' | 'beta' | '(' expression ')'

alpha y beta son parámetros (no variables); como exponente o como factor
se sustituyen por los valores ligados. Los errores informan el offset en
bytes UTF-8 del token culpable.
"""

import logging
import re
from dataclasses import dataclass
from typing import Iterable, List, Optional

from domain.entities.polynomial import GenPolynomial
from domain.exceptions import ExpressionParseError
from domain.value_objects.monomial import is_integer_exponent

logger = logging.getLogger(__name__)

PARAMETERS = ('alpha', 'beta')

_TOKEN_PATTERN = re.compile(r"""
    (?P<space>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        offset = len(text[:position].encode('utf-8'))
        if match is None:
            raise ExpressionParseError(f"Unexpected character {text[position]!r}", offset)
        kind = match.lastgroup
        if kind != 'space':
            tokens.append(Token(kind, match.group(), offset))
        position = match.end()
    tokens.append(Token('end', '', len(text.encode('utf-8'))))
    return tokens


class ExpressionParser:
    """
    Parser descendente recursivo.
    Si se declaran `variables`, cualquier otro identificador es un error.
    """

    def __init__(self, variables: Optional[Iterable[str]] = None,
                 alpha: Optional[float] = None, beta: Optional[float] = None):
        self._variables = tuple(variables) if variables is not None else None
        self._parameters = {'alpha': alpha, 'beta': beta}
        self._tokens: List[Token] = []
        self._index = 0

    def parse(self, text: str) -> GenPolynomial:
        self._tokens = tokenize(text)
        self._index = 0
        if self._peek().kind == 'end':
            raise ExpressionParseError("Empty expression", 0)
        result = self._expression()
        token = self._peek()
        if token.kind != 'end':
            raise ExpressionParseError(f"Unexpected '{token.text}'", token.offset)
        declared = self._variables or ()
        return result.with_declared(declared)

    # --- Utilidades de tokens -------------------------------------------

    def _peek(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _accept(self, *symbols: str) -> Optional[Token]:
        token = self._peek()
        if token.kind == 'op' and token.text in symbols:
            return self._advance()
        return None

    def _expect(self, symbol: str) -> Token:
        token = self._peek()
        if token.kind != 'op' or token.text != symbol:
            found = token.text or 'end of input'
            raise ExpressionParseError(f"Expected '{symbol}', found {found!r}", token.offset)
        return self._advance()

    # --- Reglas -------------------------------------------------------------

    def _expression(self) -> GenPolynomial:
        negative = self._accept('+', '-')
        result = self._term()
        if negative is not None and negative.text == '-':
            result = -result
        while True:
            operator = self._accept('+', '-')
            if operator is None:
                return result
            term = self._term()
            result = result + term if operator.text == '+' else result - term

    def _term(self) -> GenPolynomial:
        result = self._power()
        while True:
            operator = self._accept('*', '/')
            if operator is None:
                return result
            offset = self._peek().offset
            factor = self._power()
            if operator.text == '*':
                result = result * factor
                continue
            if not factor.is_constant or factor.constant_value == 0.0:
                raise ExpressionParseError("Division is only allowed by a nonzero constant", offset)
            result = result.scale(1.0 / factor.constant_value)

    def _power(self) -> GenPolynomial:
        base_offset = self._peek().offset
        base = self._primary()
        if self._accept('^') is None:
            return base
        exponent = self._exponent()
        return self._raise(base, exponent, base_offset)

    def _primary(self) -> GenPolynomial:
        token = self._advance()
        if token.kind == 'number':
            return GenPolynomial.constant(float(token.text))
        if token.kind == 'ident':
            if token.text in PARAMETERS:
                return GenPolynomial.constant(self._parameter(token))
            if self._variables is not None and token.text not in self._variables:
                raise ExpressionParseError(f"Unknown variable '{token.text}'", token.offset)
            return GenPolynomial.variable(token.text)
        if token.kind == 'op' and token.text == '(':
            inner = self._expression()
            self._expect(')')
            return inner
        found = token.text or 'end of input'
        raise ExpressionParseError(f"Expected a number, variable or '(', found {found!r}", token.offset)

    def _exponent(self) -> float:
        token = self._peek()
        if self._accept('-') is not None:
            return -self._exponent()
        if token.kind == 'number':
            self._advance()
            return float(token.text)
        if token.kind == 'ident' and token.text in PARAMETERS:
            self._advance()
            return self._parameter(token)
        if self._accept('(') is not None:
            inner = self._expression()
            self._expect(')')
            if not inner.is_constant:
                raise ExpressionParseError("Exponent must be a constant expression", token.offset)
            return inner.constant_value
        found = token.text or 'end of input'
        raise ExpressionParseError(f"Invalid exponent {found!r}", token.offset)

    def _parameter(self, token: Token) -> float:
        value = self._parameters[token.text]
        if value is None:
            raise ExpressionParseError(f"Parameter '{token.text}' is not bound", token.offset)
        return float(value)

    @staticmethod
    def _raise(base: GenPolynomial, exponent: float, offset: int) -> GenPolynomial:
        """Potencia real de un monomio, o potencia entera no negativa de una suma"""
        if exponent < 0:
            raise ExpressionParseError(f"Negative exponent {exponent:g}", offset)
        if len(base.terms) == 1:
            term = base.terms[0]
            if term.coeff < 0 and not is_integer_exponent(exponent):
                raise ExpressionParseError("Fractional power of a negative coefficient", offset)
            return GenPolynomial.monomial(
                term.coeff ** exponent,
                {name: value * exponent for name, value in term.exponents},
            )
        if base.is_zero:
            return GenPolynomial.constant(1.0 if exponent == 0 else 0.0)
        if not is_integer_exponent(exponent):
            raise ExpressionParseError("Only integer powers of a sum are allowed", offset)
        return base ** int(round(exponent))


def parse_expression(text: str, variables: Optional[Iterable[str]] = None,
                     alpha: Optional[float] = None, beta: Optional[float] = None) -> GenPolynomial:
    """Atajo: ExpressionParser(...).parse(text)"""
    return ExpressionParser(variables, alpha, beta).parse(text)


def _byte_length(text: str) -> int:
    return len(text.encode('utf-8'))


def parse_point(text: str) -> dict:
    """
    'x1=4,x2=0.5' -> {'x1': 4.0, 'x2': 0.5}.
    Los offsets de error son bytes UTF-8 hasta el primer carácter no blanco del campo.
    """
    point = {}
    offset = 0
    for chunk in text.split(','):
        name, separator, value = chunk.partition('=')
        if not separator or not name.strip():
            start = offset + _byte_length(chunk) - _byte_length(chunk.lstrip())
            raise ExpressionParseError(f"Expected name=value, found {chunk.strip()!r}", start)
        try:
            point[name.strip()] = float(value)
        except ValueError:
            start = offset + _byte_length(name) + 1 + _byte_length(value) - _byte_length(value.lstrip())
            raise ExpressionParseError(f"Invalid number {value.strip()!r}", start) from None
        offset += _byte_length(chunk) + 1
    return point
