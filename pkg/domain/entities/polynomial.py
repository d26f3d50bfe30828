"""
EXPLICACIÓN: Entidad GenPolynomial, suma finita de monomios generalizados.
Es inmutable y siempre está en forma canónica (términos fusionados y
ordenados), así la igualdad simbólica se decide comparando estructura.
"""

import math
from dataclasses import dataclass
from numbers import Real
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from domain.exceptions import FractionalDomainError, UnboundVariableError
from domain.value_objects.monomial import (
    ExponentMap,
    GenMonomial,
    canonical_exponents,
    variable_sort_key,
)

COEFFICIENT_RTOL = 1e-12
COEFFICIENT_ATOL = 1e-12

Scalar = Union[int, float]


def _term_sort_key(monomial: GenMonomial):
    return tuple((variable_sort_key(name), exponent) for name, exponent in monomial.exponents)


@dataclass(frozen=True, eq=False)
class GenPolynomial:
    """
    Polinomio generalizado sobre un conjunto declarado de variables.
    `declared` solo documenta el espacio; no participa en la igualdad.
    """
    terms: Tuple[GenMonomial, ...] = ()
    declared: Tuple[str, ...] = ()

    def __post_init__(self):
        merged: Dict[ExponentMap, float] = {}
        for term in self.terms:
            merged[term.exponents] = merged.get(term.exponents, 0.0) + term.coeff
        canonical = [GenMonomial(coeff, exponents) for exponents, coeff in merged.items() if coeff != 0.0]
        canonical.sort(key=_term_sort_key)
        object.__setattr__(self, 'terms', tuple(canonical))

        names = set(self.declared)
        for term in canonical:
            names.update(term.variables)
        object.__setattr__(self, 'declared', tuple(sorted(names, key=variable_sort_key)))

    # --- Constructores -------------------------------------------------

    @classmethod
    def zero(cls, declared: Iterable[str] = ()) -> 'GenPolynomial':
        return cls((), tuple(declared))

    @classmethod
    def constant(cls, value: Scalar, declared: Iterable[str] = ()) -> 'GenPolynomial':
        if value == 0:
            return cls.zero(declared)
        return cls((GenMonomial(value),), tuple(declared))

    @classmethod
    def variable(cls, name: str, exponent: float = 1.0, coeff: Scalar = 1.0) -> 'GenPolynomial':
        """Monomio coeff·name^exponent"""
        if coeff == 0:
            return cls.zero((name,))
        return cls((GenMonomial(coeff, ((name, exponent),)),), (name,))

    @classmethod
    def monomial(cls, coeff: Scalar, exponents: Mapping[str, float]) -> 'GenPolynomial':
        if coeff == 0:
            return cls.zero(tuple(exponents))
        return cls((GenMonomial(coeff, canonical_exponents(exponents)),), tuple(exponents))

    @classmethod
    def coerce(cls, value: Union['GenPolynomial', Scalar]) -> 'GenPolynomial':
        if isinstance(value, GenPolynomial):
            return value
        if isinstance(value, Real):
            return cls.constant(float(value))
        raise TypeError(f"Cannot convert {type(value).__name__} to GenPolynomial")

    # --- Consultas -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(term.is_constant for term in self.terms)

    @property
    def constant_value(self) -> float:
        """Valor del término constante (0 si no existe)"""
        for term in self.terms:
            if term.is_constant:
                return term.coeff
        return 0.0

    @property
    def variables(self) -> Tuple[str, ...]:
        """Variables que aparecen efectivamente en algún término"""
        names = set()
        for term in self.terms:
            names.update(term.variables)
        return tuple(sorted(names, key=variable_sort_key))

    def depends_on(self, name: str) -> bool:
        return any(term.exponent(name) != 0.0 for term in self.terms)

    def exponents_of(self, name: str) -> Tuple[float, ...]:
        return tuple(sorted({term.exponent(name) for term in self.terms}))

    def degree(self, name: str) -> float:
        return max((term.exponent(name) for term in self.terms), default=0.0)

    def max_abs_coeff(self) -> float:
        return max((abs(term.coeff) for term in self.terms), default=0.0)

    def with_declared(self, names: Iterable[str]) -> 'GenPolynomial':
        return GenPolynomial(self.terms, tuple(self.declared) + tuple(names))

    # --- Aritmética ----------------------------------------------------

    def map_terms(self, fn: Callable[[GenMonomial], Optional[GenMonomial]]) -> 'GenPolynomial':
        """Aplica fn a cada término; None descarta el término"""
        mapped = [result for result in (fn(term) for term in self.terms) if result is not None]
        return GenPolynomial(tuple(mapped), self.declared)

    def scale(self, factor: Scalar) -> 'GenPolynomial':
        if factor == 0:
            return GenPolynomial.zero(self.declared)
        return self.map_terms(lambda term: GenMonomial(term.coeff * factor, term.exponents))

    def __add__(self, other):
        try:
            other = GenPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return GenPolynomial(self.terms + other.terms, self.declared + other.declared)

    __radd__ = __add__

    def __neg__(self) -> 'GenPolynomial':
        return self.scale(-1.0)

    def __sub__(self, other):
        try:
            other = GenPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return GenPolynomial.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Real):
            return self.scale(float(other))
        if not isinstance(other, GenPolynomial):
            return NotImplemented
        products: List[GenMonomial] = []
        for left in self.terms:
            for right in other.terms:
                products.append(GenMonomial(left.coeff * right.coeff, left.exponents + right.exponents))
        return GenPolynomial(tuple(products), self.declared + other.declared)

    def __rmul__(self, other):
        if isinstance(other, Real):
            return self.scale(float(other))
        return NotImplemented

    def __pow__(self, power: int) -> 'GenPolynomial':
        if not isinstance(power, int) or power < 0:
            raise FractionalDomainError("Only nonnegative integer powers of a polynomial are supported")
        result = GenPolynomial.constant(1.0, self.declared)
        for _ in range(power):
            result = result * self
        return result

    # --- Igualdad ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Real):
            other = GenPolynomial.constant(float(other))
        if not isinstance(other, GenPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def chop(self, tolerance: float) -> 'GenPolynomial':
        """Descarta coeficientes con |c| <= tolerance"""
        return self.map_terms(lambda term: term if abs(term.coeff) > tolerance else None)

    def is_close(self, other: Union['GenPolynomial', Scalar],
                 rtol: float = COEFFICIENT_RTOL, atol: float = COEFFICIENT_ATOL) -> bool:
        """
        Igualdad simbólica con coeficientes flotantes: mismos monomios salvo
        coeficientes que difieren menos que atol + rtol·escala.
        """
        other = GenPolynomial.coerce(other)
        scale = max(1.0, self.max_abs_coeff(), other.max_abs_coeff())
        difference = self - other
        return all(abs(term.coeff) <= atol + rtol * scale for term in difference.terms)

    # --- Evaluación ----------------------------------------------------

    def eval(self, point: Mapping[str, float]) -> float:
        """Valor numérico; 0^0 = 1"""
        return math.fsum(term.evaluate(point) for term in self.terms)

    def compile(self, variables: Sequence[str]) -> 'CompiledPolynomial':
        return CompiledPolynomial.build(self, variables)

    # --- Representación ------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        pieces = []
        for index, term in enumerate(self.terms):
            text = str(term)
            if index == 0:
                pieces.append(text)
            elif text.startswith('-'):
                pieces.append(f"- {text[1:]}")
            else:
                pieces.append(f"+ {text}")
        return ' '.join(pieces)

    def __repr__(self) -> str:
        return f"GenPolynomial({self})"


class CompiledPolynomial:
    """
    Evaluador numpy de un GenPolynomial sobre un vector de estado ordenado.
    Coordenadas negativas bajo exponentes no enteros producen NaN.
    """

    def __init__(self, coefficients: np.ndarray, exponents: np.ndarray):
        self._coefficients = coefficients
        self._exponents = exponents

    @classmethod
    def build(cls, polynomial: GenPolynomial, variables: Sequence[str]) -> 'CompiledPolynomial':
        index = {name: position for position, name in enumerate(variables)}
        for name in polynomial.variables:
            if name not in index:
                raise UnboundVariableError(name)
        coefficients = np.array([term.coeff for term in polynomial.terms], dtype=float)
        exponents = np.zeros((len(polynomial.terms), len(variables)), dtype=float)
        for row, term in enumerate(polynomial.terms):
            for name, exponent in term.exponents:
                exponents[row, index[name]] = exponent
        return cls(coefficients, exponents)

    def __call__(self, state: np.ndarray) -> float:
        if self._coefficients.size == 0:
            return 0.0
        with np.errstate(invalid='ignore', divide='ignore', over='ignore'):
            powers = np.prod(np.power(state[np.newaxis, :], self._exponents), axis=1)
        return float(np.dot(self._coefficients, powers))
