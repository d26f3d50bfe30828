"""
EXPLICACIÓN: Value Object para un monomio generalizado c·Π x_i^γ_i con
exponentes reales no negativos. Es la clase cerrada bajo la regla de la
potencia fraccionaria.
"""

import math
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Tuple, Union

from domain.exceptions import FractionalDomainError, UnboundVariableError

# Los exponentes se redondean al construir para que (1+α)-α sea 1 exacto
EXPONENT_DIGITS = 12

ExponentMap = Tuple[Tuple[str, float], ...]

_NAME_PATTERN = re.compile(r'^([A-Za-z_]*?)(\d*)$')


def variable_sort_key(name: str) -> Tuple[str, int, str]:
    """Orden natural: x2 < x10, y los xi después de los x"""
    match = _NAME_PATTERN.match(name)
    if not match:
        return (name, -1, name)
    prefix, digits = match.groups()
    return (prefix, int(digits) if digits else -1, name)


def normalize_exponent(exponent: float) -> float:
    """Redondea a EXPONENT_DIGITS decimales y pega a enteros cercanos"""
    value = round(float(exponent), EXPONENT_DIGITS)
    nearest = round(value)
    if abs(value - nearest) < 10.0 ** (-EXPONENT_DIGITS):
        value = float(nearest)
    return value + 0.0


def is_integer_exponent(exponent: float) -> bool:
    return float(exponent).is_integer()


def canonical_exponents(exponents: Union[Mapping[str, float], Iterable[Tuple[str, float]]]) -> ExponentMap:
    """Forma canónica: sin ceros, ordenado por variable, exponentes normalizados"""
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    merged = {}
    for name, exponent in items:
        merged[name] = merged.get(name, 0.0) + float(exponent)

    canonical = []
    for name, exponent in merged.items():
        exponent = normalize_exponent(exponent)
        if exponent < 0:
            raise FractionalDomainError(f"Negative exponent {exponent} on '{name}'")
        if exponent != 0.0:
            canonical.append((name, exponent))
    return tuple(sorted(canonical, key=lambda item: variable_sort_key(item[0])))


def format_number(value: float) -> str:
    return f"{value:.10g}"


@dataclass(frozen=True)
class GenMonomial:
    """
    Monomio c·Π x^γ. Nunca se guarda con coeficiente cero.
    """
    coeff: float
    exponents: ExponentMap = ()

    def __post_init__(self):
        coeff = float(self.coeff)
        if coeff == 0.0:
            raise ValueError("Zero-coefficient monomials are never stored")
        if not math.isfinite(coeff):
            raise FractionalDomainError(f"Monomial coefficient must be finite, got {coeff}")
        object.__setattr__(self, 'coeff', coeff)
        object.__setattr__(self, 'exponents', canonical_exponents(self.exponents))

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.exponents)

    @property
    def is_constant(self) -> bool:
        return not self.exponents

    def exponent(self, name: str) -> float:
        """Exponente de una variable (0 si no aparece)"""
        for var, exponent in self.exponents:
            if var == name:
                return exponent
        return 0.0

    def total_degree(self, names: Iterable[str]) -> float:
        wanted = set(names)
        return sum(exponent for var, exponent in self.exponents if var in wanted)

    def with_exponent(self, name: str, exponent: float, coeff: float) -> 'GenMonomial':
        """Copia con el exponente de `name` reemplazado y nuevo coeficiente"""
        exponents = dict(self.exponents)
        exponents[name] = exponent
        return GenMonomial(coeff, canonical_exponents(exponents))

    def without(self, names: Iterable[str]) -> ExponentMap:
        removed = set(names)
        return tuple(item for item in self.exponents if item[0] not in removed)

    def evaluate(self, point: Mapping[str, float]) -> float:
        value = self.coeff
        for name, exponent in self.exponents:
            if name not in point:
                raise UnboundVariableError(name)
            x = float(point[name])
            if x < 0 and not is_integer_exponent(exponent):
                raise FractionalDomainError(
                    f"Negative coordinate {name}={x} under non-integer exponent {exponent}"
                )
            value *= x ** exponent
        return value

    def factors_str(self) -> str:
        parts = []
        for name, exponent in self.exponents:
            parts.append(name if exponent == 1.0 else f"{name}^{format_number(exponent)}")
        return '*'.join(parts)

    def __str__(self) -> str:
        factors = self.factors_str()
        if not factors:
            return format_number(self.coeff)
        if self.coeff == 1.0:
            return factors
        if self.coeff == -1.0:
            return f"-{factors}"
        return f"{format_number(self.coeff)}*{factors}"
