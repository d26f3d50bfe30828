"""
EXPLICACIÓN: Value Object para el orden de una derivada fraccionaria.
Inmutable y comparado por valor, igual que el resto de value objects.
Todas las operaciones simbólicas trabajan con órdenes en (0, 1].
"""

from dataclasses import dataclass
from typing import Union

from domain.exceptions import FractionalDomainError


@dataclass(frozen=True)
class FractionalOrder:
    """
    Orden α de una derivada de Riemann-Liouville modificada.
    El valor 1 está admitido y reduce todo a la derivada clásica.
    """
    value: float

    def __post_init__(self):
        """Valida que el orden esté en (0, 1]"""
        value = float(self.value)
        if not value > 0.0 or value > 1.0:
            raise FractionalDomainError(f"Fractional order must lie in (0, 1], got {self.value}")
        object.__setattr__(self, 'value', value)

    @property
    def is_classical(self) -> bool:
        """True cuando el orden es exactamente 1"""
        return self.value == 1.0

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        return f"{self.value:g}"

    @classmethod
    def coerce(cls, order: Union['FractionalOrder', float]) -> 'FractionalOrder':
        """Acepta un float o un FractionalOrder ya construido"""
        if isinstance(order, cls):
            return order
        return cls(order)
