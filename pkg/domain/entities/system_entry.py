"""
EXPLICACIÓN: Entrada del registro de sistemas predefinidos.
Cada entrada sabe construir su sistema para unos órdenes dados y, si
existe, la variante literal (--as-published) del sistema publicado.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Optional, Tuple, Union

from domain.entities.algebroid import MixedOrderSystem
from domain.entities.tensor_field import FractionalSystemSpec
from domain.exceptions import ConfigurationError, ShapeError
from domain.value_objects.fractional_order import FractionalOrder

BuiltSystem = Union[FractionalSystemSpec, MixedOrderSystem]
SystemBuilder = Callable[[float, float, bool], BuiltSystem]


class SystemKind(Enum):
    """Campo de un solo orden o sistema (α,β)"""
    FIELD = "field"
    MIXED = "mixed"


@dataclass(frozen=True)
class SystemRegistryEntry:
    """Sistema predefinido con sus parámetros por defecto"""
    key: str
    description: str
    reference: str
    kind: SystemKind
    default_initial_state: Tuple[float, ...]
    builder: SystemBuilder = field(compare=False, repr=False)
    default_alpha: float = 0.5
    default_beta: float = 0.5
    has_literal_variant: bool = False
    parameters: Dict[str, object] = field(default_factory=dict, compare=False)
    # Ecuaciones que reproduce el sistema, escritas en texto plano
    equation: str = ''

    def __post_init__(self):
        if not self.key or ' ' in self.key:
            raise ConfigurationError(f"Invalid registry key '{self.key}'")
        if not self.reference:
            raise ConfigurationError(f"Registry entry '{self.key}' needs a reference")
        if not self.equation:
            raise ConfigurationError(f"Registry entry '{self.key}' needs the equation it reproduces")
        object.__setattr__(self, 'kind', SystemKind(self.kind))
        object.__setattr__(self, 'default_initial_state', tuple(float(v) for v in self.default_initial_state))
        FractionalOrder(self.default_alpha)
        FractionalOrder(self.default_beta)

    @property
    def dim(self) -> int:
        return len(self.default_initial_state)

    @property
    def is_mixed(self) -> bool:
        return self.kind is SystemKind.MIXED

    def build(self, alpha: Optional[float] = None, beta: Optional[float] = None,
              as_published: bool = False) -> BuiltSystem:
        if as_published and not self.has_literal_variant:
            raise ConfigurationError(f"System '{self.key}' has no literal variant")
        alpha = self.default_alpha if alpha is None else alpha
        beta = self.default_beta if beta is None else beta
        system = self.builder(alpha, beta, as_published)
        if system.dim != self.dim:
            raise ShapeError(f"Builder for '{self.key}' produced dimension {system.dim}, expected {self.dim}")
        return system

    def defaults(self) -> Dict[str, object]:
        values: Dict[str, object] = {'alpha': self.default_alpha}
        if self.is_mixed:
            values['beta'] = self.default_beta
        values['y0'] = list(self.default_initial_state)
        values.update(self.parameters)
        return values
