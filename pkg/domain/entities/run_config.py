"""
EXPLICACIÓN: Configuración de una corrida de simulación.
Se puede volcar a JSON (--dump-config) y volver a cargar para repetir
la corrida exactamente.
"""

from dataclasses import dataclass, fields
from typing import Any, Dict, Optional, Tuple

from domain.entities.ivp import SolverConfig, SolverMethod
from domain.exceptions import ConfigurationError, FractionalDomainError
from domain.value_objects.fractional_order import FractionalOrder

DEFAULT_ALPHA = 0.5
DEFAULT_BETA = 0.5
DEFAULT_HORIZON = 1.0
DEFAULT_STEP = 1e-3


@dataclass(frozen=True)
class RunConfig:
    """
    Qué sistema integrar (clave de registro o archivo de estructura) y cómo.
    initial_state None significa "usar el estado por defecto del sistema".
    """
    system: Optional[str] = None
    structure_file: Optional[str] = None
    alpha: float = DEFAULT_ALPHA
    beta: float = DEFAULT_BETA
    initial_state: Optional[Tuple[float, ...]] = None
    horizon: float = DEFAULT_HORIZON
    step: float = DEFAULT_STEP
    method: str = SolverMethod.ABM_PECE.value
    corrector_iterations: int = 1
    memory_window: Optional[int] = None
    as_published: bool = False
    output: Optional[str] = None

    def __post_init__(self):
        if (self.system is None) == (self.structure_file is None):
            raise ConfigurationError("Exactly one of 'system' or 'structure_file' must be given")
        try:
            FractionalOrder(self.alpha)
            FractionalOrder(self.beta)
        except FractionalDomainError as e:
            raise ConfigurationError(str(e)) from e
        try:
            SolverMethod(self.method)
        except ValueError:
            known = [method.value for method in SolverMethod]
            raise ConfigurationError(f"Unknown method '{self.method}'. Available: {known}") from None
        if self.initial_state is not None:
            object.__setattr__(self, 'initial_state', tuple(float(v) for v in self.initial_state))
        if not self.horizon > 0:
            raise ConfigurationError("Horizon must be positive")
        self.solver_config().step_count(self.horizon)

    def solver_config(self) -> SolverConfig:
        return SolverConfig(
            step=self.step,
            method=SolverMethod(self.method),
            corrector_iterations=self.corrector_iterations,
            memory_window=self.memory_window,
        )

    def to_dict(self) -> Dict[str, Any]:
        data = {item.name: getattr(self, item.name) for item in fields(self)}
        if data['initial_state'] is not None:
            data['initial_state'] = list(data['initial_state'])
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RunConfig':
        known = {item.name for item in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigurationError(f"Unknown run configuration keys: {sorted(unknown)}")
        values = dict(data)
        if values.get('initial_state') is not None:
            values['initial_state'] = tuple(values['initial_state'])
        try:
            return cls(**values)
        except TypeError as e:
            raise ConfigurationError(str(e)) from e
