"""
EXPLICACIÓN: Entidades del integrador numérico: el problema de valor
inicial multi-orden, la configuración del método, la trayectoria
producida y las filas del estudio de convergencia.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from domain.entities.tensor_field import coordinate_names
from domain.exceptions import ConfigurationError, ShapeError
from domain.value_objects.fractional_order import FractionalOrder

RightHandSide = Callable[[np.ndarray], np.ndarray]


class SolverMethod(Enum):
    """Esquemas disponibles"""
    ABM_PECE = "abm-pece"
    FRAC_EULER = "frac-euler"


@dataclass(frozen=True)
class FractionalIVP:
    """
    D^{q_i}_t y_i = F_i(y), y(0) = y0, t en [0, horizon].
    """
    orders: Tuple[float, ...]
    rhs: RightHandSide = field(compare=False)
    initial_state: Tuple[float, ...]
    horizon: float
    variables: Tuple[str, ...] = ()
    label: str = 'ivp'

    def __post_init__(self):
        orders = tuple(FractionalOrder(q).value for q in self.orders)
        initial = tuple(float(value) for value in self.initial_state)
        if len(orders) != len(initial):
            raise ShapeError(f"{len(orders)} orders for a state of dimension {len(initial)}")
        if not self.horizon > 0:
            raise ConfigurationError("Horizon must be positive")
        variables = tuple(self.variables) or coordinate_names(len(initial), 'y')
        if len(variables) != len(initial):
            raise ShapeError("One variable name per state component is required")
        object.__setattr__(self, 'orders', orders)
        object.__setattr__(self, 'initial_state', initial)
        object.__setattr__(self, 'horizon', float(self.horizon))
        object.__setattr__(self, 'variables', variables)

    @property
    def dim(self) -> int:
        return len(self.initial_state)

    @property
    def is_classical(self) -> bool:
        return all(q == 1.0 for q in self.orders)

    def permuted(self, permutation: Sequence[int]) -> 'FractionalIVP':
        """Mismo problema con las componentes reordenadas: nuevo[k] = viejo[permutation[k]]"""
        order = list(permutation)
        inverse = np.argsort(order)
        original = self.rhs

        def rhs(state: np.ndarray) -> np.ndarray:
            return np.asarray(original(state[inverse]))[order]

        return FractionalIVP(
            orders=tuple(self.orders[k] for k in order),
            rhs=rhs,
            initial_state=tuple(self.initial_state[k] for k in order),
            horizon=self.horizon,
            variables=tuple(self.variables[k] for k in order),
            label=self.label,
        )

    def with_horizon(self, horizon: float) -> 'FractionalIVP':
        return FractionalIVP(self.orders, self.rhs, self.initial_state, horizon, self.variables, self.label)


@dataclass(frozen=True)
class SolverConfig:
    """Paso fijo, método y ventana de memoria (None = historia completa)"""
    step: float
    method: SolverMethod = SolverMethod.ABM_PECE
    corrector_iterations: int = 1
    memory_window: Optional[int] = None

    def __post_init__(self):
        if not self.step > 0 or not math.isfinite(self.step):
            raise ConfigurationError("Solver step must be a positive finite number")
        object.__setattr__(self, 'method', SolverMethod(self.method))
        if self.corrector_iterations < 1:
            raise ConfigurationError("At least one corrector iteration is required")
        if self.memory_window is not None and self.memory_window < 1:
            raise ConfigurationError("Memory window must be a positive number of steps")

    def step_count(self, horizon: float) -> int:
        """Número de pasos N con N·step = horizon (tolerancia de redondeo)"""
        steps = int(round(horizon / self.step))
        if steps < 1 or abs(steps * self.step - horizon) > 1e-9 * max(1.0, horizon):
            raise ConfigurationError(f"Step {self.step} does not divide horizon {horizon}")
        return steps

    def halved(self) -> 'SolverConfig':
        window = None if self.memory_window is None else 2 * self.memory_window
        return SolverConfig(self.step / 2.0, self.method, self.corrector_iterations, window)


@dataclass(frozen=True)
class Trajectory:
    """Tiempos uniformes desde 0 y estados (una fila por tiempo)"""
    times: np.ndarray = field(repr=False)
    states: np.ndarray = field(repr=False)
    orders: Tuple[float, ...]
    method: str
    step: float
    variables: Tuple[str, ...] = ()

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        states = np.asarray(self.states, dtype=float)
        if states.ndim != 2 or states.shape[0] != times.shape[0]:
            raise ShapeError("States must have one row per time")
        if times.size > 1 and not np.all(np.diff(times) > 0):
            raise ShapeError("Times must be strictly increasing")
        variables = tuple(self.variables) or coordinate_names(states.shape[1], 'y')
        if len(variables) != states.shape[1]:
            raise ShapeError("One variable name per state column is required")
        object.__setattr__(self, 'times', times)
        object.__setattr__(self, 'states', states)
        object.__setattr__(self, 'orders', tuple(float(q) for q in self.orders))
        object.__setattr__(self, 'variables', variables)

    @property
    def dim(self) -> int:
        return self.states.shape[1]

    @property
    def step_count(self) -> int:
        return self.times.size - 1

    @property
    def final_time(self) -> float:
        return float(self.times[-1])

    @property
    def final_state(self) -> np.ndarray:
        return self.states[-1]

    def component(self, index: int) -> np.ndarray:
        return self.states[:, index]

    def sup_distance(self, other: 'Trajectory') -> float:
        """Máxima diferencia absoluta sobre los tiempos comunes (mallas anidadas)"""
        if self.dim != other.dim:
            raise ShapeError("Trajectories of different dimension")
        coarse, fine = (self, other) if self.step >= other.step else (other, self)
        ratio = int(round(coarse.step / fine.step))
        if abs(ratio * fine.step - coarse.step) > 1e-12 * coarse.step:
            raise ShapeError("Trajectory grids are not nested")
        sampled = fine.states[::ratio]
        rows = min(sampled.shape[0], coarse.states.shape[0])
        return float(np.max(np.abs(sampled[:rows] - coarse.states[:rows])))


@dataclass(frozen=True)
class ConvergenceRow:
    """Una fila del estudio: paso, error y orden observado respecto a la fila anterior"""
    step: float
    error: float
    observed_order: Optional[float] = None

    @property
    def is_exact(self) -> bool:
        return self.observed_order is not None and math.isinf(self.observed_order)
