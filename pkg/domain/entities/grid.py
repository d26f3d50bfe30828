"""
EXPLICACIÓN: Mallas uniformes 1-D y funciones muestreadas sobre ellas.
Son la entrada y la salida del oráculo de Grünwald-Letnikov.
"""

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from domain.exceptions import ShapeError


@dataclass(frozen=True)
class Grid1D:
    """Malla uniforme t_j = start + j·step, j = 0..count-1, con start fijo en 0"""
    step: float
    count: int
    start: float = 0.0

    def __post_init__(self):
        if not self.step > 0:
            raise ValueError("Grid step must be positive")
        if self.count < 2:
            raise ValueError("Grid needs at least two points")
        if self.start != 0.0:
            raise ValueError("Grids start at the lower limit 0")

    @classmethod
    def over(cls, horizon: float, step: float) -> 'Grid1D':
        """Malla que cubre [0, horizon]; horizon debe ser múltiplo de step"""
        intervals = int(round(horizon / step))
        if intervals < 1 or abs(intervals * step - horizon) > 1e-9 * max(1.0, horizon):
            raise ValueError(f"Step {step} does not divide horizon {horizon}")
        return cls(step=step, count=intervals + 1)

    @property
    def horizon(self) -> float:
        return self.step * (self.count - 1)

    def times(self) -> np.ndarray:
        return self.start + self.step * np.arange(self.count, dtype=float)

    def refined(self) -> 'Grid1D':
        """Misma ventana con la mitad de paso"""
        return Grid1D(step=self.step / 2.0, count=2 * (self.count - 1) + 1)


@dataclass(frozen=True)
class SampledFunction:
    """Valores de una función en los nodos de una malla"""
    grid: Grid1D
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != (self.grid.count,):
            raise ShapeError(f"Expected {self.grid.count} samples, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise ValueError("Sampled values must be finite")
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    @classmethod
    def sample(cls, grid: Grid1D, fn: Callable[[np.ndarray], np.ndarray]) -> 'SampledFunction':
        return cls(grid, fn(grid.times()))

    @property
    def times(self) -> np.ndarray:
        return self.grid.times()

    def __add__(self, other: 'SampledFunction') -> 'SampledFunction':
        if isinstance(other, (int, float)):
            return SampledFunction(self.grid, self.values + other)
        if other.grid != self.grid:
            raise ShapeError("Sampled functions live on different grids")
        return SampledFunction(self.grid, self.values + other.values)

    def scaled(self, factor: float) -> 'SampledFunction':
        return SampledFunction(self.grid, factor * self.values)
