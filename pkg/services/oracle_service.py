"""
EXPLICACIÓN: Oráculo numérico independiente para la derivada de
Riemann-Liouville modificada: esquema de Grünwald-Letnikov sobre mallas
uniformes. Sirve para validar cada regla simbólica.
"""

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np

from domain.entities.grid import Grid1D, SampledFunction
from domain.entities.polynomial import GenPolynomial
from domain.value_objects.fractional_order import FractionalOrder
from services.calculus_service import CalculusService

logger = logging.getLogger(__name__)

OrderLike = Union[FractionalOrder, float]


@dataclass(frozen=True)
class OracleComparison:
    """Error máximo del oráculo frente a la regla simbólica en t >= window_start"""
    gamma_exp: float
    alpha: float
    step: float
    max_relative_error: float
    max_absolute_error: float


class OracleService:
    """Servicio del oráculo de Grünwald-Letnikov"""

    def __init__(self, calculus_service: CalculusService):
        self._calculus = calculus_service

    @staticmethod
    def gl_weights(alpha: OrderLike, n: int) -> np.ndarray:
        """w_0 = 1, w_k = w_{k-1}·(1 - (α+1)/k)"""
        if n < 1:
            raise ValueError("At least one weight is required")
        order = FractionalOrder.coerce(alpha).value
        k = np.arange(1, n, dtype=float)
        return np.concatenate(([1.0], np.cumprod(1.0 - (order + 1.0) / k)))

    def gl_frac_derivative(self, f: SampledFunction, alpha: OrderLike) -> SampledFunction:
        """
        out[j] = step^(-α)·Σ_{k<=j} w_k·(f[j-k] - f[0]).
        Restar f[0] es la modificación que anula las constantes.
        """
        order = FractionalOrder.coerce(alpha).value
        count = f.grid.count
        shifted = f.values - f.values[0]
        weights = self.gl_weights(order, count)
        values = np.convolve(shifted, weights)[:count] * f.grid.step ** (-order)
        return SampledFunction(f.grid, values)

    def compare_power_rule(self, gamma_exp: float, alpha: OrderLike, step: float = 1e-3,
                           horizon: float = 1.0, window_start: float = 0.5) -> OracleComparison:
        """
        Compara GL sobre t^γ con la derivada simbólica evaluada,
        solo en t >= window_start·horizon (lejos de la singularidad t^(γ-α)).
        """
        order = FractionalOrder.coerce(alpha).value
        grid = Grid1D.over(horizon, step)
        sampled = SampledFunction.sample(grid, lambda t: t ** gamma_exp)
        numeric = self.gl_frac_derivative(sampled, order).values

        symbolic = self._calculus.frac_partial(GenPolynomial.variable('t', gamma_exp), 't', order)
        compiled = symbolic.compile(('t',))
        times = grid.times()
        exact = np.array([compiled(np.array([t])) for t in times])

        mask = times >= window_start * horizon
        absolute = np.abs(numeric[mask] - exact[mask])
        relative = absolute / np.maximum(np.abs(exact[mask]), np.finfo(float).tiny)
        comparison = OracleComparison(
            gamma_exp=gamma_exp,
            alpha=order,
            step=step,
            max_relative_error=float(np.max(relative)),
            max_absolute_error=float(np.max(absolute)),
        )
        logger.debug("GL vs power rule: %s", comparison)
        return comparison
