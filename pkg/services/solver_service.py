"""
EXPLICACIÓN: Service de integración numérica de sistemas fraccionarios
D^{q_i} y_i = F_i(y) con q_i en (0,1] y paso fijo.

- abm-pece: Adams-Bashforth-Moulton fraccionario predictor-corrector,
  pesos propios para cada orden distinto.
- frac-euler: regla explícita de Grünwald-Letnikov.
- rk4_reference: Runge-Kutta clásico de orden 4, oráculo del límite q = 1.

La derivada se interpreta con la modificación f(s) - f(0), por lo que el
problema se inicia con valores ordinarios y0.
"""

import logging
import math
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
from scipy.special import gamma as gamma_function

from config.settings import Config
from domain.entities.algebroid import MixedOrderSystem
from domain.entities.ivp import (
    ConvergenceRow,
    FractionalIVP,
    SolverConfig,
    SolverMethod,
    Trajectory,
)
from domain.entities.tensor_field import FractionalSystemSpec
from domain.exceptions import FracLeiError, FractionalDomainError, ShapeError, SolverAbort

logger = logging.getLogger(__name__)

ExactSolution = Callable[[float], np.ndarray]


@lru_cache(maxsize=32)
def _abm_weights(order: float, steps: int):
    """
    Pesos del predictor b(m) = (m+1)^q - m^q y del corrector
    A(m) = (m+2)^{q+1} + m^{q+1} - 2(m+1)^{q+1}, m = 0..steps.
    """
    m = np.arange(steps + 1, dtype=float)
    predictor = (m + 1.0) ** order - m ** order
    corrector = (m + 2.0) ** (order + 1.0) + m ** (order + 1.0) - 2.0 * (m + 1.0) ** (order + 1.0)
    for array in (predictor, corrector):
        array.setflags(write=False)
    return predictor, corrector


@lru_cache(maxsize=32)
def _gl_weights(order: float, count: int) -> np.ndarray:
    k = np.arange(1, count, dtype=float)
    weights = np.concatenate(([1.0], np.cumprod(1.0 - (order + 1.0) / k)))
    weights.setflags(write=False)
    return weights


class SolverService:
    """Servicio de integración de problemas de valor inicial fraccionarios"""

    def __init__(self, exact_error_floor: float = Config.EXACT_ERROR_FLOOR):
        self._exact_error_floor = exact_error_floor

    # --- Construcción de problemas --------------------------------------

    @staticmethod
    def ivp_from_system(system: FractionalSystemSpec, horizon: float,
                        initial_state: Optional[Sequence[float]] = None) -> FractionalIVP:
        initial = initial_state if initial_state is not None else system.initial_state
        if initial is None:
            initial = (1.0,) * system.dim
        return FractionalIVP(
            orders=system.orders(),
            rhs=system.rhs.compile(),
            initial_state=tuple(initial),
            horizon=horizon,
            variables=system.variables,
            label=system.label,
        )

    @staticmethod
    def ivp_from_mixed(system: MixedOrderSystem, horizon: float,
                       initial_state: Optional[Sequence[float]] = None) -> FractionalIVP:
        initial = initial_state if initial_state is not None else system.initial_state
        if initial is None:
            initial = (1.0,) * system.dim
        return FractionalIVP(
            orders=system.orders(),
            rhs=system.compile(),
            initial_state=tuple(initial),
            horizon=horizon,
            variables=system.variables,
            label=system.label,
        )

    # --- Evaluación protegida -------------------------------------------

    @staticmethod
    def _evaluate(ivp: FractionalIVP, state: np.ndarray, step_index: int) -> np.ndarray:
        try:
            value = np.asarray(ivp.rhs(state), dtype=float)
        except FracLeiError as e:
            raise SolverAbort(f"Right-hand side failed: {e}", step_index) from e
        if value.shape != (ivp.dim,):
            raise ShapeError(f"Right-hand side returned shape {value.shape}, expected ({ivp.dim},)")
        if not np.all(np.isfinite(value)):
            raise SolverAbort("Right-hand side produced a non-finite value", step_index)
        return value

    @staticmethod
    def _check_state(state: np.ndarray, step_index: int):
        if not np.all(np.isfinite(state)):
            raise SolverAbort("State became non-finite", step_index)

    # --- Esquemas ---------------------------------------------------------

    def solve(self, ivp: FractionalIVP, config: SolverConfig) -> Trajectory:
        steps = config.step_count(ivp.horizon)
        logger.info("Solving %s with %s: %d steps of %g", ivp.label, config.method.value, steps, config.step)
        if config.method is SolverMethod.ABM_PECE:
            states = self._abm_pece(ivp, config, steps)
        else:
            states = self._frac_euler(ivp, config, steps)
        times = config.step * np.arange(steps + 1, dtype=float)
        return Trajectory(
            times=times,
            states=states.T,
            orders=ivp.orders,
            method=config.method.value,
            step=config.step,
            variables=ivp.variables,
        )

    def _abm_pece(self, ivp: FractionalIVP, config: SolverConfig, steps: int) -> np.ndarray:
        h = config.step
        dim = ivp.dim
        y0 = np.array(ivp.initial_state, dtype=float)
        orders = ivp.orders
        window = config.memory_window

        weights = {q: _abm_weights(q, steps) for q in set(orders)}
        predictor_scale = {q: h ** q / gamma_function(q + 1.0) for q in set(orders)}
        corrector_scale = {q: h ** q / gamma_function(q + 2.0) for q in set(orders)}

        states = np.empty((dim, steps + 1))
        derivatives = np.empty((dim, steps + 1))
        states[:, 0] = y0
        derivatives[:, 0] = self._evaluate(ivp, y0, 0)

        for n in range(steps):
            start = 0 if window is None else max(0, n + 1 - window)
            history = np.arange(start, n + 1)
            corrected_from = max(1, start)
            tail = np.arange(corrected_from, n + 1)

            predicted = np.empty(dim)
            memory = np.empty(dim)
            for i in range(dim):
                q = orders[i]
                b_weights, a_weights = weights[q]
                predicted[i] = y0[i] + predictor_scale[q] * np.dot(derivatives[i, start:n + 1], b_weights[n - history])
                lagged = np.dot(derivatives[i, corrected_from:n + 1], a_weights[n - tail])
                if start == 0:
                    first = n ** (q + 1.0) - (n - q) * (n + 1.0) ** q
                    lagged = first * derivatives[i, 0] + lagged
                memory[i] = lagged
            self._check_state(predicted, n + 1)

            current = predicted
            for _ in range(config.corrector_iterations):
                slope = self._evaluate(ivp, current, n + 1)
                corrected = np.empty(dim)
                for i in range(dim):
                    q = orders[i]
                    corrected[i] = y0[i] + corrector_scale[q] * (slope[i] + memory[i])
                self._check_state(corrected, n + 1)
                current = corrected

            states[:, n + 1] = current
            derivatives[:, n + 1] = self._evaluate(ivp, current, n + 1)
        return states

    def _frac_euler(self, ivp: FractionalIVP, config: SolverConfig, steps: int) -> np.ndarray:
        """y_n = y0 + h^q F(y_{n-1}) - Σ_{k>=1} w_k (y_{n-k} - y0)"""
        h = config.step
        dim = ivp.dim
        y0 = np.array(ivp.initial_state, dtype=float)
        orders = ivp.orders
        window = config.memory_window
        weights = {q: _gl_weights(q, steps + 1) for q in set(orders)}

        deviations = np.zeros((dim, steps + 1))
        states = np.empty((dim, steps + 1))
        states[:, 0] = y0
        for n in range(1, steps + 1):
            slope = self._evaluate(ivp, states[:, n - 1], n)
            depth = n if window is None else min(n, window)
            lags = np.arange(1, depth + 1)
            for i in range(dim):
                q = orders[i]
                memory = np.dot(weights[q][lags], deviations[i, n - lags])
                deviations[i, n] = h ** q * slope[i] - memory
            states[:, n] = y0 + deviations[:, n]
            self._check_state(states[:, n], n)
        return states

    def solve_mixed(self, system: MixedOrderSystem, config: SolverConfig, horizon: float = 1.0,
                    initial_state: Optional[Sequence[float]] = None) -> Trajectory:
        """Estado (x, ξ) con órdenes (α,...,α, β,...,β)"""
        return self.solve(self.ivp_from_mixed(system, horizon, initial_state), config)

    def rk4_reference(self, ivp: FractionalIVP, step: float) -> Trajectory:
        """Runge-Kutta clásico; solo para órdenes iguales a 1"""
        if not ivp.is_classical:
            raise FractionalDomainError("RK4 reference requires every order to equal 1")
        config = SolverConfig(step=step)
        steps = config.step_count(ivp.horizon)
        states = np.empty((steps + 1, ivp.dim))
        states[0] = ivp.initial_state
        for n in range(steps):
            y = states[n]
            k1 = self._evaluate(ivp, y, n)
            k2 = self._evaluate(ivp, y + 0.5 * step * k1, n)
            k3 = self._evaluate(ivp, y + 0.5 * step * k2, n)
            k4 = self._evaluate(ivp, y + step * k3, n)
            states[n + 1] = y + step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            self._check_state(states[n + 1], n + 1)
        return Trajectory(
            times=step * np.arange(steps + 1, dtype=float),
            states=states,
            orders=ivp.orders,
            method='rk4',
            step=step,
            variables=ivp.variables,
        )

    # --- Estudio de convergencia -----------------------------------------

    def convergence_report(self, ivp: FractionalIVP, config: SolverConfig, refinements: int,
                           exact: Optional[ExactSolution] = None) -> List[ConvergenceRow]:
        """
        Reduce el paso a la mitad `refinements` veces y mide el error en el
        tiempo final contra la solución exacta (o contra la corrida más fina).
        Orden observado p = log2(e_h / e_{h/2}).
        """
        if refinements < 2:
            raise ValueError("At least two refinements are required")
        configs = [config]
        for _ in range(refinements):
            configs.append(configs[-1].halved())
        finals = [self.solve(ivp, cfg).final_state for cfg in configs]

        if exact is not None:
            target = np.asarray(exact(ivp.horizon), dtype=float)
            measured = list(zip(configs, finals))
        else:
            target = finals[-1]
            measured = list(zip(configs[:-1], finals[:-1]))

        rows: List[ConvergenceRow] = []
        previous: Optional[float] = None
        for cfg, final in measured:
            error = float(np.max(np.abs(final - target)))
            rows.append(ConvergenceRow(cfg.step, error, self._observed_order(previous, error)))
            previous = error
        for row in rows:
            logger.info("step=%g error=%.3e order=%s", row.step, row.error, row.observed_order)
        return rows

    def _observed_order(self, previous: Optional[float], error: float) -> Optional[float]:
        if previous is None:
            return None
        if error <= self._exact_error_floor:
            return math.inf
        if previous <= self._exact_error_floor:
            return None
        return math.log2(previous / error)

    @staticmethod
    def minimum_order(rows: Sequence[ConvergenceRow]) -> float:
        orders = [row.observed_order for row in rows if row.observed_order is not None]
        return min(orders) if orders else math.nan

    @staticmethod
    def summary(trajectory: Trajectory) -> Dict[str, object]:
        return {
            'steps': trajectory.step_count,
            'final_time': trajectory.final_time,
            'final_state': [float(v) for v in trajectory.final_state],
            'method': trajectory.method,
        }
