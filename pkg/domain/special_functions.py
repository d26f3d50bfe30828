"""
EXPLICACIÓN: Funciones especiales que consume todo el cálculo fraccionario:
gamma con detección de polos, coeficiente binomial generalizado,
cociente de gammas de la regla de la potencia y la función de
Mittag-Leffler de un parámetro por serie directa.
"""

import math
from typing import Union

import numpy as np
from scipy import special

from config.settings import Config
from domain.exceptions import ConvergenceError, FractionalDomainError, PoleError
from domain.value_objects.fractional_order import FractionalOrder

# exp() desborda por encima de este logaritmo
_LOG_OVERFLOW = 700.0


def is_gamma_pole(z: float) -> bool:
    return z <= 0 and float(z).is_integer()


def gamma(z: float) -> float:
    """Γ(z); PoleError en cero y enteros negativos"""
    z = float(z)
    if is_gamma_pole(z):
        raise PoleError(z)
    return float(special.gamma(z))


def gen_binomial(alpha: float, k: int) -> float:
    """
    Binomial generalizado C(alpha, k) por el producto descendente
    alpha(alpha-1)...(alpha-k+1)/k!, sin pasar por gamma.
    """
    if k < 0:
        raise ValueError("Binomial index k must be nonnegative")
    result = 1.0
    for j in range(k):
        result *= (alpha - j) / (j + 1)
    return result


def power_rule_factor(exponent: float, order: float) -> float:
    """
    Γ(1+γ)/Γ(1+γ-ν) para la derivada (ν>0) o integral (ν<0) de t^γ.
    """
    shifted = 1.0 + exponent - order
    if is_gamma_pole(shifted):
        raise FractionalDomainError(
            f"Power rule undefined: 1+gamma-order = {shifted} is a nonpositive integer"
        )
    if is_gamma_pole(1.0 + exponent):
        raise PoleError(1.0 + exponent)
    return float(special.poch(shifted, order))


def mittag_leffler(alpha: Union[FractionalOrder, float], z: float,
                   radius: float = Config.MITTAG_LEFFLER_RADIUS,
                   max_terms: int = Config.MITTAG_LEFFLER_MAX_TERMS,
                   tolerance: float = Config.MITTAG_LEFFLER_TOLERANCE) -> float:
    """
    E_α(z) = Σ z^k / Γ(1+αk).

    La serie se corta cuando |término| <= tolerance·|suma parcial|.
    Los términos se calculan en escala logarítmica para no desbordar
    z^k ni Γ(1+αk) por separado.
    """
    order = FractionalOrder.coerce(alpha).value
    z = float(z)
    if abs(z) > radius:
        raise ConvergenceError(f"|z|={abs(z)} exceeds the Mittag-Leffler series radius {radius}")
    if z == 0.0:
        return 1.0

    log_abs_z = math.log(abs(z))
    negative = z < 0
    total = 1.0
    for k in range(1, max_terms + 1):
        log_term = k * log_abs_z - float(special.gammaln(1.0 + order * k))
        if log_term > _LOG_OVERFLOW:
            raise ConvergenceError(f"Mittag-Leffler term overflow at k={k} for z={z}")
        term = math.exp(log_term)
        if negative and k % 2 == 1:
            term = -term
        total += term
        if abs(term) <= tolerance * abs(total):
            return total
    raise ConvergenceError(
        f"Mittag-Leffler series did not converge within {max_terms} terms (alpha={order}, z={z})"
    )


def mittag_leffler_relaxation(alpha: Union[FractionalOrder, float], rate: float,
                              times: np.ndarray, **series_options) -> np.ndarray:
    """Solución exacta de D^α y = rate·y, y(0)=1: E_α(rate·t^α) sobre una malla"""
    order = FractionalOrder.coerce(alpha).value
    times = np.asarray(times, dtype=float)
    return np.array([mittag_leffler(order, rate * t ** order, **series_options) for t in times])
