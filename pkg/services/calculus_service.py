"""
EXPLICACIÓN: Service con el cálculo fraccionario simbólico sobre
GenPolynomial: derivada parcial de Riemann-Liouville modificada (regla de
la potencia), integrales fraccionarias de potencias, serie de Leibniz del
producto, desarrollo de Taylor fraccionario, diferencial exterior y
el emparejamiento con campos vectoriales.
Todos los límites inferiores son 0.
"""

import logging
import math
import warnings
from typing import List, Optional, Sequence, Tuple, Union

from config.settings import Config
from domain.entities.polynomial import GenPolynomial
from domain.exceptions import FractionalDomainError, TruncationWarning
from domain.special_functions import gamma, gen_binomial, mittag_leffler, power_rule_factor
from domain.value_objects.fractional_order import FractionalOrder
from domain.value_objects.monomial import GenMonomial, canonical_exponents, is_integer_exponent, normalize_exponent

logger = logging.getLogger(__name__)

OrderLike = Union[FractionalOrder, float]


class CalculusService:
    """
    Servicio de cálculo fraccionario.
    Es puro: no guarda estado más allá de los límites configurados.
    """

    def __init__(self, product_series_max_terms: int = Config.PRODUCT_SERIES_MAX_TERMS,
                 mittag_leffler_radius: float = Config.MITTAG_LEFFLER_RADIUS,
                 mittag_leffler_max_terms: int = Config.MITTAG_LEFFLER_MAX_TERMS,
                 mittag_leffler_tolerance: float = Config.MITTAG_LEFFLER_TOLERANCE):
        if product_series_max_terms < 1:
            raise ValueError("Product series needs at least one term")
        self._product_series_max_terms = product_series_max_terms
        self._ml_radius = mittag_leffler_radius
        self._ml_max_terms = mittag_leffler_max_terms
        self._ml_tolerance = mittag_leffler_tolerance

    # --- Funciones especiales -----------------------------------------

    def gamma(self, z: float) -> float:
        return gamma(z)

    def gen_binomial(self, alpha: float, k: int) -> float:
        return gen_binomial(alpha, k)

    def mittag_leffler(self, alpha: OrderLike, z: float) -> float:
        return mittag_leffler(alpha, z, radius=self._ml_radius,
                              max_terms=self._ml_max_terms, tolerance=self._ml_tolerance)

    # --- Regla de la potencia -----------------------------------------

    @staticmethod
    def _power_term(term: GenMonomial, axis: str, order: float) -> Optional[GenMonomial]:
        """
        Aplica D^order sobre `axis` a un monomio.
        order > 0 es derivada (mata constantes), order < 0 integral fraccionaria.
        """
        if order == 0.0:
            return term
        exponent = term.exponent(axis)
        if order > 0 and exponent == 0.0:
            return None
        shifted = normalize_exponent(exponent - order)
        if shifted < 0:
            raise FractionalDomainError(
                f"D^{order:g} of {axis}^{exponent:g} leaves negative exponent {shifted:g}"
            )
        coeff = term.coeff * power_rule_factor(exponent, order)
        if coeff == 0.0:
            return None
        return term.with_exponent(axis, shifted, coeff)

    def frac_partial(self, p: GenPolynomial, axis: str, alpha: OrderLike) -> GenPolynomial:
        """
        D^α_{axis} p termino a término:
        c·x^γ·R -> c·Γ(1+γ)/Γ(1+γ-α)·x^(γ-α)·R, y 0 si γ = 0.
        """
        order = FractionalOrder.coerce(alpha).value
        return p.map_terms(lambda term: self._power_term(term, axis, order))

    def frac_antiderivative_power(self, p: GenPolynomial, axis: str, order: float) -> GenPolynomial:
        """
        Misma fórmula Γ(1+γ)/Γ(1+γ-ν) con ν de cualquier signo;
        ν < 0 es la integral fraccionaria de orden |ν| desde 0.
        """
        return p.map_terms(lambda term: self._power_term(term, axis, float(order)))

    def power_rule(self, gamma_exp: float, order: float) -> Tuple[float, float]:
        """(coeficiente, exponente) de D^order t^gamma_exp; coeficiente 0 si se anula"""
        result = self._power_term(GenMonomial(1.0, (('t', gamma_exp),)), 't', order)
        if result is None:
            return 0.0, 0.0
        return result.coeff, result.exponent('t')

    def classical_partial(self, p: GenPolynomial, axis: str, times: int = 1) -> GenPolynomial:
        """∂^times p / ∂axis^times; es la regla de la potencia con orden 1"""
        result = p
        for _ in range(times):
            result = result.map_terms(lambda term: self._power_term(term, axis, 1.0))
        return result

    # --- Serie del producto --------------------------------------------

    def frac_product_series(self, f: GenPolynomial, h: GenPolynomial, axis: str, alpha: OrderLike,
                            max_terms: Optional[int] = None,
                            split_axis_constant: bool = False) -> GenPolynomial:
        """
        D^α(f·h) = Σ_k C(α,k)·D^(α-k) f·(∂/∂axis)^k h.

        Con exponentes enteros de h sobre `axis` la serie termina en el
        grado de h; si no, se corta en max_terms con TruncationWarning.
        Con split_axis_constant la parte de f que no depende de `axis`
        sale como factor: f0·D^α h.
        """
        order = FractionalOrder.coerce(alpha).value
        cap = max_terms if max_terms is not None else self._product_series_max_terms
        if cap < 1:
            raise ValueError("max_terms must be at least 1")

        result = GenPolynomial.zero(f.declared + h.declared)
        if split_axis_constant:
            constant_part = f.map_terms(lambda term: None if term.exponent(axis) else term)
            f = f - constant_part
            if not constant_part.is_zero:
                result = result + constant_part * self.frac_partial(h, axis, order)

        terminating = all(is_integer_exponent(e) for e in h.exponents_of(axis))
        needed = int(h.degree(axis)) + 1 if terminating else None
        last = GenPolynomial.zero()
        for k in range(cap if needed is None else min(needed, cap)):
            last = self._series_term(f, h, axis, order, k).scale(gen_binomial(order, k))
            result = result + last

        if (needed is None or needed > cap) and not last.is_zero:
            logger.warning("Product series on %s truncated at %d terms", axis, cap)
            warnings.warn(f"Product series truncated at {cap} terms", TruncationWarning, stacklevel=2)
        return result

    def _series_term(self, f: GenPolynomial, h: GenPolynomial, axis: str, order: float,
                     k: int) -> GenPolynomial:
        """
        D^(α-k) f · (∂/∂axis)^k h, monomio a monomio. La derivada clásica
        de h puede tener exponentes negativos; solo el producto debe ser >= 0.
        """
        terms = []
        for u in f.terms:
            lowered = self._power_term(u, axis, order - k)
            if lowered is None:
                continue
            for v in h.terms:
                falling = math.prod(v.exponent(axis) - j for j in range(k))
                if falling == 0.0:
                    continue
                exponents = lowered.exponents + v.exponents + ((axis, -float(k)),)
                terms.append(GenMonomial(lowered.coeff * v.coeff * falling, canonical_exponents(exponents)))
        return GenPolynomial(tuple(terms), f.declared + h.declared)

    # --- Taylor fraccionario -------------------------------------------

    def fractional_taylor(self, f: GenPolynomial, alpha: OrderLike, order_count: int,
                          axis: Optional[str] = None) -> List[float]:
        """
        Coeficientes c_h = (D^{αh} f)(0), h = 0..order_count, por
        derivación repetida. f debe tener exponentes en {0, α, ..., Hα}.
        """
        order = FractionalOrder.coerce(alpha).value
        variables = f.variables
        if len(variables) > 1:
            raise FractionalDomainError("Fractional Taylor expansion needs a single-variable polynomial")
        axis = axis or (variables[0] if variables else 't')
        for exponent in f.exponents_of(axis):
            multiple = exponent / order
            if abs(multiple - round(multiple)) > 1e-9 or round(multiple) > order_count:
                raise FractionalDomainError(
                    f"Exponent {exponent:g} is not a multiple k*{order:g} with k <= {order_count}"
                )

        coefficients = []
        current = f
        for _ in range(order_count + 1):
            coefficients.append(current.constant_value)
            current = self.frac_partial(current, axis, order)
        return coefficients

    def reconstruct_taylor(self, coefficients: Sequence[float], alpha: OrderLike, axis: str = 't') -> GenPolynomial:
        """Σ_h c_h·t^(αh)/Γ(1+αh)"""
        order = FractionalOrder.coerce(alpha).value
        result = GenPolynomial.zero((axis,))
        for index, coeff in enumerate(coefficients):
            if coeff:
                result = result + GenPolynomial.variable(axis, index * order, coeff / gamma(1.0 + index * order))
        return result

    # --- Formas y emparejamiento ---------------------------------------

    def exterior_derivative(self, p: GenPolynomial, alpha: OrderLike,
                            variables: Sequence[str]) -> Tuple[GenPolynomial, ...]:
        """Componentes de d^α p en la base d(x^i)^α"""
        return tuple(self.frac_partial(p, name, alpha) for name in variables)

    def exterior_derivative_mixed(self, p: GenPolynomial, alpha: OrderLike, beta: OrderLike,
                                  base: Sequence[str], fibre: Sequence[str]
                                  ) -> Tuple[Tuple[GenPolynomial, ...], Tuple[GenPolynomial, ...]]:
        """d^{αβ} p = d^α p (coordenadas base) + d^β p (coordenadas de fibra)"""
        return self.exterior_derivative(p, alpha, base), self.exterior_derivative(p, beta, fibre)

    def pairing(self, omega: Sequence[GenPolynomial], field: Sequence[GenPolynomial],
                alpha: OrderLike) -> GenPolynomial:
        """<ω, X> = Γ(1+α)·Σ X^i ω_i"""
        if len(omega) != len(field):
            raise ValueError("Form and vector field have different dimension")
        order = FractionalOrder.coerce(alpha).value
        total = GenPolynomial.zero()
        for form_component, field_component in zip(omega, field):
            total = total + form_component * field_component
        return total.scale(gamma(1.0 + order))

    def pairing_basis(self, i: int, j: int, alpha: OrderLike, variables: Sequence[str]) -> GenPolynomial:
        """D^α_{x^j}(x^i)^α = Γ(1+α)·δ_ij"""
        order = FractionalOrder.coerce(alpha).value
        return self.frac_partial(GenPolynomial.variable(variables[i], order), variables[j], order)
