"""
EXPLICACIÓN: Service de corchetes fraccionarios sobre R^n: corchete de
Leibniz [f,g] = B(d^α f, d^α g), campos hamiltonianos, metriplécticos y de
dos potenciales, y la verificación de la regla del producto.
Las ecuaciones coordenadas usan [x^i, h] = B^{ij}·D^α_{x^j} h.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from domain.entities.polynomial import GenPolynomial
from domain.entities.tensor_field import FracVectorField, TensorField2
from domain.exceptions import ShapeError, SymmetryError
from domain.value_objects.fractional_order import FractionalOrder
from services.calculus_service import CalculusService

logger = logging.getLogger(__name__)

OrderLike = Union[FractionalOrder, float]


class ProductSide(Enum):
    """Factor del corchete donde está el producto: [f·h, g] o [f, g·h]"""
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class ProductIdentityReport:
    """Resultado de comparar el corchete de un producto con su serie"""
    side: ProductSide
    direct: GenPolynomial
    series: GenPolynomial
    residual: GenPolynomial

    @property
    def holds(self) -> bool:
        return self.direct.is_close(self.series)


class BracketService:
    """Servicio de estructuras de corchete fraccionarias"""

    def __init__(self, calculus_service: CalculusService):
        self._calculus = calculus_service

    def _gradient(self, tensor: TensorField2, p: GenPolynomial, alpha: OrderLike):
        return self._calculus.exterior_derivative(p, alpha, tensor.variables)

    @staticmethod
    def _contract(tensor: TensorField2, left, right) -> GenPolynomial:
        total = GenPolynomial.zero(tensor.variables)
        for i in range(tensor.dim):
            if left[i].is_zero:
                continue
            for j in range(tensor.dim):
                entry = tensor.entries[i][j]
                if entry.is_zero or right[j].is_zero:
                    continue
                total = total + entry * left[i] * right[j]
        return total

    def leibniz_bracket(self, tensor: TensorField2, f: GenPolynomial, g: GenPolynomial,
                        alpha: OrderLike) -> GenPolynomial:
        """[f,g]^α = Σ_{i,j} B^{ij}·D^α_{x^i} f·D^α_{x^j} g"""
        return self._contract(tensor, self._gradient(tensor, f, alpha), self._gradient(tensor, g, alpha))

    def _apply(self, tensor: TensorField2, gradient) -> tuple:
        components = []
        for i in range(tensor.dim):
            component = GenPolynomial.zero(tensor.variables)
            for j in range(tensor.dim):
                entry = tensor.entries[i][j]
                if not entry.is_zero and not gradient[j].is_zero:
                    component = component + entry * gradient[j]
            components.append(component)
        return tuple(components)

    def hamiltonian_field(self, tensor: TensorField2, h: GenPolynomial, alpha: OrderLike) -> FracVectorField:
        """X^i = Σ_j B^{ij}·D^α_{x^j} h"""
        return FracVectorField(self._apply(tensor, self._gradient(tensor, h, alpha)), tensor.variables)

    def metriplectic_field(self, poisson: TensorField2, metric: TensorField2, h: GenPolynomial,
                           alpha: OrderLike) -> FracVectorField:
        """X^i = Σ_j (P^{ij} + g^{ij})·D^α_{x^j} h, con P antisimétrico y g simétrico"""
        self._require(poisson, metric)
        return self.hamiltonian_field(poisson + metric, h, alpha)

    def two_potential_field(self, poisson: TensorField2, metric: TensorField2, h1: GenPolynomial,
                            h2: GenPolynomial, alpha: OrderLike) -> FracVectorField:
        """X^i = Σ_j P^{ij}·D^α_{x^j} h1 + Σ_j g^{ij}·D^α_{x^j} h2"""
        if poisson.dim != metric.dim:
            raise ShapeError("P and g must have the same dimension")
        conservative = self._apply(poisson, self._gradient(poisson, h1, alpha))
        dissipative = self._apply(metric, self._gradient(metric, h2, alpha))
        return FracVectorField(tuple(a + b for a, b in zip(conservative, dissipative)), poisson.variables)

    @staticmethod
    def _require(poisson: TensorField2, metric: TensorField2):
        if poisson.dim != metric.dim:
            raise ShapeError("P and g must have the same dimension")
        if not poisson.is_skew():
            raise SymmetryError("Metriplectic P must be skew-symmetric")
        if not metric.is_symmetric():
            raise SymmetryError("Metriplectic g must be symmetric")

    def literal_coordinate_field(self, tensor: TensorField2, h: GenPolynomial,
                                 alpha: OrderLike) -> FracVectorField:
        """
        [x^i, h]^α evaluado con el corchete completo: incluye el factor
        D^α_{x^i} x^i = Γ(2)/Γ(2-α)·(x^i)^(1-α) que las ecuaciones coordenadas omiten.
        """
        components = tuple(
            self.leibniz_bracket(tensor, GenPolynomial.variable(name), h, alpha)
            for name in tensor.variables
        )
        return FracVectorField(components, tensor.variables)

    def verify_product_identity(self, tensor: TensorField2, f: GenPolynomial, h: GenPolynomial,
                                g: GenPolynomial, alpha: OrderLike, max_terms: Optional[int] = None,
                                side: ProductSide = ProductSide.LEFT) -> ProductIdentityReport:
        """
        Compara [f·h, g]^α (o [g, f·h]^α) con la misma contracción usando la
        serie de Leibniz fraccionaria para D^α_{x^i}(f·h) en cada eje.
        """
        side = ProductSide(side)
        order = FractionalOrder.coerce(alpha).value
        product = f * h
        series_gradient = tuple(
            self._calculus.frac_product_series(f, h, name, order, max_terms=max_terms, split_axis_constant=True)
            for name in tensor.variables
        )
        other_gradient = self._gradient(tensor, g, order)
        if side is ProductSide.LEFT:
            direct = self.leibniz_bracket(tensor, product, g, order)
            series = self._contract(tensor, series_gradient, other_gradient)
        else:
            direct = self.leibniz_bracket(tensor, g, product, order)
            series = self._contract(tensor, other_gradient, series_gradient)
        residual = (direct - series).chop(1e-12 * max(1.0, direct.max_abs_coeff()))
        report = ProductIdentityReport(side=side, direct=direct, series=series, residual=residual)
        logger.debug("Product identity (%s): residual %s", side.value, residual)
        return report

    def classical_tangency(self, tensor: TensorField2, h: GenPolynomial) -> GenPolynomial:
        """Σ_i (B∇h)_i ∂h/∂x_i con derivadas clásicas; cero para B antisimétrico"""
        gradient = tuple(self._calculus.classical_partial(h, name) for name in tensor.variables)
        return self._contract(tensor, gradient, gradient)
