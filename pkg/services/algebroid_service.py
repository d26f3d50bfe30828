"""
EXPLICACIÓN: Service de algebroides de Leibniz fraccionarios.

- corchete de secciones y acción de las anclas,
- tensor lineal Λ sobre el fibrado dual y su extracción inversa,
- corchete [u,v]_Λ y comprobación muestreada de la correspondencia
  sección <-> función lineal en la fibra,
- ensamblado del sistema (α,β) y sus especializaciones.

Las ξ usan orden β, las x usan orden α.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from config.settings import Config
from domain.entities.algebroid import (
    AlgebroidStructure,
    AlgebroidTag,
    LambdaTensor,
    MixedOrderSystem,
    Section,
)
from domain.entities.polynomial import GenPolynomial
from domain.exceptions import ShapeError, SymmetryError
from domain.special_functions import gamma
from domain.value_objects.fractional_order import FractionalOrder
from services.calculus_service import CalculusService

logger = logging.getLogger(__name__)

OrderLike = Union[FractionalOrder, float]
HamiltonianFactory = Callable[[float, float], GenPolynomial]


class OrderLimit(Enum):
    """Qué orden se lleva a 1"""
    ALPHA_TO_ONE = "alphaToOne"
    BETA_TO_ONE = "betaToOne"


@dataclass(frozen=True)
class LinearityResult:
    """is_linear: bandera y, si procede, las C_ab^d extraídas"""
    is_linear: bool
    structure: Optional[Tuple[Tuple[Tuple[GenPolynomial, ...], ...], ...]] = None


@dataclass(frozen=True)
class CorrespondenceReport:
    """Residuos máximos de las tres identidades en los puntos muestreados"""
    bracket_residual: float
    left_anchor_residual: float
    right_anchor_residual: float
    sample_count: int
    tolerance: float
    points: np.ndarray = field(repr=False, compare=False)

    @property
    def max_residual(self) -> float:
        return max(self.bracket_residual, self.left_anchor_residual, self.right_anchor_residual)

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance

    def to_dict(self) -> Dict[str, float]:
        return {
            'bracket_residual': self.bracket_residual,
            'left_anchor_residual': self.left_anchor_residual,
            'right_anchor_residual': self.right_anchor_residual,
            'max_residual': self.max_residual,
            'sample_count': self.sample_count,
            'tolerance': self.tolerance,
            'passed': self.passed,
        }


class AlgebroidService:
    """Servicio de algebroides de Leibniz fraccionarios"""

    def __init__(self, calculus_service: CalculusService, seed: int = Config.SEED,
                 sample_count: int = Config.CORRESPONDENCE_SAMPLE_COUNT,
                 sample_box: Tuple[float, float] = Config.CORRESPONDENCE_SAMPLE_BOX,
                 tolerance: float = Config.CORRESPONDENCE_TOLERANCE):
        self._calculus = calculus_service
        self._seed = seed
        self._sample_count = sample_count
        self._sample_box = sample_box
        self._tolerance = tolerance

    # --- Secciones -----------------------------------------------------

    @staticmethod
    def _check_section(structure: AlgebroidStructure, section: Section):
        if section.dim != structure.fibre_dim:
            raise ShapeError(f"Section has {section.dim} components, fibre dimension is {structure.fibre_dim}")
        for component in section.components:
            stray = set(component.variables) - set(structure.base_variables)
            if stray:
                raise ShapeError(f"Section components may depend on base coordinates only, found {sorted(stray)}")

    def anchor_action(self, structure: AlgebroidStructure, section: Section, f: GenPolynomial,
                      alpha: OrderLike, right: bool = False) -> GenPolynomial:
        """ρ(σ)(f) = Σ_a σ^a·Σ_i ρ_a^i·D^α_{x^i} f, con ρ1 (o ρ2 si right)"""
        self._check_section(structure, section)
        anchor = structure.rho2 if right else structure.rho1
        gradient = self._calculus.exterior_derivative(f, alpha, structure.base_variables)
        total = GenPolynomial.zero(structure.base_variables)
        for a, coefficient in enumerate(section.components):
            if coefficient.is_zero:
                continue
            for i, derivative in enumerate(gradient):
                if not anchor[a][i].is_zero and not derivative.is_zero:
                    total = total + coefficient * anchor[a][i] * derivative
        return total

    def section_bracket(self, structure: AlgebroidStructure, first: Section, second: Section,
                        alpha: OrderLike) -> Section:
        """
        [σ1,σ2]^b = σ1^a ρ1_a^i D^α_i σ2^b - σ2^a ρ2_a^i D^α_i σ1^b + σ1^a σ2^c C_ac^b
        """
        self._check_section(structure, first)
        self._check_section(structure, second)
        m = structure.fibre_dim
        components = []
        for b in range(m):
            component = self.anchor_action(structure, first, second.components[b], alpha)
            component = component - self.anchor_action(structure, second, first.components[b], alpha, right=True)
            for a in range(m):
                if first.components[a].is_zero:
                    continue
                for c in range(m):
                    coefficient = structure.structure[a][c][b]
                    if not coefficient.is_zero and not second.components[c].is_zero:
                        component = component + first.components[a] * second.components[c] * coefficient
            components.append(component)
        return Section(tuple(components))

    # --- Tensor Λ --------------------------------------------------------

    def assemble_lambda(self, structure: AlgebroidStructure) -> LambdaTensor:
        """A_ab = Σ_d C_ab^d ξ_d; bloques de ancla = ρ1, ρ2"""
        m = structure.fibre_dim
        fibre = [GenPolynomial.variable(name) for name in structure.fibre_variables]
        a_block = []
        for a in range(m):
            row = []
            for b in range(m):
                entry = GenPolynomial.zero(structure.variables)
                for d in range(m):
                    if not structure.structure[a][b][d].is_zero:
                        entry = entry + structure.structure[a][b][d] * fibre[d]
                row.append(entry)
            a_block.append(tuple(row))
        return LambdaTensor(
            a_block=tuple(a_block),
            rho1_block=structure.rho1,
            rho2_block=structure.rho2,
            base_variables=structure.base_variables,
            fibre_variables=structure.fibre_variables,
        )

    def is_linear(self, tensor: LambdaTensor) -> LinearityResult:
        """
        Λ es lineal si cada A_ab es homogéneo de grado exacto 1 en las ξ
        con coeficientes en x; entonces A_ab = C_ab^d ξ_d.
        """
        fibre = tensor.fibre_variables
        fibre_set = set(fibre)
        m = tensor.fibre_dim
        structure = []
        for a in range(m):
            plane = []
            for b in range(m):
                coefficients = [GenPolynomial.zero(tensor.base_variables) for _ in range(m)]
                for term in tensor.a_block[a][b].terms:
                    fibre_factors = [(name, exponent) for name, exponent in term.exponents if name in fibre_set]
                    if len(fibre_factors) != 1 or fibre_factors[0][1] != 1.0:
                        return LinearityResult(False)
                    d = fibre.index(fibre_factors[0][0])
                    coefficients[d] = coefficients[d] + GenPolynomial.monomial(
                        term.coeff, dict(term.without(fibre_set))
                    )
                plane.append(tuple(coefficients))
            structure.append(tuple(plane))
        for block in (tensor.rho1_block, tensor.rho2_block):
            for row in block:
                for entry in row:
                    if set(entry.variables) & fibre_set:
                        return LinearityResult(False)
        return LinearityResult(True, tuple(structure))

    # --- Funciones en el dual --------------------------------------------

    @staticmethod
    def linear_pairing(section: Section, fibre_variables: Sequence[str]) -> GenPolynomial:
        """i_{E*}σ = σ^a ξ_a"""
        total = GenPolynomial.zero(fibre_variables)
        for component, name in zip(section.components, fibre_variables):
            total = total + component * GenPolynomial.variable(name)
        return total

    @staticmethod
    def fibre_lift(section: Section, beta: OrderLike, fibre_variables: Sequence[str]) -> GenPolynomial:
        """(i_{E*}σ)^β = Σ σ^a ξ_a^β / Γ(1+β); su D^β_{ξ_a} es σ^a"""
        order = FractionalOrder.coerce(beta).value
        scale = 1.0 / gamma(1.0 + order)
        total = GenPolynomial.zero(fibre_variables)
        for component, name in zip(section.components, fibre_variables):
            total = total + component * GenPolynomial.variable(name, order, scale)
        return total

    def lambda_bracket(self, tensor: LambdaTensor, u: GenPolynomial, v: GenPolynomial,
                       alpha: OrderLike, beta: OrderLike) -> GenPolynomial:
        """
        [u,v]_Λ = A_ab D^β_a u D^β_b v + ρ1_a^i D^β_a u D^α_i v - ρ2_a^i D^α_i u D^β_a v
        """
        du_x, du_xi = self._calculus.exterior_derivative_mixed(
            u, alpha, beta, tensor.base_variables, tensor.fibre_variables)
        dv_x, dv_xi = self._calculus.exterior_derivative_mixed(
            v, alpha, beta, tensor.base_variables, tensor.fibre_variables)
        total = GenPolynomial.zero(tensor.base_variables + tensor.fibre_variables)
        for a in range(tensor.fibre_dim):
            for b in range(tensor.fibre_dim):
                entry = tensor.a_block[a][b]
                if not (entry.is_zero or du_xi[a].is_zero or dv_xi[b].is_zero):
                    total = total + entry * du_xi[a] * dv_xi[b]
            for i in range(tensor.base_dim):
                left = tensor.rho1_block[a][i]
                if not (left.is_zero or du_xi[a].is_zero or dv_x[i].is_zero):
                    total = total + left * du_xi[a] * dv_x[i]
                right = tensor.rho2_block[a][i]
                if not (right.is_zero or du_x[i].is_zero or dv_xi[a].is_zero):
                    total = total - right * du_x[i] * dv_xi[a]
        return total

    # --- Correspondencia muestreada --------------------------------------

    def sample_points(self, structure: AlgebroidStructure, count: Optional[int] = None,
                      seed: Optional[int] = None) -> np.ndarray:
        rng = np.random.default_rng(self._seed if seed is None else seed)
        low, high = self._sample_box
        return rng.uniform(low, high, size=(count or self._sample_count, len(structure.variables)))

    def correspondence_check(self, structure: AlgebroidStructure, first: Section, second: Section,
                             f: GenPolynomial, alpha: OrderLike, beta: OrderLike,
                             tensor: Optional[LambdaTensor] = None,
                             points: Optional[np.ndarray] = None) -> CorrespondenceReport:
        """
        En cada punto (x, ξ) compara:
            i(σ1,σ2 corchete)        con [ℓσ1, ℓσ2]_Λ
            ρ1(σ)(f)                 con [ℓσ, f]_Λ
            ρ2(σ)(f)                 con -[f, ℓσ]_Λ
        donde ℓσ = (i_{E*}σ)^β, para σ en {σ1, σ2}.
        """
        tensor = tensor or self.assemble_lambda(structure)
        points = self.sample_points(structure) if points is None else np.asarray(points, dtype=float)
        variables = structure.variables
        fibre = structure.fibre_variables

        lifts = [self.fibre_lift(section, beta, fibre) for section in (first, second)]
        bracket_pairs = [(
            self.linear_pairing(self.section_bracket(structure, first, second, alpha), fibre),
            self.lambda_bracket(tensor, lifts[0], lifts[1], alpha, beta),
        )]
        left_pairs, right_pairs = [], []
        for section, lift in zip((first, second), lifts):
            left_pairs.append((
                self.anchor_action(structure, section, f, alpha),
                self.lambda_bracket(tensor, lift, f, alpha, beta),
            ))
            right_pairs.append((
                self.anchor_action(structure, section, f, alpha, right=True),
                -self.lambda_bracket(tensor, f, lift, alpha, beta),
            ))

        def residual(pairs) -> float:
            worst = 0.0
            for expected, actual in pairs:
                difference = (expected - actual).compile(variables)
                for point in points:
                    worst = max(worst, abs(difference(point)))
            return worst

        report = CorrespondenceReport(
            bracket_residual=residual(bracket_pairs),
            left_anchor_residual=residual(left_pairs),
            right_anchor_residual=residual(right_pairs),
            sample_count=len(points),
            tolerance=self._tolerance,
            points=points,
        )
        logger.info("Algebroid correspondence check: max residual %.3e over %d points",
                    report.max_residual, report.sample_count)
        return report

    # --- Sistemas (α,β) ---------------------------------------------------

    def _partials(self, structure: AlgebroidStructure, h: GenPolynomial, alpha: float, beta: float):
        return self._calculus.exterior_derivative_mixed(
            h, alpha, beta, structure.base_variables, structure.fibre_variables)

    def _fibre_equations(self, structure: AlgebroidStructure, lambda_tensor: LambdaTensor,
                         dh_x, dh_xi) -> List[GenPolynomial]:
        equations = []
        for a in range(structure.fibre_dim):
            component = GenPolynomial.zero(structure.variables)
            for b in range(structure.fibre_dim):
                entry = lambda_tensor.a_block[a][b]
                if not entry.is_zero and not dh_xi[b].is_zero:
                    component = component + entry * dh_xi[b]
            for i in range(structure.base_dim):
                if not structure.rho1[a][i].is_zero and not dh_x[i].is_zero:
                    component = component + structure.rho1[a][i] * dh_x[i]
            equations.append(component)
        return equations

    @staticmethod
    def _base_equations(structure: AlgebroidStructure, anchor, sign: float, dh_xi) -> List[GenPolynomial]:
        equations = []
        for i in range(structure.base_dim):
            component = GenPolynomial.zero(structure.variables)
            for a in range(structure.fibre_dim):
                if not anchor[a][i].is_zero and not dh_xi[a].is_zero:
                    component = component + anchor[a][i] * dh_xi[a]
            equations.append(component.scale(sign))
        return equations

    def dynamical_system(self, structure: AlgebroidStructure, h: GenPolynomial, alpha: OrderLike,
                         beta: OrderLike, initial_state: Optional[Sequence[float]] = None,
                         label: str = 'algebroid',
                         hamiltonian_factory: Optional[HamiltonianFactory] = None) -> MixedOrderSystem:
        """
        D^β ξ_a = C_ab^d ξ_d D^β_{ξ_b} h + ρ1_a^i D^α_{x^i} h
        D^α x^i = -ρ2_a^i D^β_{ξ_a} h
        """
        alpha = FractionalOrder.coerce(alpha)
        beta = FractionalOrder.coerce(beta)
        dh_x, dh_xi = self._partials(structure, h, alpha.value, beta.value)
        lambda_tensor = self.assemble_lambda(structure)
        return MixedOrderSystem(
            alpha=alpha,
            beta=beta,
            rhs_x=tuple(self._base_equations(structure, structure.rho2, -1.0, dh_xi)),
            rhs_xi=tuple(self._fibre_equations(structure, lambda_tensor, dh_x, dh_xi)),
            base_variables=structure.base_variables,
            fibre_variables=structure.fibre_variables,
            initial_state=tuple(initial_state) if initial_state is not None else None,
            label=label,
            structure=structure,
            hamiltonian=h,
            hamiltonian_factory=hamiltonian_factory,
        )

    def specialize_order(self, system: MixedOrderSystem, which: OrderLimit) -> MixedOrderSystem:
        """
        Lleva α (o β) a 1: reconstruye h con la fábrica si existe y reensambla
        con derivadas clásicas en las coordenadas afectadas.
        """
        which = OrderLimit(which)
        if system.structure is None or system.hamiltonian is None:
            raise ValueError("Only systems assembled from an algebroid structure can be specialized")
        alpha = 1.0 if which is OrderLimit.ALPHA_TO_ONE else system.alpha.value
        beta = 1.0 if which is OrderLimit.BETA_TO_ONE else system.beta.value
        factory = system.hamiltonian_factory
        h = factory(alpha, beta) if factory is not None else system.hamiltonian
        return self.dynamical_system(system.structure, h, alpha, beta, system.initial_state,
                                     system.label, factory)

    def _anchor_form_system(self, structure: AlgebroidStructure, h: GenPolynomial, alpha: OrderLike,
                            beta: OrderLike, tag: AlgebroidTag,
                            initial_state: Optional[Sequence[float]], label: str) -> MixedOrderSystem:
        if structure.tag is not tag:
            raise SymmetryError(f"Structure must be tagged {tag.value}, found {structure.tag.value}")
        alpha = FractionalOrder.coerce(alpha)
        beta = FractionalOrder.coerce(beta)
        dh_x, dh_xi = self._partials(structure, h, alpha.value, beta.value)
        lambda_tensor = self.assemble_lambda(structure)
        return MixedOrderSystem(
            alpha=alpha,
            beta=beta,
            rhs_x=tuple(self._base_equations(structure, structure.rho1, 1.0, dh_xi)),
            rhs_xi=tuple(self._fibre_equations(structure, lambda_tensor, dh_x, dh_xi)),
            base_variables=structure.base_variables,
            fibre_variables=structure.fibre_variables,
            initial_state=tuple(initial_state) if initial_state is not None else None,
            label=label,
            structure=structure,
            hamiltonian=h,
        )

    def pre_lie_form_system(self, structure: AlgebroidStructure, h: GenPolynomial, alpha: OrderLike,
                            beta: OrderLike, initial_state: Optional[Sequence[float]] = None,
                            label: str = 'pre-lie') -> MixedOrderSystem:
        """Forma pre-Lie: las x se escriben con ρ1 (ρ1 = -ρ2)"""
        return self._anchor_form_system(structure, h, alpha, beta, AlgebroidTag.PRE_LIE, initial_state, label)

    def symmetric_form_system(self, structure: AlgebroidStructure, h: GenPolynomial, alpha: OrderLike,
                              beta: OrderLike, initial_state: Optional[Sequence[float]] = None,
                              label: str = 'symmetric') -> MixedOrderSystem:
        """Forma simétrica: C_ab^d = C_ba^d, x con +ρ1"""
        return self._anchor_form_system(structure, h, alpha, beta, AlgebroidTag.SYMMETRIC, initial_state, label)
