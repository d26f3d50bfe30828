"""
EXPLICACIÓN: Service con el catálogo de sistemas predefinidos.

Cada receta arma su lado derecho con BracketService o AlgebroidService
(nunca con fórmulas por componente), de modo que el registro es a la vez
una prueba de regresión del ensamblado. Las variantes literales
(--as-published) reproducen el sistema tal como se publicó cuando difiere
de la regla de ensamblado, y la tabla de expectativas fija a mano los
sistemas de referencia para compararlos al verificar.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from domain.entities.algebroid import AlgebroidStructure, LambdaTensor, MixedOrderSystem
from domain.entities.polynomial import GenPolynomial
from domain.entities.system_entry import BuiltSystem, SystemKind, SystemRegistryEntry
from domain.entities.tensor_field import (
    FracVectorField,
    FractionalSystemSpec,
    SymmetryTag,
    TensorField2,
    coordinate_names,
)
from domain.exceptions import ConfigurationError
from domain.special_functions import gamma
from interfaces.repositories.system_repository import SystemRepository
from services.algebroid_service import AlgebroidService
from services.bracket_service import BracketService

logger = logging.getLogger(__name__)

X = coordinate_names(3)
XI = coordinate_names(3, 'xi')

# s_k ∈ {-1, 1}, γ1 + γ2 + γ3 = 0
GRADIENT_SIGNS = (1.0, 1.0, -1.0)
GRADIENT_GAMMAS = (0.2, 0.2, -0.4)
METRIPLECTIC_WEIGHTS = (1.0, 1.0, 1.0)


def _x(index: int, exponent: float = 1.0, coeff: float = 1.0) -> GenPolynomial:
    return GenPolynomial.variable(X[index - 1], exponent, coeff)


def _xi(index: int, exponent: float = 1.0, coeff: float = 1.0) -> GenPolynomial:
    return GenPolynomial.variable(XI[index - 1], exponent, coeff)


class SystemCatalogService:
    """Recetas de los sistemas predefinidos y su registro"""

    def __init__(self, bracket_service: BracketService, algebroid_service: AlgebroidService,
                 system_repository: SystemRepository):
        self.bracket_service = bracket_service
        self.algebroid_service = algebroid_service
        self.system_repository = system_repository

    # --- Datos de las estructuras -----------------------------------------

    @staticmethod
    def gradient_tensor(signs: Sequence[float] = GRADIENT_SIGNS,
                        gammas: Sequence[float] = GRADIENT_GAMMAS) -> TensorField2:
        """B = diag(s_k γ_k)"""
        if abs(sum(gammas)) > 1e-12:
            raise ConfigurationError("Gradient weights must satisfy γ1 + γ2 + γ3 = 0")
        if any(s not in (-1.0, 1.0) for s in signs):
            raise ConfigurationError("Gradient signs must be -1 or 1")
        return TensorField2.diagonal([s * g for s, g in zip(signs, gammas)], X)

    @staticmethod
    def rotation_poisson() -> TensorField2:
        return TensorField2.from_rows([
            [0, _x(3), -_x(2)],
            [-_x(3), 0, _x(1)],
            [_x(2), -_x(1), 0],
        ], X, SymmetryTag.SKEW)

    @staticmethod
    def metriplectic_metric(weights: Sequence[float] = METRIPLECTIC_WEIGHTS) -> TensorField2:
        a1, a2, a3 = weights
        return TensorField2.from_rows([
            [-a2 * _x(2, 2) - a3 * _x(3, 2), a1 * a2 * _x(1) * _x(2), a1 * a3 * _x(1) * _x(3)],
            [a1 * a2 * _x(1) * _x(2), -a1 * _x(1, 2) - a3 * _x(3, 2), a2 * a3 * _x(2) * _x(3)],
            [a1 * a3 * _x(1) * _x(3), a2 * a3 * _x(2) * _x(3), -a1 * _x(1, 2) - a2 * _x(2, 2)],
        ], X, SymmetryTag.SYMMETRIC)

    @staticmethod
    def metriplectic_hamiltonian(alpha: float, weights: Sequence[float] = METRIPLECTIC_WEIGHTS) -> GenPolynomial:
        """h = Σ (a_i + 1)(x^i)^α"""
        total = GenPolynomial.zero(X)
        for index, weight in enumerate(weights, start=1):
            total = total + _x(index, alpha, weight + 1.0)
        return total

    @staticmethod
    def maxwell_bloch_tensors() -> Tuple[TensorField2, TensorField2]:
        poisson = TensorField2.from_rows([
            [0, 1, 0],
            [-1, 0, _x(1)],
            [0, -_x(1), 0],
        ], X, SymmetryTag.SKEW)
        metric = TensorField2.diagonal([0, -_x(3, 2), -_x(2, 2)], X)
        return poisson, metric

    @staticmethod
    def maxwell_bloch_potentials(alpha: float, normalized: bool = True) -> Tuple[GenPolynomial, GenPolynomial]:
        """
        h1 = (x²)^{1+α} + (x³)^{1+α}, h2 = (x¹)^{1+α} + (x³)^α.
        Normalizados, los términos de exponente 1+α se dividen por 1+α para
        que D^α dé exactamente Γ(1+α)·x.
        """
        scale = 1.0 / (1.0 + alpha) if normalized else 1.0
        h1 = _x(2, 1.0 + alpha, scale) + _x(3, 1.0 + alpha, scale)
        h2 = _x(1, 1.0 + alpha, scale) + _x(3, alpha)
        return h1, h2

    @staticmethod
    def example_lambda() -> LambdaTensor:
        """Tensor lineal sobre R^3 × (R^3)*: bloque A = P^β y las dos anclas"""
        return LambdaTensor(
            a_block=(
                (0, -_xi(3) * _x(3), _xi(2) * _x(2)),
                (_xi(3) * _x(3), 0, -_xi(1) * _x(1)),
                (-_xi(2) * _x(2), _xi(1) * _x(1), 0),
            ),
            rho1_block=(
                (0, -_x(3), _x(2)),
                (_x(3), 0, 0),
                (-_x(2), 0, 0),
            ),
            # La matriz publicada de ρ2 tiene filas por coordenada base i; aquí va traspuesta
            rho2_block=(
                (0, 1, 0),
                (-1, 0, _x(1)),
                (0, -_x(1), 0),
            ),
            base_variables=X,
            fibre_variables=XI,
        )

    def example_algebroid(self) -> AlgebroidStructure:
        """Estructura extraída del tensor lineal (C_ab^d desde el bloque A)"""
        tensor = self.example_lambda()
        linearity = self.algebroid_service.is_linear(tensor)
        if not linearity.is_linear:
            raise ConfigurationError("Built-in algebroid tensor is not linear")
        return AlgebroidStructure(
            base_dim=3,
            fibre_dim=3,
            structure=linearity.structure,
            rho1=tensor.rho1_block,
            rho2=tensor.rho2_block,
            base_variables=X,
            fibre_variables=XI,
        )

    @staticmethod
    def example_algebroid_hamiltonian(alpha: float, beta: float) -> GenPolynomial:
        """h = (x²)^α ξ2^β + (x³)^α ξ3^β"""
        return _x(2, alpha) * _xi(2, beta) + _x(3, alpha) * _xi(3, beta)

    # --- Recetas -------------------------------------------------------------

    def _gradient_frac(self, alpha: float, beta: float, literal: bool) -> BuiltSystem:
        h = _x(1) * _x(2) * _x(3)
        field = self.bracket_service.hamiltonian_field(self.gradient_tensor(), h, alpha)
        return FractionalSystemSpec(alpha, field, 'gradient-frac')

    def _gradient_frac_alpha(self, alpha: float, beta: float, literal: bool) -> BuiltSystem:
        tensor = self.gradient_tensor()
        if literal:
            g = gamma(1.0 + alpha)
            weights = [tensor.entry(k, k).constant_value for k in range(3)]
            field = FracVectorField((
                _x(2) * _x(3) * (g * weights[0]),
                _x(1) * _x(3) * (g * weights[1]),
                _x(1) * _x(2) * (g * weights[2]),
            ), X)
            return FractionalSystemSpec(alpha, field, 'gradient-frac-alpha', metadata={'literal': True})
        h = _x(1, alpha) * _x(2, alpha) * _x(3, alpha)
        field = self.bracket_service.hamiltonian_field(tensor, h, alpha)
        return FractionalSystemSpec(alpha, field, 'gradient-frac-alpha')

    def _metriplectic_frac(self, alpha: float, beta: float, literal: bool) -> BuiltSystem:
        field = self.bracket_service.metriplectic_field(
            self.rotation_poisson(), self.metriplectic_metric(), self.metriplectic_hamiltonian(alpha), alpha)
        return FractionalSystemSpec(alpha, field, 'metriplectic-frac')

    def _maxwell_bloch(self, alpha: float, normalized: bool, label: str) -> BuiltSystem:
        poisson, metric = self.maxwell_bloch_tensors()
        h1, h2 = self.maxwell_bloch_potentials(alpha, normalized)
        field = self.bracket_service.two_potential_field(poisson, metric, h1, h2, alpha)
        return FractionalSystemSpec(alpha, field, label)

    def _maxwell_bloch_frac(self, alpha: float, beta: float, literal: bool) -> BuiltSystem:
        return self._maxwell_bloch(alpha, True, 'maxwell-bloch-frac')

    def _maxwell_bloch_raw(self, alpha: float, beta: float, literal: bool) -> BuiltSystem:
        return self._maxwell_bloch(alpha, False, 'maxwell-bloch-raw')

    def _algebroid_mb(self, alpha: float, beta: float, literal: bool) -> BuiltSystem:
        if literal:
            return self.literal_algebroid_system(alpha, beta)
        return self.algebroid_service.dynamical_system(
            self.example_algebroid(),
            self.example_algebroid_hamiltonian(alpha, beta),
            alpha, beta,
            label='algebroid-mb',
            hamiltonian_factory=self.example_algebroid_hamiltonian,
        )

    @staticmethod
    def literal_algebroid_system(alpha: float, beta: float) -> MixedOrderSystem:
        """
        Lista de componentes tal como se publicó, sin la fila repetida de ξ3
        (se conserva la de signo positivo, la que coincide con la forma matricial).
        """
        ga, gb = gamma(1.0 + alpha), gamma(1.0 + beta)
        xi1 = (gb * (-_xi(3) * _x(2, alpha) * _x(3) + _xi(2) * _x(2) * _x(3, alpha))
               + ga * (-_x(3) * _xi(2, beta) + _x(2) * _xi(3, beta)))
        return MixedOrderSystem(
            alpha=alpha,
            beta=beta,
            rhs_x=(
                _x(2, alpha, -gb),
                _x(1) * _x(3, alpha, -gb),
                _x(1) * _x(3, alpha, gb),
            ),
            rhs_xi=(
                xi1,
                _xi(1) * _x(3, alpha, -gb),
                _xi(1) * _x(2, alpha, gb),
            ),
            base_variables=X,
            fibre_variables=XI,
            label='algebroid-mb-literal',
        )

    # --- Registro ------------------------------------------------------------

    def _entries(self) -> List[SystemRegistryEntry]:
        gradient_weights = [s * g for s, g in zip(GRADIENT_SIGNS, GRADIENT_GAMMAS)]
        return [
            SystemRegistryEntry(
                key='gradient-frac',
                description='Diagonal Leibniz tensor diag(s_k g_k) with h = x1*x2*x3',
                reference='fractional gradient system, h = x1 x2 x3',
                equation='D^alpha x_k = s_k g_k D^alpha_{x_k} h, h = x1 x2 x3',
                kind=SystemKind.FIELD,
                default_initial_state=(1.0, 1.0, 1.0),
                builder=self._gradient_frac,
                parameters={'s*gamma': gradient_weights},
            ),
            SystemRegistryEntry(
                key='gradient-frac-alpha',
                description='Same tensor with h = (x1*x2*x3)^alpha, assembled by the power rule',
                reference='fractional gradient system, h = (x1 x2 x3)^alpha',
                equation='D^alpha x_k = s_k g_k D^alpha_{x_k} h, h = (x1 x2 x3)^alpha',
                kind=SystemKind.FIELD,
                default_initial_state=(1.0, 1.0, 1.0),
                builder=self._gradient_frac_alpha,
                has_literal_variant=True,
                parameters={'s*gamma': gradient_weights},
            ),
            SystemRegistryEntry(
                key='metriplectic-frac',
                description='Rotation Poisson tensor plus quadratic metric, h = sum (a_i+1) x_i^alpha',
                reference='fractional metriplectic system',
                equation='D^alpha x = Gamma(1+alpha) (P + g) (a1+1, a2+1, a3+1)^T',
                kind=SystemKind.FIELD,
                default_initial_state=(1.0, 0.5, 0.25),
                builder=self._metriplectic_frac,
                parameters={'a': list(METRIPLECTIC_WEIGHTS)},
            ),
            SystemRegistryEntry(
                key='maxwell-bloch-frac',
                description='Two-potential system with normalized potentials',
                reference='fractional Maxwell-Bloch equations',
                equation='D^alpha x1 = G x2, D^alpha x2 = G x1 x3, D^alpha x3 = -G (x1 x2 + x2^2), G = Gamma(1+alpha)',
                kind=SystemKind.FIELD,
                default_initial_state=(1.0, 0.5, 0.5),
                builder=self._maxwell_bloch_frac,
            ),
            SystemRegistryEntry(
                key='maxwell-bloch-raw',
                description='Two-potential system with the potentials taken as published',
                reference='fractional Maxwell-Bloch potentials through the power rule',
                equation='D^alpha x = P D^alpha h1 + g D^alpha h2, h1 = x2^(1+alpha) + x3^(1+alpha), h2 = x1^(1+alpha) + x3^alpha',
                kind=SystemKind.FIELD,
                default_initial_state=(1.0, 0.5, 0.5),
                builder=self._maxwell_bloch_raw,
            ),
            SystemRegistryEntry(
                key='algebroid-mb',
                description='(alpha,beta) system of the linear Leibniz algebroid on R^3 x (R^3)*',
                reference='(alpha,beta)-fractional dynamical system of the Maxwell-Bloch algebroid',
                equation='D^beta xi_a = C_ab^d xi_d D^beta_{xi_b} h + rho1_a^i D^alpha_{x_i} h, D^alpha x_i = -rho2_a^i D^beta_{xi_a} h',
                kind=SystemKind.MIXED,
                default_initial_state=(0.0, 1.0, 1.0, 0.0, 1.0, 1.0),
                builder=self._algebroid_mb,
                has_literal_variant=True,
            ),
        ]

    def register_builtin(self) -> int:
        """Registra las recetas que falten; retorna cuántas se agregaron"""
        added = 0
        for entry in self._entries():
            if not self.system_repository.exists_by_key(entry.key):
                self.system_repository.save(entry)
                added += 1
        logger.debug("Registered %d built-in systems", added)
        return added

    def list_entries(self) -> List[SystemRegistryEntry]:
        return self.system_repository.find_all()

    def get_entry(self, key: str) -> SystemRegistryEntry:
        entry = self.system_repository.find_by_key(key)
        if entry is None:
            known = [item.key for item in self.system_repository.find_all()]
            raise ConfigurationError(f"Unknown system '{key}'. Available: {known}")
        return entry

    def build(self, key: str, alpha: Optional[float] = None, beta: Optional[float] = None,
              as_published: bool = False) -> BuiltSystem:
        return self.get_entry(key).build(alpha, beta, as_published)

    def tensor_for(self, key: str) -> TensorField2:
        """Tensor de corchete de un sistema de campo (P + g en los metriplécticos)"""
        entry = self.get_entry(key)
        if entry.is_mixed:
            raise ConfigurationError(f"System '{key}' is an algebroid system; it has no single bracket tensor")
        if key.startswith('gradient'):
            return self.gradient_tensor()
        if key == 'metriplectic-frac':
            return self.rotation_poisson() + self.metriplectic_metric()
        poisson, metric = self.maxwell_bloch_tensors()
        return poisson + metric

    # --- Tabla de expectativas ----------------------------------------------

    @staticmethod
    def expectation_table(alpha: float) -> Dict[str, FracVectorField]:
        """Sistemas de referencia escritos a mano, coeficiente por coeficiente"""
        ratio = gamma(2.0) / gamma(2.0 - alpha)
        g = gamma(1.0 + alpha)
        w = [s * k for s, k in zip(GRADIENT_SIGNS, GRADIENT_GAMMAS)]
        return {
            'gradient-frac': FracVectorField((
                _x(1, 1.0 - alpha, ratio * w[0]) * _x(2) * _x(3),
                _x(2, 1.0 - alpha, ratio * w[1]) * _x(1) * _x(3),
                _x(3, 1.0 - alpha, ratio * w[2]) * _x(1) * _x(2),
            ), X),
            'maxwell-bloch-frac': FracVectorField((
                _x(2, 1.0, g),
                _x(1, 1.0, g) * _x(3),
                _x(1, 1.0, -g) * _x(2) + _x(2, 2.0, -g),
            ), X),
        }

    def check_expectations(self, alpha: float) -> Dict[str, bool]:
        results = {}
        for key, expected in self.expectation_table(alpha).items():
            built = self.build(key, alpha)
            results[key] = built.rhs.is_close(expected)
            if not results[key]:
                logger.warning("Registry system %s differs from its expectation at alpha=%g", key, alpha)
        return results
