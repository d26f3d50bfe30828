"""
EXPLICACIÓN: Service que ejecuta las suites de verificación de `verify`.

Cada suite devuelve una lista de CheckResult con su residuo y tolerancia.
Las suites son independientes y pueden correr en paralelo; el informe
conserva siempre el orden de las suites pedidas. El muestreo aleatorio
usa una semilla fija (FRACLEI_SEED) que se imprime en el informe.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Sequence

import numpy as np

from domain.entities.algebroid import AlgebroidStructure, AlgebroidTag, Section
from domain.entities.ivp import FractionalIVP, SolverConfig, SolverMethod
from domain.entities.polynomial import GenPolynomial
from domain.entities.tensor_field import SymmetryTag, TensorField2, coordinate_names
from domain.entities.verification import CheckResult, Suite, VerificationReport
from domain.exceptions import FracLeiError
from domain.special_functions import gamma
from services.algebroid_service import AlgebroidService, OrderLimit
from services.bracket_service import BracketService
from services.calculus_service import CalculusService
from services.oracle_service import OracleService
from services.solver_service import SolverService
from services.system_catalog_service import SystemCatalogService

logger = logging.getLogger(__name__)

ORACLE_EXPONENTS = (0.5, 1.0, 2.0, 2.5)
ORACLE_ORDERS = (0.3, 0.5, 0.8)
ORACLE_TOLERANCE = 1e-2
SKEW_SAMPLES = 200
SYMBOLIC_TOLERANCE = 1e-12
SOLVER_STEP = 1e-3


class VerificationService:
    """Ejecuta las suites de comprobaciones"""

    def __init__(self, calculus_service: CalculusService, oracle_service: OracleService,
                 bracket_service: BracketService, algebroid_service: AlgebroidService,
                 solver_service: SolverService, catalog_service: SystemCatalogService,
                 seed: int = 42, parallel: bool = False):
        self.calculus_service = calculus_service
        self.oracle_service = oracle_service
        self.bracket_service = bracket_service
        self.algebroid_service = algebroid_service
        self.solver_service = solver_service
        self.catalog_service = catalog_service
        self.seed = seed
        self.parallel = parallel

    def run(self, suite_name: str = 'all') -> VerificationReport:
        suites = Suite.parse(suite_name)
        runners: Dict[Suite, Callable[[], List[CheckResult]]] = {
            Suite.RULES: self.rules_suite,
            Suite.BRACKETS: self.brackets_suite,
            Suite.ALGEBROID: self.algebroid_suite,
            Suite.SOLVER: self.solver_suite,
        }
        report = VerificationReport(seed=self.seed, suites=suites)
        if self.parallel and len(suites) > 1:
            with ThreadPoolExecutor(max_workers=len(suites)) as executor:
                futures = [executor.submit(self._guarded, suite, runners[suite]) for suite in suites]
                for future in futures:
                    report.checks.extend(future.result())
        else:
            for suite in suites:
                report.checks.extend(self._guarded(suite, runners[suite]))
        logger.info("Verification %s: %d checks, %d failed", suite_name, len(report.checks), len(report.failures))
        return report

    @staticmethod
    def _guarded(suite: Suite, runner: Callable[[], List[CheckResult]]) -> List[CheckResult]:
        """Un error inesperado cuenta como comprobación fallida, no aborta el informe"""
        try:
            return runner()
        except (FracLeiError, ArithmeticError, ValueError) as e:
            logger.exception("Suite %s crashed", suite.value)
            return [CheckResult(suite, 'suite-completed', False, detail=str(e))]

    @staticmethod
    def _check(suite: Suite, name: str, residual: float, tolerance: float, detail: str = '') -> CheckResult:
        passed = math.isfinite(residual) and residual <= tolerance
        return CheckResult(suite, name, passed, float(residual), tolerance, detail)

    @staticmethod
    def _symbolic_residual(left: GenPolynomial, right: GenPolynomial) -> float:
        return (left - right).max_abs_coeff()

    # --- rules ----------------------------------------------------------------

    def rules_suite(self) -> List[CheckResult]:
        suite = Suite.RULES
        checks = []
        for gamma_exp in ORACLE_EXPONENTS:
            for alpha in ORACLE_ORDERS:
                if gamma_exp < alpha:
                    continue
                comparison = self.oracle_service.compare_power_rule(gamma_exp, alpha, step=SOLVER_STEP)
                checks.append(self._check(
                    suite, f"power-rule-vs-gl[gamma={gamma_exp:g},alpha={alpha:g}]",
                    comparison.max_relative_error, ORACLE_TOLERANCE))

        z_values = np.linspace(-3.0, 3.0, 13)
        ml_error = max(abs(self.calculus_service.mittag_leffler(1.0, z) - math.exp(z)) for z in z_values)
        checks.append(self._check(suite, "mittag-leffler-order-one-is-exp", ml_error, 1e-10))
        half = abs(self.calculus_service.mittag_leffler(0.5, 1.0) - math.exp(1.0) * (1.0 + math.erf(1.0)))
        checks.append(self._check(suite, "mittag-leffler-half-order", half, 1e-10))
        checks.append(self._check(suite, "gamma-half-is-sqrt-pi", abs(gamma(0.5) - math.sqrt(math.pi)), 1e-10))

        t = GenPolynomial.variable('t')
        for alpha in ORACLE_ORDERS:
            series = self.calculus_service.frac_product_series(t, t, 't', alpha)
            direct = self.calculus_service.frac_partial(t * t, 't', alpha)
            checks.append(self._check(suite, f"product-series-exact[alpha={alpha:g}]",
                                      self._symbolic_residual(series, direct), SYMBOLIC_TOLERANCE))

        for alpha in ORACLE_ORDERS:
            f = GenPolynomial.variable('t', 2 * alpha, 3.0) + GenPolynomial.variable('t', alpha) + 2.0
            coefficients = self.calculus_service.fractional_taylor(f, alpha, 2)
            rebuilt = self.calculus_service.reconstruct_taylor(coefficients, alpha)
            checks.append(self._check(suite, f"fractional-taylor-round-trip[alpha={alpha:g}]",
                                      self._symbolic_residual(rebuilt, f), SYMBOLIC_TOLERANCE))

        checks.append(self._classical_limit_check(suite))
        return checks

    def _classical_limit_check(self, suite: Suite) -> CheckResult:
        p = GenPolynomial.variable('x1', 2.0) * GenPolynomial.variable('x2')
        point = {'x1': 0.7, 'x2': 1.3}
        classical = self.calculus_service.classical_partial(p, 'x1').eval(point)
        errors = [abs(self.calculus_service.frac_partial(p, 'x1', alpha).eval(point) - classical)
                  for alpha in (0.9, 0.99, 0.999)]
        monotone = errors[0] > errors[1] > errors[2]
        return CheckResult(suite, "classical-limit-monotone", monotone, errors[-1],
                           detail=', '.join(f"{error:.3e}" for error in errors))

    # --- brackets --------------------------------------------------------------

    def brackets_suite(self) -> List[CheckResult]:
        suite = Suite.BRACKETS
        checks = []
        for alpha in (0.3, 0.5, 0.8, 1.0):
            results = self.catalog_service.check_expectations(alpha)
            for key, holds in results.items():
                checks.append(CheckResult(suite, f"registry-expectation[{key},alpha={alpha:g}]", holds))

        for alpha in (0.5, 0.8):
            checks.append(self._metriplectic_check(suite, alpha))

        checks.extend(self._skew_checks(suite))

        b = TensorField2.diagonal([1, 1], ('x1', 'x2'))
        x1, x2 = GenPolynomial.variable('x1'), GenPolynomial.variable('x2')
        for side in ('left', 'right'):
            report = self.bracket_service.verify_product_identity(b, x1, x1, x2, 0.5, side=side)
            checks.append(self._check(suite, f"product-identity[{side}]", report.residual.max_abs_coeff(),
                                      SYMBOLIC_TOLERANCE))

        poisson, _ = self.catalog_service.maxwell_bloch_tensors()
        h1, _ = self.catalog_service.maxwell_bloch_potentials(1.0)
        tangency = self.bracket_service.classical_tangency(poisson, h1)
        checks.append(self._check(suite, "maxwell-bloch-poisson-tangency", tangency.max_abs_coeff(),
                                  SYMBOLIC_TOLERANCE))
        return checks

    def _metriplectic_check(self, suite: Suite, alpha: float) -> CheckResult:
        """X = Γ(1+α)(P+g)(a_i+1) para pesos aleatorios"""
        rng = np.random.default_rng(self.seed)
        weights = tuple(float(w) for w in rng.uniform(-2.0, 2.0, size=3))
        poisson = self.catalog_service.rotation_poisson()
        metric = self.catalog_service.metriplectic_metric(weights)
        h = self.catalog_service.metriplectic_hamiltonian(alpha, weights)
        field = self.bracket_service.metriplectic_field(poisson, metric, h, alpha)
        total = poisson + metric
        scale = gamma(1.0 + alpha)
        residual = 0.0
        for i in range(3):
            expected = GenPolynomial.zero()
            for j in range(3):
                expected = expected + total.entry(i, j).scale(scale * (weights[j] + 1.0))
            residual = max(residual, self._symbolic_residual(field.components[i], expected))
        return self._check(suite, f"metriplectic-closed-form[alpha={alpha:g}]", residual, 1e-10)

    def random_monomial(self, rng: np.random.Generator, variables: Sequence[str], max_degree: int = 2) -> GenPolynomial:
        exponents = {name: float(rng.integers(0, max_degree + 1)) for name in variables}
        coeff = float(rng.integers(-5, 6)) or 1.0
        return GenPolynomial.monomial(coeff, exponents)

    def random_skew_tensor(self, rng: np.random.Generator, variables: Sequence[str]) -> TensorField2:
        dim = len(variables)
        rows = [[GenPolynomial.zero() for _ in range(dim)] for _ in range(dim)]
        for i in range(dim):
            for j in range(i + 1, dim):
                entry = self.random_monomial(rng, variables, 1)
                rows[i][j] = entry
                rows[j][i] = -entry
        return TensorField2.from_rows(rows, variables, SymmetryTag.SKEW)

    def _skew_checks(self, suite: Suite, samples: int = SKEW_SAMPLES) -> List[CheckResult]:
        rng = np.random.default_rng(self.seed)
        variables = coordinate_names(3)
        antisymmetry = 0.0
        self_bracket = 0.0
        for _ in range(samples):
            alpha = float(rng.choice(ORACLE_ORDERS))
            tensor = self.random_skew_tensor(rng, variables)
            f = self.random_monomial(rng, variables) + self.random_monomial(rng, variables)
            g = self.random_monomial(rng, variables)
            forward = self.bracket_service.leibniz_bracket(tensor, f, g, alpha)
            backward = self.bracket_service.leibniz_bracket(tensor, g, f, alpha)
            antisymmetry = max(antisymmetry, (forward + backward).max_abs_coeff())
            self_bracket = max(self_bracket, self.bracket_service.leibniz_bracket(tensor, f, f, alpha).max_abs_coeff())
        return [
            self._check(suite, f"skew-antisymmetry[{samples} samples]", antisymmetry, 1e-9),
            self._check(suite, f"skew-self-bracket-zero[{samples} samples]", self_bracket, 1e-9),
        ]

    # --- algebroid -------------------------------------------------------------

    def algebroid_suite(self) -> List[CheckResult]:
        suite = Suite.ALGEBROID
        checks = []
        structure = self.catalog_service.example_algebroid()
        x1 = GenPolynomial.variable('x1')
        for alpha, beta in ((0.5, 0.5), (0.7, 0.9), (1.0, 1.0)):
            report = self.algebroid_service.correspondence_check(
                structure, Section.basis(1, 3), Section.basis(2, 3), x1, alpha, beta)
            checks.append(self._check(suite, f"lambda-correspondence[alpha={alpha:g},beta={beta:g}]",
                                      report.max_residual, report.tolerance))

        linearity = self.algebroid_service.is_linear(self.algebroid_service.assemble_lambda(structure))
        recovered = linearity.is_linear and all(
            linearity.structure[a][b][d].is_close(structure.structure[a][b][d])
            for a in range(3) for b in range(3) for d in range(3)
        )
        checks.append(CheckResult(suite, "lambda-linear-recovers-structure", recovered))

        zero = AlgebroidStructure.zero(2, 2)
        report = self.algebroid_service.correspondence_check(
            zero, Section.basis(0, 2), Section.basis(1, 2), GenPolynomial.variable('x1'), 0.5, 0.5)
        checks.append(self._check(suite, "zero-structure-correspondence", report.max_residual, report.tolerance))

        pre_lie = self.pre_lie_example()
        h = GenPolynomial.variable('x1', 1.5) * GenPolynomial.variable('xi1', 2.0) + GenPolynomial.variable('xi2', 1.0)
        general = self.algebroid_service.dynamical_system(pre_lie, h, 0.6, 0.8)
        special = self.algebroid_service.pre_lie_form_system(pre_lie, h, 0.6, 0.8)
        checks.append(CheckResult(suite, "pre-lie-form-matches-general", general.is_close(special)))

        system = self.catalog_service.build('algebroid-mb', 0.6, 0.8)
        one_way = self.algebroid_service.specialize_order(
            self.algebroid_service.specialize_order(system, OrderLimit.BETA_TO_ONE), OrderLimit.ALPHA_TO_ONE)
        other_way = self.algebroid_service.specialize_order(
            self.algebroid_service.specialize_order(system, OrderLimit.ALPHA_TO_ONE), OrderLimit.BETA_TO_ONE)
        checks.append(CheckResult(suite, "order-limits-commute", one_way.is_close(other_way)))
        return checks

    @staticmethod
    def pre_lie_example() -> AlgebroidStructure:
        """m = n = 2, C antisimétrico y ρ1 = -ρ2"""
        x1, x2 = GenPolynomial.variable('x1'), GenPolynomial.variable('x2')
        zero = GenPolynomial.zero()
        structure = (
            ((zero, zero), (x1, zero)),
            ((-x1, zero), (zero, zero)),
        )
        rho1 = ((x2, zero), (zero, GenPolynomial.constant(1.0)))
        rho2 = tuple(tuple(-entry for entry in row) for row in rho1)
        return AlgebroidStructure(2, 2, structure, rho1, rho2, AlgebroidTag.PRE_LIE)

    # --- solver ----------------------------------------------------------------

    def solver_suite(self) -> List[CheckResult]:
        suite = Suite.SOLVER
        checks = []
        config = SolverConfig(step=SOLVER_STEP)

        relaxation = FractionalIVP((0.5,), lambda y: -y, (1.0,), 1.0)
        trajectory = self.solver_service.solve(relaxation, config)
        exact = np.array([self.calculus_service.mittag_leffler(0.5, -t ** 0.5) for t in trajectory.times])
        checks.append(self._check(suite, "abm-vs-mittag-leffler", float(np.max(np.abs(trajectory.states[:, 0] - exact))),
                                  1e-3))

        alpha = 0.5
        power = FractionalIVP((alpha,), lambda y: np.array([gamma(1.0 + alpha)]), (0.0,), 1.0)
        for method, tolerance in ((SolverMethod.ABM_PECE, 1e-8), (SolverMethod.FRAC_EULER, 1e-2)):
            trajectory = self.solver_service.solve(power, SolverConfig(SOLVER_STEP, method))
            error = float(np.max(np.abs(trajectory.states[:, 0] - trajectory.times ** alpha)))
            checks.append(self._check(suite, f"power-solution[{method.value}]", error, tolerance))

        for order in ORACLE_ORDERS:
            constant = gamma(1.0 + order)
            ivp = FractionalIVP((order,), lambda y, c=constant: np.array([c]), (0.0,), 1.0)
            rows = self.solver_service.convergence_report(
                ivp, SolverConfig(0.01), refinements=3, exact=lambda t, q=order: np.array([t ** q]))
            observed = self.solver_service.minimum_order(rows)
            checks.append(CheckResult(suite, f"abm-convergence-order[alpha={order:g}]", observed >= 1.0, observed))

        growth = FractionalIVP((1.0,), lambda y: y, (1.0,), 1.0)
        rk4 = self.solver_service.rk4_reference(growth, SOLVER_STEP)
        checks.append(self._check(suite, "rk4-exponential", abs(rk4.final_state[0] - math.e), 1e-8))

        classical = self.catalog_service.build('maxwell-bloch-frac', 1.0)
        ivp = self.solver_service.ivp_from_system(classical, 5.0, (1.0, 0.5, 0.5))
        reference = self.solver_service.rk4_reference(ivp, SOLVER_STEP)
        abm = self.solver_service.solve(ivp, config)
        checks.append(self._check(suite, "maxwell-bloch-classical-vs-rk4", abm.sup_distance(reference), 1e-3))

        distances = []
        for alpha in (0.9, 0.99, 0.999):
            fractional = self.catalog_service.build('maxwell-bloch-frac', alpha)
            trajectory = self.solver_service.solve(
                self.solver_service.ivp_from_system(fractional, 5.0, (1.0, 0.5, 0.5)), config)
            distances.append(trajectory.sup_distance(reference))
        checks.append(CheckResult(suite, "maxwell-bloch-order-limit-monotone",
                                  distances[0] > distances[1] > distances[2], distances[-1],
                                  detail=', '.join(f"{d:.3e}" for d in distances)))

        mixed = self.catalog_service.build('algebroid-mb', 1.0, 1.0)
        mixed_ivp = self.solver_service.ivp_from_mixed(mixed, 2.0)
        checks.append(self._check(suite, "algebroid-classical-vs-rk4",
                                  self.solver_service.solve(mixed_ivp, config).sup_distance(
                                      self.solver_service.rk4_reference(mixed_ivp, SOLVER_STEP)), 1e-4))

        windowed = self.solver_service.solve(relaxation, SolverConfig(SOLVER_STEP, memory_window=10 ** 6))
        unbounded = self.solver_service.solve(relaxation, config)
        checks.append(CheckResult(suite, "memory-window-soundness",
                                  bool(np.array_equal(windowed.states, unbounded.states))))
        return checks
