"""
EXPLICACIÓN: Container de Dependency Injection que configura todas las dependencias.
Conecta las interfaces de repositorio con sus implementaciones (registro en
memoria, CSV, JSON) y arma los services con los valores de la configuración.
"""

import logging
from typing import Any, Dict, Optional, Type

from config.settings import Config, get_config

# Repositories - Interfaces
from interfaces.repositories.structure_repository import StructureRepository
from interfaces.repositories.system_repository import SystemRepository
from interfaces.repositories.trajectory_repository import TrajectoryRepository

# Repositories - Implementaciones
from infra.registry.builtin_system_repository import BuiltinSystemRepository
from infra.storage.csv_trajectory_repository import CsvTrajectoryRepository
from infra.storage.json_structure_repository import JsonStructureRepository

# Services
from services.algebroid_service import AlgebroidService
from services.bracket_service import BracketService
from services.calculus_service import CalculusService
from services.oracle_service import OracleService
from services.solver_service import SolverService
from services.system_catalog_service import SystemCatalogService
from services.verification_service import VerificationService

logger = logging.getLogger(__name__)


class DIContainer:
    """
    Contenedor de Dependency Injection.

    Crea una sola instancia de cada repository y service. La configuración
    se fija en initialize(); llamadas posteriores no la cambian salvo reset().
    """

    def __init__(self):
        self._repositories: Dict[str, Any] = {}
        self._services: Dict[str, Any] = {}
        self._settings: Optional[Type[Config]] = None
        self._initialized = False

    def initialize(self, config_name: Optional[str] = None):
        if self._initialized:
            return
        self._settings = get_config(config_name)
        self._setup_repositories()
        self._setup_services()
        self._initialized = True
        logger.debug("Container initialized with %s", self._settings.__name__)

    def reset(self):
        """Descarta las instancias; útil para testing"""
        self._repositories.clear()
        self._services.clear()
        self._settings = None
        self._initialized = False

    @property
    def is_initialized(self) -> bool:
        return self._initialized

    @property
    def settings(self) -> Type[Config]:
        if self._settings is None:
            raise RuntimeError("Container not initialized. Call initialize() first.")
        return self._settings

    def _setup_repositories(self):
        self._repositories['system'] = BuiltinSystemRepository()
        self._repositories['trajectory'] = CsvTrajectoryRepository()
        self._repositories['structure'] = JsonStructureRepository()

    def _setup_services(self):
        """
        Configura todos los services inyectando sus dependencias.
        El catálogo registra las recetas incorporadas al crearse.
        """
        settings = self._settings
        calculus = CalculusService(
            product_series_max_terms=settings.PRODUCT_SERIES_MAX_TERMS,
            mittag_leffler_radius=settings.MITTAG_LEFFLER_RADIUS,
            mittag_leffler_max_terms=settings.MITTAG_LEFFLER_MAX_TERMS,
            mittag_leffler_tolerance=settings.MITTAG_LEFFLER_TOLERANCE,
        )
        self._services['calculus'] = calculus
        self._services['oracle'] = OracleService(calculus_service=calculus)
        self._services['bracket'] = BracketService(calculus_service=calculus)
        self._services['algebroid'] = AlgebroidService(
            calculus_service=calculus,
            seed=settings.SEED,
            sample_count=settings.CORRESPONDENCE_SAMPLE_COUNT,
            sample_box=settings.CORRESPONDENCE_SAMPLE_BOX,
            tolerance=settings.CORRESPONDENCE_TOLERANCE,
        )
        self._services['solver'] = SolverService(exact_error_floor=settings.EXACT_ERROR_FLOOR)

        catalog = SystemCatalogService(
            bracket_service=self._services['bracket'],
            algebroid_service=self._services['algebroid'],
            system_repository=self._repositories['system'],
        )
        catalog.register_builtin()
        self._services['catalog'] = catalog

        self._services['verification'] = VerificationService(
            calculus_service=calculus,
            oracle_service=self._services['oracle'],
            bracket_service=self._services['bracket'],
            algebroid_service=self._services['algebroid'],
            solver_service=self._services['solver'],
            catalog_service=catalog,
            seed=settings.SEED,
            parallel=settings.VERIFY_PARALLEL,
        )

    def get_repository(self, name: str) -> Any:
        """
        Obtiene un repository por nombre ('system', 'trajectory', 'structure').

        Raises:
            KeyError: Si el repository no existe
            RuntimeError: Si el container no está inicializado
        """
        if not self._initialized:
            raise RuntimeError("Container not initialized. Call initialize() first.")

        if name not in self._repositories:
            available_repos = list(self._repositories.keys())
            raise KeyError(f"Repository '{name}' not found. Available: {available_repos}")

        return self._repositories[name]

    def get_service(self, name: str) -> Any:
        """
        Obtiene un service por nombre.

        Raises:
            KeyError: Si el service no existe
            RuntimeError: Si el container no está inicializado
        """
        if not self._initialized:
            raise RuntimeError("Container not initialized. Call initialize() first.")

        if name not in self._services:
            available_services = list(self._services.keys())
            raise KeyError(f"Service '{name}' not found. Available: {available_services}")

        return self._services[name]

    def get_system_repository(self) -> SystemRepository:
        return self.get_repository('system')

    def get_trajectory_repository(self) -> TrajectoryRepository:
        return self.get_repository('trajectory')

    def get_structure_repository(self) -> StructureRepository:
        return self.get_repository('structure')

    def get_calculus_service(self) -> CalculusService:
        return self.get_service('calculus')

    def get_oracle_service(self) -> OracleService:
        return self.get_service('oracle')

    def get_bracket_service(self) -> BracketService:
        return self.get_service('bracket')

    def get_algebroid_service(self) -> AlgebroidService:
        return self.get_service('algebroid')

    def get_solver_service(self) -> SolverService:
        return self.get_service('solver')

    def get_catalog_service(self) -> SystemCatalogService:
        return self.get_service('catalog')

    def get_verification_service(self) -> VerificationService:
        return self.get_service('verification')

    def health_check(self) -> Dict[str, Any]:
        """Estado del container, para depuración"""
        health = {
            'initialized': self._initialized,
            'repositories_count': len(self._repositories),
            'services_count': len(self._services),
        }

        if self._initialized:
            health.update({
                'config': self._settings.__name__,
                'available_repositories': list(self._repositories.keys()),
                'available_services': list(self._services.keys()),
                'registered_systems': len(self._repositories['system'].find_all()),
            })

        return health


# Instancia global del container
container = DIContainer()


def get_container() -> DIContainer:
    """Instancia global, inicializada bajo demanda con FRACLEI_CONFIG"""
    if not container.is_initialized:
        container.initialize()
    return container
