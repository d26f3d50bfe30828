"""
EXPLICACIÓN: Pruebas del container de dependencias y de la configuración.
"""

import numpy as np
import pytest

from config.settings import DevelopmentConfig, TestingConfig, get_config
from domain.entities.ivp import FractionalIVP, SolverConfig
from domain.exceptions import ConvergenceError
from domain.special_functions import mittag_leffler
from infra.container import DIContainer
from services.solver_service import SolverService


def test_testing_config_is_active(container):
    assert container.settings is TestingConfig
    assert container.settings.SEED == 42
    assert container.settings.VERIFY_PARALLEL is False


def test_services_are_shared_instances(container):
    assert container.get_service('solver') is container.get_solver_service()
    assert isinstance(container.get_solver_service(), SolverService)
    assert container.get_catalog_service().system_repository is container.get_system_repository()


def test_unknown_names(container):
    with pytest.raises(KeyError):
        container.get_service('payments')
    with pytest.raises(KeyError):
        container.get_repository('database')


def test_uninitialized_container_refuses_access():
    fresh = DIContainer()
    assert not fresh.is_initialized
    with pytest.raises(RuntimeError):
        fresh.get_service('solver')
    with pytest.raises(RuntimeError):
        fresh.settings


def test_health_check(container):
    health = container.health_check()
    assert health['initialized'] is True
    assert health['config'] == 'TestingConfig'
    assert health['registered_systems'] == 6
    assert 'verification' in health['available_services']


def test_reset_and_reinitialize():
    fresh = DIContainer()
    fresh.initialize('development')
    assert fresh.settings is DevelopmentConfig
    fresh.reset()
    assert not fresh.is_initialized
    fresh.initialize('testing')
    assert fresh.get_catalog_service().list_entries()


def test_get_config():
    assert get_config('testing') is TestingConfig
    with pytest.raises(KeyError):
        get_config('staging')


def test_series_limits_come_from_settings(monkeypatch):
    monkeypatch.setattr(TestingConfig, 'MITTAG_LEFFLER_RADIUS', 1.0)
    monkeypatch.setattr(TestingConfig, 'EXACT_ERROR_FLOOR', 1.0)
    fresh = DIContainer()
    fresh.initialize('testing')
    calculus = fresh.get_service('calculus')
    assert calculus.mittag_leffler(0.5, 0.5) == pytest.approx(mittag_leffler(0.5, 0.5))
    with pytest.raises(ConvergenceError):
        calculus.mittag_leffler(0.5, 2.0)

    rows = fresh.get_solver_service().convergence_report(
        FractionalIVP((0.5,), lambda y: -y, (1.0,), 1.0), SolverConfig(0.05), refinements=2,
        exact=lambda t: np.array([0.0]))
    assert all(row.is_exact for row in rows[1:])
