"""
EXPLICACIÓN: Fixtures compartidas por todas las pruebas.
El container se inicializa una vez con la configuración de testing
(semilla fija, verificación secuencial); la CLI reutiliza esa instancia.
"""

import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
os.environ.setdefault('FRACLEI_CONFIG', 'testing')

from infra import cleanup_infrastructure, initialize_infrastructure  # noqa: E402


@pytest.fixture(scope='session')
def container():
    cleanup_infrastructure()
    instance = initialize_infrastructure('testing')
    yield instance
    cleanup_infrastructure()


@pytest.fixture(scope='session')
def calculus(container):
    return container.get_calculus_service()


@pytest.fixture(scope='session')
def oracle(container):
    return container.get_oracle_service()


@pytest.fixture(scope='session')
def brackets(container):
    return container.get_bracket_service()


@pytest.fixture(scope='session')
def algebroids(container):
    return container.get_algebroid_service()


@pytest.fixture(scope='session')
def solver(container):
    return container.get_solver_service()


@pytest.fixture(scope='session')
def catalog(container):
    return container.get_catalog_service()


@pytest.fixture(scope='session')
def verification(container):
    return container.get_verification_service()


@pytest.fixture
def rng():
    return np.random.default_rng(42)
