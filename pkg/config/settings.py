"""
EXPLICACIÓN: Este archivo centraliza todas las configuraciones de fraclei.
Permite diferentes configuraciones para desarrollo, testing y producción,
elegidas con la variable FRACLEI_CONFIG. Los valores se pueden fijar en un
archivo .env (python-dotenv).
"""

import os

from dotenv import load_dotenv

load_dotenv()


def _env_bool(name: str, default: bool) -> bool:
    value = os.environ.get(name)
    if value is None:
        return default
    return value.strip().lower() in ('1', 'true', 'yes', 'on')


class Config:
    """Configuración base"""
    SEED = int(os.environ.get('FRACLEI_SEED', 42))
    LOG_LEVEL = os.environ.get('FRACLEI_LOG_LEVEL', 'WARNING').upper()

    # Series de Mittag-Leffler
    MITTAG_LEFFLER_RADIUS = 10.0
    MITTAG_LEFFLER_MAX_TERMS = 500
    MITTAG_LEFFLER_TOLERANCE = 1e-15

    # Serie de Leibniz fraccionaria
    PRODUCT_SERIES_MAX_TERMS = 32

    # Valores por defecto de una corrida
    DEFAULT_ALPHA = 0.5
    DEFAULT_BETA = 0.5
    DEFAULT_HORIZON = 1.0
    DEFAULT_STEP = 1e-3
    DEFAULT_METHOD = 'abm-pece'
    DEFAULT_CORRECTOR_ITERATIONS = 1

    # Chequeo muestreado de la correspondencia del algebroide
    CORRESPONDENCE_SAMPLE_COUNT = 20
    CORRESPONDENCE_SAMPLE_BOX = (0.5, 2.0)
    CORRESPONDENCE_TOLERANCE = 1e-10

    # Errores por debajo de este umbral se reportan como exactos
    EXACT_ERROR_FLOOR = 1e-10

    VERIFY_PARALLEL = _env_bool('VERIFY_PARALLEL', False)


class DevelopmentConfig(Config):
    """Configuración para desarrollo local"""
    VERIFY_PARALLEL = _env_bool('VERIFY_PARALLEL', True)


class ProductionConfig(Config):
    """Configuración para corridas largas"""
    LOG_LEVEL = os.environ.get('FRACLEI_LOG_LEVEL', 'ERROR').upper()


class TestingConfig(Config):
    """Configuración para testing"""
    TESTING = True
    SEED = 42
    VERIFY_PARALLEL = False


# Diccionario para seleccionar configuración fácilmente
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}


def get_config(name: str = None):
    """Clase de configuración para `name` o para FRACLEI_CONFIG"""
    name = name or os.environ.get('FRACLEI_CONFIG', 'default')
    if name not in config:
        raise KeyError(f"Unknown configuration '{name}'. Available: {sorted(config)}")
    return config[name]
