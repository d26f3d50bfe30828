"""
EXPLICACIÓN: Archivo de inicialización de la capa de infraestructura.
Proporciona funciones convenientes para inicializar toda la infraestructura.
"""

import logging

from infra.container import container, get_container

logger = logging.getLogger(__name__)


def initialize_infrastructure(config_name: str = None):
    """
    Inicializa el container de dependencias con la configuración pedida
    (o FRACLEI_CONFIG). Debe llamarse al inicio de la aplicación.
    """
    container.initialize(config_name)
    logger.info("Infrastructure initialized: %s", container.health_check())
    return container


def cleanup_infrastructure():
    """Vuelve el container a su estado inicial. Útil para testing."""
    container.reset()


__all__ = [
    'initialize_infrastructure',
    'cleanup_infrastructure',
    'get_container',
    'container'
]
