"""
EXPLICACIÓN: Implementación en memoria del registro de sistemas.
Las recetas las registra SystemCatalogService al inicializar el container.
"""

import logging
from typing import Dict, List, Optional

from domain.entities.system_entry import SystemRegistryEntry
from domain.exceptions import ConfigurationError
from interfaces.repositories.system_repository import SystemRepository

logger = logging.getLogger(__name__)


class BuiltinSystemRepository(SystemRepository):
    """Registro de sistemas en memoria, indexado por clave"""

    def __init__(self):
        self._entries: Dict[str, SystemRegistryEntry] = {}

    def save(self, entry: SystemRegistryEntry) -> SystemRegistryEntry:
        if entry.key in self._entries:
            raise ConfigurationError(f"Registry key '{entry.key}' is already registered")
        self._entries[entry.key] = entry
        logger.debug("Registered system %s", entry.key)
        return entry

    def find_by_key(self, key: str) -> Optional[SystemRegistryEntry]:
        return self._entries.get(key)

    def find_all(self) -> List[SystemRegistryEntry]:
        return [self._entries[key] for key in sorted(self._entries)]

    def exists_by_key(self, key: str) -> bool:
        return key in self._entries
