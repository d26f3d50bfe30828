"""
EXPLICACIÓN: Interfaz del registro de sistemas predefinidos.
Define el contrato para registrar y buscar sistemas por clave.
"""

from abc import ABC, abstractmethod
from typing import List, Optional

from domain.entities.system_entry import SystemRegistryEntry


class SystemRepository(ABC):
    """Interfaz para el registro de sistemas"""

    @abstractmethod
    def save(self, entry: SystemRegistryEntry) -> SystemRegistryEntry:
        """Registra una entrada; la clave debe ser única"""
        pass

    @abstractmethod
    def find_by_key(self, key: str) -> Optional[SystemRegistryEntry]:
        """Busca una entrada por clave"""
        pass

    @abstractmethod
    def find_all(self) -> List[SystemRegistryEntry]:
        """Todas las entradas, ordenadas por clave"""
        pass

    @abstractmethod
    def exists_by_key(self, key: str) -> bool:
        pass
