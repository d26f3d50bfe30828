"""
EXPLICACIÓN: Interfaz de los archivos de estructura de algebroide y de
configuración de corridas.
"""

from abc import ABC, abstractmethod

from domain.entities.run_config import RunConfig
from domain.entities.structure_document import StructureDocument


class StructureRepository(ABC):
    """Interfaz para archivos de estructura y de corrida"""

    @abstractmethod
    def load_structure(self, path: str) -> StructureDocument:
        """Lee y valida un archivo de estructura"""
        pass

    @abstractmethod
    def save_structure(self, document: StructureDocument, path: str) -> str:
        pass

    @abstractmethod
    def load_run_config(self, path: str) -> RunConfig:
        """Lee un archivo de corrida (el producido por --dump-config)"""
        pass

    @abstractmethod
    def save_run_config(self, config: RunConfig, path: str) -> str:
        pass
