"""
EXPLICACIÓN: Interfaz de persistencia de trayectorias.
"""

from abc import ABC, abstractmethod
from typing import Optional, Sequence

from domain.entities.ivp import Trajectory


class TrajectoryRepository(ABC):
    """Interfaz para guardar y cargar trayectorias"""

    @abstractmethod
    def save(self, trajectory: Trajectory, path: str) -> str:
        """Escribe la trayectoria y retorna la ruta escrita"""
        pass

    @abstractmethod
    def load(self, path: str, orders: Optional[Sequence[float]] = None) -> Trajectory:
        """Lee una trayectoria; los órdenes no viajan en el archivo"""
        pass
