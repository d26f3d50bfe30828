"""
EXPLICACIÓN: Persistencia de trayectorias en CSV.
Cabecera `t,y1,...,yd` y una fila por paso, con 17 dígitos significativos
para que una corrida repetida produzca el mismo archivo byte a byte.
"""

import csv
import logging
import os
from typing import Optional, Sequence

import numpy as np

from domain.entities.ivp import Trajectory
from domain.entities.tensor_field import coordinate_names
from domain.exceptions import ConfigurationError
from interfaces.repositories.trajectory_repository import TrajectoryRepository

logger = logging.getLogger(__name__)

NUMBER_FORMAT = '%.17g'


class CsvTrajectoryRepository(TrajectoryRepository):
    """Trayectorias en archivos CSV"""

    def save(self, trajectory: Trajectory, path: str) -> str:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        header = ['t'] + list(coordinate_names(trajectory.dim, 'y'))
        with open(path, 'w', newline='', encoding='utf-8') as handle:
            writer = csv.writer(handle, lineterminator='\n')
            writer.writerow(header)
            for time, state in zip(trajectory.times, trajectory.states):
                writer.writerow([NUMBER_FORMAT % time] + [NUMBER_FORMAT % value for value in state])
        logger.info("Wrote %d rows to %s", trajectory.times.size, path)
        return path

    def load(self, path: str, orders: Optional[Sequence[float]] = None) -> Trajectory:
        try:
            with open(path, newline='', encoding='utf-8') as handle:
                rows = list(csv.reader(handle))
        except OSError as e:
            raise ConfigurationError(f"Cannot read trajectory file {path}: {e}") from e
        if not rows or not rows[0] or rows[0][0] != 't':
            raise ConfigurationError(f"{path} is not a trajectory CSV (missing 't' header)")
        try:
            data = np.array([[float(value) for value in row] for row in rows[1:]], dtype=float)
        except ValueError as e:
            raise ConfigurationError(f"Malformed number in {path}: {e}") from e
        if data.ndim != 2 or data.shape[0] < 1:
            raise ConfigurationError(f"{path} has no data rows")
        times, states = data[:, 0], data[:, 1:]
        step = float(times[1] - times[0]) if times.size > 1 else 0.0
        return Trajectory(
            times=times,
            states=states,
            orders=tuple(orders) if orders is not None else (),
            method='csv',
            step=step,
        )
