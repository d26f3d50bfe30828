"""
EXPLICACIÓN: Contenido de un archivo de estructura de algebroide:
la estructura, el hamiltoniano (como texto, para poder reconstruirlo a
otros órdenes) y los parámetros de la corrida.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

from domain.entities.algebroid import AlgebroidStructure
from domain.entities.polynomial import GenPolynomial
from domain.exceptions import ShapeError
from domain.value_objects.fractional_order import FractionalOrder


@dataclass(frozen=True)
class StructureDocument:
    structure: AlgebroidStructure
    hamiltonian_text: str
    alpha: float = 0.5
    beta: float = 0.5
    initial_state: Optional[Tuple[float, ...]] = None
    label: str = 'structure'
    hamiltonian_factory: Optional[Callable[[float, float], GenPolynomial]] = field(
        default=None, compare=False, repr=False)

    def __post_init__(self):
        FractionalOrder(self.alpha)
        FractionalOrder(self.beta)
        if self.initial_state is not None:
            initial = tuple(float(v) for v in self.initial_state)
            expected = self.structure.base_dim + self.structure.fibre_dim
            if len(initial) != expected:
                raise ShapeError(f"Initial state has {len(initial)} entries, expected {expected}")
            object.__setattr__(self, 'initial_state', initial)

    def hamiltonian(self, alpha: Optional[float] = None, beta: Optional[float] = None) -> GenPolynomial:
        if self.hamiltonian_factory is None:
            raise ValueError("Document has no hamiltonian factory")
        return self.hamiltonian_factory(self.alpha if alpha is None else alpha,
                                        self.beta if beta is None else beta)
