"""
EXPLICACIÓN: Entidades de las estructuras de corchete sobre R^n:
tensores 2-contravariantes (B, P, g), campos vectoriales fraccionarios
y la especificación de un sistema dinámico fraccionario.
Las etiquetas de simetría se verifican al construir.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from domain.entities.polynomial import GenPolynomial
from domain.exceptions import ShapeError, SymmetryError
from domain.value_objects.fractional_order import FractionalOrder

PolynomialLike = Union[GenPolynomial, int, float]


def coordinate_names(count: int, prefix: str = 'x') -> Tuple[str, ...]:
    """x1..xn (o xi1..xim con prefix='xi')"""
    return tuple(f"{prefix}{index}" for index in range(1, count + 1))


def _as_row(values: Iterable[PolynomialLike]) -> Tuple[GenPolynomial, ...]:
    return tuple(GenPolynomial.coerce(value) for value in values)


class SymmetryTag(Enum):
    """Simetría declarada de un tensor 2-contravariante"""
    NONE = "none"
    SKEW = "skew"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class TensorField2:
    """
    Tensor 2-contravariante fraccionario: matriz n×n de GenPolynomial.
    """
    entries: Tuple[Tuple[GenPolynomial, ...], ...]
    variables: Tuple[str, ...] = ()
    symmetry: SymmetryTag = SymmetryTag.NONE

    def __post_init__(self):
        rows = tuple(_as_row(row) for row in self.entries)
        size = len(rows)
        if any(len(row) != size for row in rows):
            raise ShapeError("Tensor entries must form a square matrix")
        variables = tuple(self.variables) or coordinate_names(size)
        if len(variables) != size:
            raise ShapeError(f"Tensor of size {size} declared over {len(variables)} variables")
        object.__setattr__(self, 'entries', rows)
        object.__setattr__(self, 'variables', variables)
        object.__setattr__(self, 'symmetry', SymmetryTag(self.symmetry))
        self._verify_symmetry()

    def _verify_symmetry(self):
        if self.symmetry is SymmetryTag.SKEW and not self.is_skew():
            raise SymmetryError("Tensor tagged skew is not antisymmetric")
        if self.symmetry is SymmetryTag.SYMMETRIC and not self.is_symmetric():
            raise SymmetryError("Tensor tagged symmetric is not symmetric")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[PolynomialLike]], variables: Sequence[str] = (),
                  symmetry: SymmetryTag = SymmetryTag.NONE) -> 'TensorField2':
        return cls(tuple(tuple(row) for row in rows), tuple(variables), symmetry)

    @classmethod
    def zero(cls, dim: int, variables: Sequence[str] = ()) -> 'TensorField2':
        return cls.from_rows([[0] * dim for _ in range(dim)], variables, SymmetryTag.SKEW)

    @classmethod
    def diagonal(cls, values: Sequence[PolynomialLike], variables: Sequence[str] = ()) -> 'TensorField2':
        dim = len(values)
        rows = [[values[i] if i == j else 0 for j in range(dim)] for i in range(dim)]
        return cls.from_rows(rows, variables, SymmetryTag.SYMMETRIC)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> GenPolynomial:
        return self.entries[i][j]

    def is_skew(self) -> bool:
        return all(
            self.entries[i][j].is_close(-self.entries[j][i])
            for i in range(self.dim) for j in range(i, self.dim)
        )

    def is_symmetric(self) -> bool:
        return all(
            self.entries[i][j].is_close(self.entries[j][i])
            for i in range(self.dim) for j in range(i + 1, self.dim)
        )

    def transpose(self) -> 'TensorField2':
        rows = [[self.entries[j][i] for j in range(self.dim)] for i in range(self.dim)]
        return TensorField2.from_rows(rows, self.variables, self.symmetry)

    def __add__(self, other: 'TensorField2') -> 'TensorField2':
        if other.dim != self.dim:
            raise ShapeError("Cannot add tensors of different dimension")
        rows = [[self.entries[i][j] + other.entries[i][j] for j in range(self.dim)] for i in range(self.dim)]
        symmetry = self.symmetry if self.symmetry is other.symmetry else SymmetryTag.NONE
        return TensorField2.from_rows(rows, self.variables, symmetry)

    def rows_str(self) -> List[str]:
        return ['[' + ', '.join(str(entry) for entry in row) + ']' for row in self.entries]


@dataclass(frozen=True)
class FracVectorField:
    """
    Campo X = X^i D^α_{x^i}; components[i] es el coeficiente X^i.
    """
    components: Tuple[GenPolynomial, ...]
    variables: Tuple[str, ...] = ()

    def __post_init__(self):
        components = _as_row(self.components)
        variables = tuple(self.variables) or coordinate_names(len(components))
        if len(variables) != len(components):
            raise ShapeError(
                f"Vector field has {len(components)} components over {len(variables)} variables"
            )
        object.__setattr__(self, 'components', components)
        object.__setattr__(self, 'variables', variables)

    @property
    def dim(self) -> int:
        return len(self.components)

    @property
    def is_zero(self) -> bool:
        return all(component.is_zero for component in self.components)

    def is_close(self, other: Union['FracVectorField', Sequence[PolynomialLike]], **tolerances) -> bool:
        others = other.components if isinstance(other, FracVectorField) else _as_row(other)
        if len(others) != self.dim:
            return False
        return all(mine.is_close(theirs, **tolerances) for mine, theirs in zip(self.components, others))

    def evaluate(self, point: Mapping[str, float]) -> np.ndarray:
        return np.array([component.eval(point) for component in self.components])

    def compile(self) -> Callable[[np.ndarray], np.ndarray]:
        """Evaluador numpy estado -> derivada fraccionaria"""
        compiled = [component.compile(self.variables) for component in self.components]

        def rhs(state: np.ndarray) -> np.ndarray:
            return np.array([fn(state) for fn in compiled])

        return rhs

    def lines(self, label: str = 'D^{q} {name}', order: Optional[float] = None) -> List[str]:
        """Una ecuación por línea: 'D^0.5 x1 = ...'"""
        prefix_order = f"{order:g}" if order is not None else 'alpha'
        return [
            f"{label.format(q=prefix_order, name=name)} = {component}"
            for name, component in zip(self.variables, self.components)
        ]


@dataclass(frozen=True)
class FractionalSystemSpec:
    """Sistema D^α_t x^i = X^i(x) listo para integrar"""
    order: FractionalOrder
    rhs: FracVectorField
    label: str
    initial_state: Optional[Tuple[float, ...]] = None
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'order', FractionalOrder.coerce(self.order))
        if self.initial_state is not None:
            initial = tuple(float(value) for value in self.initial_state)
            if len(initial) != self.rhs.dim:
                raise ShapeError(f"Initial state has {len(initial)} entries, system dimension is {self.rhs.dim}")
            object.__setattr__(self, 'initial_state', initial)

    @property
    def dim(self) -> int:
        return self.rhs.dim

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.rhs.variables

    def orders(self) -> Tuple[float, ...]:
        return (self.order.value,) * self.dim

    def equations(self) -> List[str]:
        return self.rhs.lines(order=self.order.value)
