"""
EXPLICACIÓN: Entidades de los algebroides de Leibniz fraccionarios.
AlgebroidStructure guarda las funciones de estructura C_ab^d(x) y las dos
anclas; LambdaTensor es el tensor lineal asociado sobre el fibrado dual;
MixedOrderSystem es el sistema (α,β) en coordenadas (x, ξ).

Convenciones de índices:
    structure[a][b][d] = C_ab^d
    rho1[a][i] = ρ1_a^i,  rho2[a][i] = ρ2_a^i
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from domain.entities.polynomial import GenPolynomial
from domain.entities.tensor_field import PolynomialLike, coordinate_names
from domain.exceptions import ShapeError, SymmetryError
from domain.value_objects.fractional_order import FractionalOrder

Matrix = Tuple[Tuple[GenPolynomial, ...], ...]
Cube = Tuple[Matrix, ...]


def _matrix(rows: Sequence[Sequence[PolynomialLike]]) -> Matrix:
    return tuple(tuple(GenPolynomial.coerce(value) for value in row) for row in rows)


def _zero_matrix(rows: int, columns: int) -> Matrix:
    return _matrix([[0] * columns for _ in range(rows)])


class AlgebroidTag(Enum):
    """Tipo de corchete declarado para la estructura"""
    NONE = "none"
    PRE_LIE = "preLie"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class AlgebroidStructure:
    """
    Estructura de algebroide de Leibniz fraccionario sobre R^n con fibra R^m.
    Los coeficientes dependen solo de las coordenadas base.
    """
    base_dim: int
    fibre_dim: int
    structure: Cube
    rho1: Matrix
    rho2: Matrix
    tag: AlgebroidTag = AlgebroidTag.NONE
    base_variables: Tuple[str, ...] = ()
    fibre_variables: Tuple[str, ...] = ()

    def __post_init__(self):
        n, m = self.base_dim, self.fibre_dim
        if n < 1 or m < 1:
            raise ShapeError("Base and fibre dimensions must be positive")

        structure = tuple(_matrix(plane) for plane in self.structure)
        if len(structure) != m or any(len(row) != m for row in structure) or \
                any(len(row) != m for plane in structure for row in plane):
            raise ShapeError(f"Structure functions must form an {m}x{m}x{m} array")
        rho1, rho2 = _matrix(self.rho1), _matrix(self.rho2)
        for name, anchor in (('rho1', rho1), ('rho2', rho2)):
            if len(anchor) != m or any(len(row) != n for row in anchor):
                raise ShapeError(f"Anchor {name} must be an {m}x{n} matrix")

        base = tuple(self.base_variables) or coordinate_names(n)
        fibre = tuple(self.fibre_variables) or coordinate_names(m, 'xi')
        if len(base) != n or len(fibre) != m:
            raise ShapeError("Variable names do not match the declared dimensions")
        allowed = set(base)
        for entry in self._entries(structure, rho1, rho2):
            stray = set(entry.variables) - allowed
            if stray:
                raise ShapeError(f"Structure data may depend on base coordinates only, found {sorted(stray)}")

        object.__setattr__(self, 'structure', structure)
        object.__setattr__(self, 'rho1', rho1)
        object.__setattr__(self, 'rho2', rho2)
        object.__setattr__(self, 'tag', AlgebroidTag(self.tag))
        object.__setattr__(self, 'base_variables', base)
        object.__setattr__(self, 'fibre_variables', fibre)
        self._verify_tag()

    @staticmethod
    def _entries(structure: Cube, rho1: Matrix, rho2: Matrix):
        for plane in structure:
            for row in plane:
                yield from row
        for row in rho1 + rho2:
            yield from row

    def _verify_tag(self):
        if self.tag is AlgebroidTag.NONE:
            return
        if self.tag is AlgebroidTag.PRE_LIE and not self.has_antisymmetric_structure():
            raise SymmetryError("Structure tagged preLie needs C_ab^d = -C_ba^d")
        if self.tag is AlgebroidTag.SYMMETRIC and not self.has_symmetric_structure():
            raise SymmetryError("Structure tagged symmetric needs C_ab^d = C_ba^d")
        if not self.has_opposite_anchors():
            raise SymmetryError(f"Structure tagged {self.tag.value} needs rho1 = -rho2")

    @classmethod
    def zero(cls, base_dim: int, fibre_dim: int) -> 'AlgebroidStructure':
        return cls(
            base_dim, fibre_dim,
            tuple(_zero_matrix(fibre_dim, fibre_dim) for _ in range(fibre_dim)),
            _zero_matrix(fibre_dim, base_dim),
            _zero_matrix(fibre_dim, base_dim),
        )

    @property
    def variables(self) -> Tuple[str, ...]:
        """Coordenadas del fibrado dual: (x1..xn, xi1..xim)"""
        return self.base_variables + self.fibre_variables

    def c(self, a: int, b: int, d: int) -> GenPolynomial:
        return self.structure[a][b][d]

    def has_antisymmetric_structure(self) -> bool:
        m = self.fibre_dim
        return all(
            self.structure[a][b][d].is_close(-self.structure[b][a][d])
            for a in range(m) for b in range(a, m) for d in range(m)
        )

    def has_symmetric_structure(self) -> bool:
        m = self.fibre_dim
        return all(
            self.structure[a][b][d].is_close(self.structure[b][a][d])
            for a in range(m) for b in range(a + 1, m) for d in range(m)
        )

    def has_opposite_anchors(self) -> bool:
        return all(
            left.is_close(-right)
            for row1, row2 in zip(self.rho1, self.rho2)
            for left, right in zip(row1, row2)
        )

    def with_tag(self, tag: AlgebroidTag) -> 'AlgebroidStructure':
        return AlgebroidStructure(
            self.base_dim, self.fibre_dim, self.structure, self.rho1, self.rho2,
            tag, self.base_variables, self.fibre_variables,
        )


@dataclass(frozen=True)
class Section:
    """Sección σ = σ^a e_a con coeficientes en las coordenadas base"""
    components: Tuple[GenPolynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, 'components', tuple(GenPolynomial.coerce(c) for c in self.components))

    @classmethod
    def basis(cls, index: int, fibre_dim: int) -> 'Section':
        """e_index (índice desde 0)"""
        if not 0 <= index < fibre_dim:
            raise ShapeError(f"Basis index {index} outside fibre of dimension {fibre_dim}")
        return cls(tuple(1.0 if a == index else 0.0 for a in range(fibre_dim)))

    @property
    def dim(self) -> int:
        return len(self.components)

    def scaled(self, factor: GenPolynomial) -> 'Section':
        return Section(tuple(factor * component for component in self.components))

    def is_close(self, other: 'Section', **tolerances) -> bool:
        return self.dim == other.dim and all(
            mine.is_close(theirs, **tolerances) for mine, theirs in zip(self.components, other.components)
        )

    def __add__(self, other: 'Section') -> 'Section':
        if other.dim != self.dim:
            raise ShapeError("Sections of different fibre dimension")
        return Section(tuple(a + b for a, b in zip(self.components, other.components)))

    def __str__(self) -> str:
        return '(' + ', '.join(str(component) for component in self.components) + ')'


@dataclass(frozen=True)
class LambdaTensor:
    """
    Tensor 2-contravariante sobre el dual en la base {D^α_{x^i}, D^β_{ξ_a}}:
    bloque A (m×m) en (x, ξ) y bloques de ancla (m×n) en x.
    El bloque rho2 entra con signo menos al contraer.
    """
    a_block: Matrix
    rho1_block: Matrix
    rho2_block: Matrix
    base_variables: Tuple[str, ...]
    fibre_variables: Tuple[str, ...]

    def __post_init__(self):
        a_block = _matrix(self.a_block)
        rho1_block, rho2_block = _matrix(self.rho1_block), _matrix(self.rho2_block)
        m, n = len(self.fibre_variables), len(self.base_variables)
        if len(a_block) != m or any(len(row) != m for row in a_block):
            raise ShapeError(f"A-block must be {m}x{m}")
        for block in (rho1_block, rho2_block):
            if len(block) != m or any(len(row) != n for row in block):
                raise ShapeError(f"Anchor blocks must be {m}x{n}")
        object.__setattr__(self, 'a_block', a_block)
        object.__setattr__(self, 'rho1_block', rho1_block)
        object.__setattr__(self, 'rho2_block', rho2_block)
        object.__setattr__(self, 'base_variables', tuple(self.base_variables))
        object.__setattr__(self, 'fibre_variables', tuple(self.fibre_variables))

    @property
    def base_dim(self) -> int:
        return len(self.base_variables)

    @property
    def fibre_dim(self) -> int:
        return len(self.fibre_variables)

    @property
    def is_zero(self) -> bool:
        return all(entry.is_zero for block in (self.a_block, self.rho1_block, self.rho2_block)
                   for row in block for entry in row)


@dataclass(frozen=True)
class MixedOrderSystem:
    """
    Sistema (α,β): D^α x^i = rhs_x[i], D^β ξ_a = rhs_xi[a].
    Opcionalmente recuerda la estructura y una fábrica del hamiltoniano
    por orden, para poder reconstruirlo en los límites clásicos.
    """
    alpha: FractionalOrder
    beta: FractionalOrder
    rhs_x: Tuple[GenPolynomial, ...]
    rhs_xi: Tuple[GenPolynomial, ...]
    base_variables: Tuple[str, ...]
    fibre_variables: Tuple[str, ...]
    initial_state: Optional[Tuple[float, ...]] = None
    label: str = 'algebroid'
    structure: Optional[AlgebroidStructure] = field(default=None, compare=False)
    hamiltonian: Optional[GenPolynomial] = field(default=None, compare=False)
    hamiltonian_factory: Optional[Callable[[float, float], GenPolynomial]] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'alpha', FractionalOrder.coerce(self.alpha))
        object.__setattr__(self, 'beta', FractionalOrder.coerce(self.beta))
        object.__setattr__(self, 'rhs_x', tuple(GenPolynomial.coerce(p) for p in self.rhs_x))
        object.__setattr__(self, 'rhs_xi', tuple(GenPolynomial.coerce(p) for p in self.rhs_xi))
        object.__setattr__(self, 'base_variables', tuple(self.base_variables))
        object.__setattr__(self, 'fibre_variables', tuple(self.fibre_variables))
        if len(self.rhs_x) != len(self.base_variables):
            raise ShapeError("rhs_x must have one entry per base coordinate")
        if len(self.rhs_xi) != len(self.fibre_variables):
            raise ShapeError("rhs_xi must have one entry per fibre coordinate")
        if self.initial_state is not None:
            initial = tuple(float(value) for value in self.initial_state)
            if len(initial) != self.dim:
                raise ShapeError(f"Initial state has {len(initial)} entries, system dimension is {self.dim}")
            object.__setattr__(self, 'initial_state', initial)

    @property
    def base_dim(self) -> int:
        return len(self.base_variables)

    @property
    def fibre_dim(self) -> int:
        return len(self.fibre_variables)

    @property
    def dim(self) -> int:
        return self.base_dim + self.fibre_dim

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.base_variables + self.fibre_variables

    @property
    def components(self) -> Tuple[GenPolynomial, ...]:
        return self.rhs_x + self.rhs_xi

    def orders(self) -> Tuple[float, ...]:
        """Vector de órdenes (α,...,α, β,...,β) sobre el estado (x, ξ)"""
        return (self.alpha.value,) * self.base_dim + (self.beta.value,) * self.fibre_dim

    def is_close(self, other: 'MixedOrderSystem', **tolerances) -> bool:
        if self.orders() != other.orders() or self.variables != other.variables:
            return False
        return all(
            mine.is_close(theirs, **tolerances) for mine, theirs in zip(self.components, other.components)
        )

    def compile(self) -> Callable[[np.ndarray], np.ndarray]:
        compiled = [component.compile(self.variables) for component in self.components]

        def rhs(state: np.ndarray) -> np.ndarray:
            return np.array([fn(state) for fn in compiled])

        return rhs

    def equations(self) -> List[str]:
        lines = [f"D^{self.alpha} {name} = {rhs}" for name, rhs in zip(self.base_variables, self.rhs_x)]
        lines += [f"D^{self.beta} {name} = {rhs}" for name, rhs in zip(self.fibre_variables, self.rhs_xi)]
        return lines
