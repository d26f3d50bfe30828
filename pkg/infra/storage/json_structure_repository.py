"""
EXPLICACIÓN: Archivos JSON de estructura de algebroide y de corrida.

Estructura:
    {"n": 3, "m": 3,
     "C": [[[expr, ...], ...], ...],     C[a][b][d] = C_ab^d
     "rho1": [[expr, ...], ...],         rho1[a][i]
     "rho2": [[expr, ...], ...],
     "h": expr, "alpha": 0.5, "beta": 0.5,
     "tag": "preLie" (opcional), "y0": [...] (opcional), "label": "..." (opcional)}

Las expresiones usan la gramática del parser; C y las anclas solo pueden
depender de x1..xn, h de (x1..xn, xi1..xim).
"""

import json
import logging
import os
from typing import Any, Dict, List, Sequence

from domain.entities.algebroid import AlgebroidStructure, AlgebroidTag
from domain.entities.polynomial import GenPolynomial
from domain.entities.run_config import RunConfig
from domain.entities.structure_document import StructureDocument
from domain.entities.tensor_field import coordinate_names
from domain.exceptions import ConfigurationError, ExpressionParseError, FracLeiError
from infra.parsing.expression_parser import parse_expression
from interfaces.repositories.structure_repository import StructureRepository

logger = logging.getLogger(__name__)

REQUIRED_KEYS = ('n', 'm', 'C', 'rho1', 'rho2', 'h')
OPTIONAL_KEYS = ('alpha', 'beta', 'tag', 'y0', 'label')


class JsonStructureRepository(StructureRepository):
    """Archivos de estructura y de corrida en JSON"""

    # --- Lectura/escritura genérica --------------------------------------

    @staticmethod
    def _read_json(path: str) -> Dict[str, Any]:
        try:
            with open(path, encoding='utf-8') as handle:
                data = json.load(handle)
        except OSError as e:
            raise ConfigurationError(f"Cannot read {path}: {e}") from e
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"{path} is not valid JSON: {e}") from e
        if not isinstance(data, dict):
            raise ConfigurationError(f"{path} must contain a JSON object")
        return data

    @staticmethod
    def _write_json(data: Dict[str, Any], path: str) -> str:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as handle:
            json.dump(data, handle, indent=2, sort_keys=True)
            handle.write('\n')
        return path

    # --- Estructuras --------------------------------------------------------

    def load_structure(self, path: str) -> StructureDocument:
        document = self._dict_to_document(self._read_json(path), source=path)
        logger.info("Loaded structure %s (n=%d, m=%d)", document.label,
                    document.structure.base_dim, document.structure.fibre_dim)
        return document

    def save_structure(self, document: StructureDocument, path: str) -> str:
        return self._write_json(self._document_to_dict(document), path)

    def _dict_to_document(self, data: Dict[str, Any], source: str = '<memory>') -> StructureDocument:
        missing = [key for key in REQUIRED_KEYS if key not in data]
        if missing:
            raise ConfigurationError(f"{source}: missing keys {missing}")
        unknown = set(data) - set(REQUIRED_KEYS) - set(OPTIONAL_KEYS)
        if unknown:
            raise ConfigurationError(f"{source}: unknown keys {sorted(unknown)}")

        n, m = data['n'], data['m']
        if not isinstance(n, int) or not isinstance(m, int) or n < 1 or m < 1:
            raise ConfigurationError(f"{source}: 'n' and 'm' must be positive integers")
        base = coordinate_names(n)
        fibre = coordinate_names(m, 'xi')
        alpha = float(data.get('alpha', 0.5))
        beta = float(data.get('beta', 0.5))
        hamiltonian_text = str(data['h'])

        def parse(value: Any, variables: Sequence[str], where: str) -> GenPolynomial:
            try:
                return parse_expression(str(value), variables, alpha, beta)
            except ExpressionParseError as e:
                raise ConfigurationError(f"{source}: {where}: {e}") from e

        def grid(values: Any, shape: Sequence[int], where: str):
            if len(shape) == 1:
                if not isinstance(values, list) or len(values) != shape[0]:
                    raise ConfigurationError(f"{source}: {where} must be a list of {shape[0]} expressions")
                return tuple(parse(value, base, f"{where}[{k}]") for k, value in enumerate(values))
            if not isinstance(values, list) or len(values) != shape[0]:
                raise ConfigurationError(f"{source}: {where} must have {shape[0]} rows")
            return tuple(grid(value, shape[1:], f"{where}[{k}]") for k, value in enumerate(values))

        def factory(order_alpha: float, order_beta: float) -> GenPolynomial:
            return parse_expression(hamiltonian_text, base + fibre, order_alpha, order_beta)

        try:
            factory(alpha, beta)
            structure = AlgebroidStructure(
                base_dim=n,
                fibre_dim=m,
                structure=grid(data['C'], (m, m, m), 'C'),
                rho1=grid(data['rho1'], (m, n), 'rho1'),
                rho2=grid(data['rho2'], (m, n), 'rho2'),
                tag=AlgebroidTag(data.get('tag', AlgebroidTag.NONE.value)),
                base_variables=base,
                fibre_variables=fibre,
            )
            return StructureDocument(
                structure=structure,
                hamiltonian_text=hamiltonian_text,
                alpha=alpha,
                beta=beta,
                initial_state=tuple(data['y0']) if data.get('y0') is not None else None,
                label=str(data.get('label', os.path.splitext(os.path.basename(source))[0])),
                hamiltonian_factory=factory,
            )
        except ConfigurationError:
            raise
        except (FracLeiError, ValueError, TypeError) as e:
            raise ConfigurationError(f"{source}: {e}") from e

    @staticmethod
    def _document_to_dict(document: StructureDocument) -> Dict[str, Any]:
        structure = document.structure

        def texts(rows) -> List:
            return [texts(row) if isinstance(row, tuple) else str(row) for row in rows]

        data: Dict[str, Any] = {
            'n': structure.base_dim,
            'm': structure.fibre_dim,
            'C': texts(structure.structure),
            'rho1': texts(structure.rho1),
            'rho2': texts(structure.rho2),
            'h': document.hamiltonian_text,
            'alpha': document.alpha,
            'beta': document.beta,
            'label': document.label,
        }
        if structure.tag is not AlgebroidTag.NONE:
            data['tag'] = structure.tag.value
        if document.initial_state is not None:
            data['y0'] = list(document.initial_state)
        return data

    # --- Configuraciones de corrida -------------------------------------

    def load_run_config(self, path: str) -> RunConfig:
        return RunConfig.from_dict(self._read_json(path))

    def save_run_config(self, config: RunConfig, path: str) -> str:
        return self._write_json(config.to_dict(), path)
