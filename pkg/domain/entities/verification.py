"""
EXPLICACIÓN: Resultados de la verificación: una fila por comprobación y
el informe agregado que la CLI imprime como JSON.
"""

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class Suite(Enum):
    """Grupos de comprobaciones de `verify`"""
    RULES = "rules"
    BRACKETS = "brackets"
    ALGEBROID = "algebroid"
    SOLVER = "solver"

    @classmethod
    def parse(cls, name: str) -> List['Suite']:
        """'all' expande a todas las suites, en orden fijo"""
        if name == 'all':
            return list(cls)
        return [cls(name)]


@dataclass(frozen=True)
class CheckResult:
    suite: Suite
    name: str
    passed: bool
    residual: Optional[float] = None
    tolerance: Optional[float] = None
    detail: str = ''

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'suite': self.suite.value, 'name': self.name, 'passed': self.passed}
        if self.residual is not None:
            data['residual'] = self.residual if math.isfinite(self.residual) else str(self.residual)
        if self.tolerance is not None:
            data['tolerance'] = self.tolerance
        if self.detail:
            data['detail'] = self.detail
        return data


@dataclass
class VerificationReport:
    seed: int
    suites: List[Suite]
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def by_suite(self, suite: Suite) -> List[CheckResult]:
        return [check for check in self.checks if check.suite is suite]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'seed': self.seed,
            'suites': [suite.value for suite in self.suites],
            'passed': self.passed,
            'total': len(self.checks),
            'failed': len(self.failures),
            'checks': [check.to_dict() for check in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)
