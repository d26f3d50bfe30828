"""
EXPLICACIÓN: Errores del dominio fraccionario.
Siguen la convención del proyecto: los datos inválidos se rechazan con
ValueError (o una subclase), los fallos de cálculo con RuntimeError.
"""

from typing import Optional


class FracLeiError(Exception):
    """Base común para poder capturar cualquier error propio del proyecto"""


class PoleError(FracLeiError, ValueError):
    """Gamma evaluada en cero o en un entero negativo"""

    def __init__(self, z: float):
        super().__init__(f"Gamma function has a pole at z={z}")
        self.z = z


class FractionalDomainError(FracLeiError, ValueError):
    """Operación fuera del dominio admitido (orden, exponente, coordenada)"""


class UnboundVariableError(FractionalDomainError):
    """Evaluación con una variable sin valor asignado"""

    def __init__(self, name: str):
        super().__init__(f"Variable '{name}' is not bound")
        self.name = name


class ConvergenceError(FracLeiError, RuntimeError):
    """Una serie no alcanzó la tolerancia dentro del límite de términos"""


class ExpressionParseError(FracLeiError, ValueError):
    """Error de sintaxis en una expresión; offset en bytes UTF-8"""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class SymmetryError(FracLeiError, ValueError):
    """Etiqueta de simetría que no se verifica simbólicamente"""


class ShapeError(FracLeiError, ValueError):
    """Dimensiones inconsistentes entre tensores, secciones o estados"""


class ConfigurationError(FracLeiError, ValueError):
    """Archivo de configuración, clave de registro o parámetro de corrida inválido"""


class SolverAbort(FracLeiError, RuntimeError):
    """El integrador se detuvo (estado no finito o fallo de dominio del lado derecho)"""

    def __init__(self, message: str, step_index: Optional[int] = None):
        where = f" at step {step_index}" if step_index is not None else ""
        super().__init__(f"{message}{where}")
        self.step_index = step_index


class TruncationWarning(UserWarning):
    """Serie cortada en maxTerms con un último término no nulo"""
