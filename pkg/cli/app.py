"""
EXPLICACIÓN: Grupo principal de la línea de comandos (click).
Registra los comandos de cada módulo como la app web registraba sus
blueprints, configura el logging e inicializa el container.

Códigos de salida:
    0  todo bien
    1  alguna comprobación de `verify` falló
    2  error de uso, configuración, parseo o dominio
    3  el integrador abortó
"""

import functools
import logging

import click

from domain.exceptions import FracLeiError, SolverAbort
from infra import get_container, initialize_infrastructure

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_SOLVER_ABORT = 3

logger = logging.getLogger(__name__)


def fail(message: str, code: int = EXIT_USAGE):
    click.secho(f"❌ {message}", fg='red', err=True)
    raise SystemExit(code)


def handle_errors(command):
    """Traduce los errores del dominio a mensajes y códigos de salida"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except SolverAbort as e:
            fail(f"Solver aborted: {e}", EXIT_SOLVER_ABORT)
        except (FracLeiError, ValueError) as e:
            logger.debug("Command failed", exc_info=True)
            fail(str(e), EXIT_USAGE)

    return wrapper


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Log at INFO level.')
@click.pass_context
def cli(ctx: click.Context, verbose: bool):
    """fraclei: cálculo fraccionario, corchetes de Leibniz y algebroides."""
    container = initialize_infrastructure()
    level = logging.INFO if verbose else container.settings.LOG_LEVEL
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')
    logging.getLogger().setLevel(level)
    ctx.obj = get_container()


def register_commands(group: click.Group):
    """Registra todos los comandos de la aplicación"""
    from cli.commands.calculus import bracket, derive, field
    from cli.commands.simulate import simulate
    from cli.commands.systems import list_systems
    from cli.commands.verify import verify

    for command in (derive, bracket, field, simulate, verify, list_systems):
        group.add_command(command)


register_commands(cli)
