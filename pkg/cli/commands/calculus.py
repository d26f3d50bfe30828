"""
EXPLICACIÓN: Comandos de cálculo simbólico: derive, bracket y field.
Las expresiones se leen con la gramática de infra.parsing.
"""

from typing import Optional

import click

from cli.app import fail, handle_errors
from domain.entities.algebroid import MixedOrderSystem
from infra.parsing import parse_expression, parse_point


def _print_value(polynomial, at: Optional[str]):
    if at is None:
        return
    value = polynomial.eval(parse_point(at))
    click.echo(f"value = {value:.10g}")


@click.command()
@click.argument('expr')
@click.option('--axis', required=True, help='Variable to differentiate (x1, xi2, t, ...).')
@click.option('--alpha', type=float, required=True, help='Order in (0, 1].')
@click.option('--at', 'at', default=None, help='Evaluate at a point, e.g. x1=4,x2=0.5.')
@click.pass_obj
@handle_errors
def derive(container, expr: str, axis: str, alpha: float, at: Optional[str]):
    """Derivada fraccionaria D^alpha_axis de EXPR."""
    polynomial = parse_expression(expr, alpha=alpha)
    result = container.get_calculus_service().frac_partial(polynomial, axis, alpha)
    click.echo(str(result))
    _print_value(result, at)


@click.command()
@click.argument('f')
@click.argument('g')
@click.option('--system', 'system_key', required=True, help='Registry system whose bracket tensor is used.')
@click.option('--alpha', type=float, default=None, help='Order in (0, 1]; defaults to the system default.')
@click.option('--at', 'at', default=None, help='Evaluate at a point, e.g. x1=1,x2=2,x3=3.')
@click.pass_obj
@handle_errors
def bracket(container, f: str, g: str, system_key: str, alpha: Optional[float], at: Optional[str]):
    """Corchete [F, G]^alpha con el tensor de un sistema del registro."""
    catalog = container.get_catalog_service()
    entry = catalog.get_entry(system_key)
    order = entry.default_alpha if alpha is None else alpha
    tensor = catalog.tensor_for(system_key)
    first = parse_expression(f, tensor.variables, alpha=order)
    second = parse_expression(g, tensor.variables, alpha=order)
    result = container.get_bracket_service().leibniz_bracket(tensor, first, second, order)
    click.echo(str(result))
    _print_value(result, at)


@click.command()
@click.option('--system', 'system_key', default=None, help='Registry key (see list-systems).')
@click.option('--structure', 'structure_file', type=click.Path(dir_okay=False), default=None,
              help='Algebroid structure JSON file.')
@click.option('--alpha', type=float, default=None)
@click.option('--beta', type=float, default=None)
@click.option('--as-published', is_flag=True, help='Use the system exactly as displayed in its source.')
@click.pass_obj
@handle_errors
def field(container, system_key: Optional[str], structure_file: Optional[str], alpha: Optional[float],
          beta: Optional[float], as_published: bool):
    """Ecuaciones del sistema ensamblado, una por línea."""
    if (system_key is None) == (structure_file is None):
        fail("Give exactly one of --system or --structure")
    if system_key is not None:
        system = container.get_catalog_service().build(system_key, alpha, beta, as_published)
    else:
        document = container.get_structure_repository().load_structure(structure_file)
        alpha = document.alpha if alpha is None else alpha
        beta = document.beta if beta is None else beta
        system = container.get_algebroid_service().dynamical_system(
            document.structure, document.hamiltonian(alpha, beta), alpha, beta,
            label=document.label, hamiltonian_factory=document.hamiltonian_factory)
    kind = 'mixed' if isinstance(system, MixedOrderSystem) else 'field'
    click.echo(f"# {system.label} ({kind}, dim {system.dim})")
    for line in system.equations():
        click.echo(line)
