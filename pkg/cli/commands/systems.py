"""
EXPLICACIÓN: Comando list-systems: tabla del registro de sistemas.
"""

import click

from cli.app import handle_errors


@click.command(name='list-systems')
@click.pass_obj
@handle_errors
def list_systems(container):
    """Claves del registro, referencia, ecuaciones y parámetros por defecto."""
    entries = container.get_catalog_service().list_entries()
    width = max(len(entry.key) for entry in entries)
    for entry in entries:
        defaults = ', '.join(f"{name}={value}" for name, value in entry.defaults().items())
        literal = ' [--as-published]' if entry.has_literal_variant else ''
        click.echo(f"{entry.key:<{width}}  {entry.kind.value:<5}  {entry.description}{literal}")
        click.echo(f"{'':<{width}}  {'':<5}  ref: {entry.reference}")
        click.echo(f"{'':<{width}}  {'':<5}  eq:  {entry.equation}")
        click.echo(f"{'':<{width}}  {'':<5}  defaults: {defaults}")
