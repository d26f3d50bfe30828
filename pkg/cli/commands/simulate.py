"""
EXPLICACIÓN: Comando simulate: integra un sistema del registro o de un
archivo de estructura y escribe la trayectoria en CSV.

Las opciones explícitas tienen prioridad sobre --config, y este sobre los
valores por defecto del sistema. --dump-config escribe la configuración
efectiva para repetir la corrida.
"""

from typing import Any, Dict, Optional

import click

from cli.app import handle_errors
from domain.entities.ivp import SolverMethod
from domain.entities.run_config import RunConfig
from domain.entities.tensor_field import FractionalSystemSpec
from domain.exceptions import ConfigurationError


def _parse_state(text: str):
    try:
        return tuple(float(value) for value in text.split(','))
    except ValueError:
        raise ConfigurationError(f"Invalid initial state '{text}'; expected comma-separated numbers") from None


def _resolve_config(container, config_file: Optional[str], overrides: Dict[str, Any]) -> RunConfig:
    data: Dict[str, Any] = {}
    if config_file is not None:
        data = container.get_structure_repository().load_run_config(config_file).to_dict()
    values = {key: value for key, value in overrides.items() if value is not None}
    if 'system' in values:
        data.pop('structure_file', None)
    if 'structure_file' in values:
        data.pop('system', None)
    data.update(values)

    # Órdenes sin fijar: los del archivo de estructura o los del registro
    if 'alpha' not in data or 'beta' not in data:
        if data.get('structure_file'):
            document = container.get_structure_repository().load_structure(data['structure_file'])
            defaults = (document.alpha, document.beta)
        elif data.get('system'):
            entry = container.get_catalog_service().get_entry(data['system'])
            defaults = (entry.default_alpha, entry.default_beta)
        else:
            defaults = (None, None)
        for key, value in zip(('alpha', 'beta'), defaults):
            if value is not None:
                data.setdefault(key, value)
    return RunConfig.from_dict(data)


def _build(container, run: RunConfig):
    """Sistema y estado inicial de la corrida"""
    if run.system is not None:
        entry = container.get_catalog_service().get_entry(run.system)
        system = entry.build(run.alpha, run.beta, run.as_published)
        initial = run.initial_state or entry.default_initial_state
        return system, initial
    document = container.get_structure_repository().load_structure(run.structure_file)
    system = container.get_algebroid_service().dynamical_system(
        document.structure, document.hamiltonian(run.alpha, run.beta), run.alpha, run.beta,
        label=document.label, hamiltonian_factory=document.hamiltonian_factory)
    initial = run.initial_state or document.initial_state or (1.0,) * system.dim
    return system, initial


@click.command()
@click.option('--system', 'system_key', default=None, help='Registry key (see list-systems).')
@click.option('--structure', 'structure_file', type=click.Path(dir_okay=False), default=None,
              help='Algebroid structure JSON file.')
@click.option('--config', 'config_file', type=click.Path(dir_okay=False), default=None,
              help='Run configuration JSON (as written by --dump-config).')
@click.option('--alpha', type=float, default=None)
@click.option('--beta', type=float, default=None)
@click.option('--y0', default=None, help='Initial state, comma-separated.')
@click.option('--T', 'horizon', type=float, default=None, help='Final time.')
@click.option('--step', type=float, default=None)
@click.option('--method', type=click.Choice([method.value for method in SolverMethod]), default=None)
@click.option('--corrector-iterations', type=int, default=None)
@click.option('--memory-window', type=int, default=None, help='Steps of history kept (default: all).')
@click.option('--as-published', is_flag=True, default=None, help='Use the system exactly as displayed.')
@click.option('--output', '-o', default=None, help='CSV path (default: <label>.csv).')
@click.option('--dump-config', type=click.Path(dir_okay=False), default=None,
              help='Write the effective run configuration to this JSON file.')
@click.pass_obj
@handle_errors
def simulate(container, system_key, structure_file, config_file, alpha, beta, y0, horizon, step, method,
             corrector_iterations, memory_window, as_published, output, dump_config):
    """Integra un sistema y escribe la trayectoria en CSV."""
    overrides = {
        'system': system_key,
        'structure_file': structure_file,
        'alpha': alpha,
        'beta': beta,
        'initial_state': _parse_state(y0) if y0 is not None else None,
        'horizon': horizon,
        'step': step,
        'method': method,
        'corrector_iterations': corrector_iterations,
        'memory_window': memory_window,
        'as_published': as_published or None,
        'output': output,
    }
    run = _resolve_config(container, config_file, overrides)
    system, initial = _build(container, run)

    solver = container.get_solver_service()
    if isinstance(system, FractionalSystemSpec):
        ivp = solver.ivp_from_system(system, run.horizon, initial)
    else:
        ivp = solver.ivp_from_mixed(system, run.horizon, initial)
    trajectory = solver.solve(ivp, run.solver_config())

    path = run.output or f"{system.label}.csv"
    container.get_trajectory_repository().save(trajectory, path)
    if dump_config is not None:
        effective = RunConfig.from_dict({**run.to_dict(), 'output': path, 'initial_state': list(initial)})
        container.get_structure_repository().save_run_config(effective, dump_config)
        click.echo(f"Config: {dump_config}")

    summary = solver.summary(trajectory)
    state = ', '.join(f"{value:.10g}" for value in summary['final_state'])
    click.secho(f"✅ {system.label}: {summary['steps']} steps with {summary['method']}, "
                f"t = {summary['final_time']:g}", fg='green')
    click.echo(f"final state: [{state}]")
    click.echo(f"CSV: {path}")
