"""
EXPLICACIÓN: Comando verify: corre las suites de comprobaciones e imprime
una línea por comprobación, o el informe JSON con --json.
"""

from typing import Optional

import click

from cli.app import EXIT_VERIFY_FAILED, handle_errors
from domain.entities.verification import Suite

SUITE_CHOICES = [suite.value for suite in Suite] + ['all']


@click.command()
@click.argument('suite', type=click.Choice(SUITE_CHOICES), default='all')
@click.option('--json', 'as_json', is_flag=True, help='Print the machine-readable report.')
@click.option('--report', 'report_path', type=click.Path(dir_okay=False), default=None,
              help='Also write the JSON report to this file.')
@click.pass_obj
@handle_errors
def verify(container, suite: str, as_json: bool, report_path: Optional[str]):
    """Corre las suites rules, brackets, algebroid, solver (o all)."""
    report = container.get_verification_service().run(suite)

    if report_path is not None:
        with open(report_path, 'w', encoding='utf-8') as handle:
            handle.write(report.to_json() + '\n')

    if as_json:
        click.echo(report.to_json())
    else:
        click.echo(f"seed = {report.seed}")
        for check in report.checks:
            marker = '✅' if check.passed else '❌'
            residual = '' if check.residual is None else f"  residual={check.residual:.3e}"
            click.echo(f"{marker} [{check.suite.value}] {check.name}{residual}")
        color = 'green' if report.passed else 'red'
        click.secho(f"{len(report.checks) - len(report.failures)}/{len(report.checks)} checks passed", fg=color)

    if not report.passed:
        raise SystemExit(EXIT_VERIFY_FAILED)
