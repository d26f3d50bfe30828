"""
EXPLICACIÓN: Pruebas del informe de verificación.
"""

import json

import pytest

from domain.entities.verification import CheckResult, Suite, VerificationReport


def test_suite_parse():
    assert Suite.parse('all') == [Suite.RULES, Suite.BRACKETS, Suite.ALGEBROID, Suite.SOLVER]
    assert Suite.parse('solver') == [Suite.SOLVER]
    with pytest.raises(ValueError):
        Suite.parse('everything')


def test_report_aggregates_checks():
    report = VerificationReport(seed=7, suites=[Suite.RULES])
    report.checks.append(CheckResult(Suite.RULES, 'ok', True, 0.0, 1e-12))
    report.checks.append(CheckResult(Suite.RULES, 'bad', False, float('nan'), 1e-12, 'diverged'))
    assert not report.passed
    assert [check.name for check in report.failures] == ['bad']
    assert len(report.by_suite(Suite.RULES)) == 2

    data = json.loads(report.to_json())
    assert data['seed'] == 7
    assert data['total'] == 2
    assert data['failed'] == 1
    assert data['checks'][1]['residual'] == 'nan'
    assert data['checks'][1]['detail'] == 'diverged'


def test_empty_report_passes():
    assert VerificationReport(seed=1, suites=[]).passed
