"""스위트 워크플로우 통합 테스트"""

import pytest

from src.cli.commands import run
from src.cli.workflows import run_suite
from src.core.exceptions import InvariantViolation


@pytest.mark.asyncio
async def test_run_suite_reports_in_requested_order():
    # When
    report = await run_suite(["roundtrip", "separation", "algebra"], samples=4, seed=7, dim=1)

    # Then
    assert report.passed
    assert [summary.name for summary in report.suites] == ["roundtrip", "separation", "algebra"]
    assert all(summary.cases == 4 for summary in report.suites)
    assert report.suites[1].exhibits


@pytest.mark.asyncio
async def test_run_suite_is_deterministic_under_concurrency():
    # When
    serial = await run_suite(["closure"], samples=6, seed=3, dim=2, concurrency=1)
    parallel = await run_suite(["closure"], samples=6, seed=3, dim=2, concurrency=6)

    # Then
    assert serial == parallel


@pytest.mark.asyncio
async def test_run_suite_validates_automorphisms_with_requested_probes():
    # When
    report = await run_suite(
        ["automorph", "equivalence_laws"], samples=3, seed=7, dim=2, validation_probes=10
    )

    # Then
    assert report.passed
    assert all(summary.cases == 3 for summary in report.suites)


@pytest.mark.asyncio
async def test_run_suite_rejects_unknown_name():
    with pytest.raises(InvariantViolation):
        await run_suite(["nope"], samples=2, seed=7, dim=1)


@pytest.mark.slow
def test_suite_command(capsys):
    # When
    code = run(["suite", "--name", "witness_sets", "--samples", "5", "--seed", "9"])

    # Then
    assert code == 0
    assert '"passed":true' in capsys.readouterr().out


def test_suite_command_accepts_probe_count(capsys):
    # When
    code = run(["--dim", "2", "suite", "--name", "automorph", "--samples", "2", "--probes", "5"])

    # Then
    assert code == 0
    assert '"passed":true' in capsys.readouterr().out
