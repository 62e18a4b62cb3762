"""The twelve acceptance checks, one pass/fail line each (summarized at the end of the run)."""

import os

import pytest

from belconf.checks import CHECKS, DEFAULT_SEED, run_check

JOBS = max(1, min(4, os.cpu_count() or 1))


@pytest.mark.parametrize("number", range(1, len(CHECKS) + 1))
def test_acceptance(number, record_property):
    result = run_check(number, seed=DEFAULT_SEED, jobs=JOBS)
    record_property("acceptance", result.line())
    print(result.line())
    assert result.passed, result.line()
