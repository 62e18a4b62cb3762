import random

import pytest

from belconf.gf import FieldCtx


@pytest.fixture(scope="session")
def F8():
    return FieldCtx(2, 1, 3)


@pytest.fixture(scope="session")
def F27():
    return FieldCtx(3, 1, 3)


@pytest.fixture(scope="session")
def F9():
    return FieldCtx(3, 1, 2)


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_terminal_summary(terminalreporter):
    lines = [
        value
        for key in ("passed", "failed")
        for rep in terminalreporter.stats.get(key, [])
        if rep.when == "call"
        for name, value in rep.user_properties
        if name == "acceptance"
    ]
    if lines:
        terminalreporter.section("acceptance")
        for line in sorted(lines, key=lambda s: int(s.split("[")[1].split("]")[0])):
            terminalreporter.write_line(line)
