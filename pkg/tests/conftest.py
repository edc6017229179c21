import random

import pytest
from hypothesis import settings

from monoclif.clifford import MultiVector
from monoclif.polynomial import CliffPoly

# filled by test_acceptance, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(1234)


def e(m, *idx, c=1):
    """Blade e_{idx} in dimension m."""
    return MultiVector.blade(m, idx, c)


def scalar(m, c):
    return MultiVector.scalar(m, c)


def xvar(m, j, coeff=1, role="x"):
    exp = [0] * m
    exp[j - 1] = 1
    return CliffPoly(m, role, {tuple(exp): coeff})


def axis_wave(m, role="x"):
    """x1 - e1e2 x2"""
    return xvar(m, 1, role=role) + xvar(m, 2, e(m, 1, 2, c=-1), role=role)
