from functools import lru_cache
from pathlib import Path

import pytest

from supercomm import FamilySpec, enumerate_group, family_presentation

FIXTURES = Path(__file__).parent / "fixtures"

# PASS/FAIL lines from test_acceptance.py, echoed in the terminal summary
ACCEPTANCE_LINES = []


@lru_cache(maxsize=128)
def group_of(spec):
    return enumerate_group(family_presentation(spec), spec.expected_order())


def family_group(family, n=None, m=None):
    return group_of(FamilySpec.of(family, n=n, m=m))


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
