import sys
from fractions import Fraction

import pytest

from lspin.chars import CharacterGroup, Generator


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "REPORT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def free_group():
    """sigma, chi free unramified generators."""
    return CharacterGroup([Generator("chi"), Generator("sigma")])


@pytest.fixture
def sigma_group():
    return CharacterGroup([Generator("sigma")])


@pytest.fixture
def xi_group():
    """xi of order two plus a free sigma, with xi asserted nontrivial."""
    return CharacterGroup(
        [Generator("xi", order=2), Generator("sigma")],
        disequalities=[({"xi": 1}, Fraction(0))],
    )
