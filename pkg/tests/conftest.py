import pytest

from congruence_ideals.order_core import MonicPoly


@pytest.fixture
def cubic():
    return MonicPoly([0, 0, -2])


@pytest.fixture
def gauss():
    return MonicPoly([0, 1])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
