import pytest

from qbm_ohmic import P1


@pytest.fixture
def p1():
    return P1


@pytest.fixture
def sigma_cap():
    """Default packet width: a quarter of the thermal wavelength."""
    return P1.lambda_th / 4.0


def pytest_terminal_summary(terminalreporter):
    from tests.test_acceptance import REPORT

    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
