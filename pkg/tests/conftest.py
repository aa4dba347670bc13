import pytest

from singlab.family import DeformationFamily
from singlab.poly import parse_poly

XYZ = ["x", "y", "z"]

ALTMAN = "x^5 + y^6 + z^5 + y^3*z^2 + 2*t*x^2*y^2*z + t^2*x^4*y"
ALTMAN_F = "x^5 + y^6 + z^5 + y^3*z^2"
BRIANCON_SPEDER = "x^5 + y*z^7 + y^15 + t*x*z^6"


def x13y20_family(l):
    return f"x^13 + y^20 + z*x^6*y^5 + t*x^6*y^8 + t^2*x^10*y^3 + z^{l}"


def x10_family(l):
    return f"x^10 + x^3*y^4*z + y^{l} + z^{l} + t^3*x^4*y^5 + t^5*x^4*y^5"


def family(text):
    return DeformationFamily(parse_poly(text, XYZ, "t"))


@pytest.fixture
def altman():
    return family(ALTMAN)


@pytest.fixture
def briancon_speder():
    return family(BRIANCON_SPEDER)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[key])
