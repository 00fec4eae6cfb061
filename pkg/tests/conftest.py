import sys
import sympy
import pytest

from skeindilog.scalars import Scalar

S = sympy.Symbol("s")


def to_sympy(x: Scalar):
    """Independent view of a Scalar as a sympy rational function."""
    num = sum(c * S**e for e, c in x.numerator.coefficients.items())
    den = sum(c * S**e for e, c in x.denominator.coefficients.items())
    return num / den


def sympy_equal(x: Scalar, expr) -> bool:
    return sympy.simplify(to_sympy(x) - expr) == 0


@pytest.fixture
def s():
    return S


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
