import random
from fractions import Fraction
from math import gcd

import pytest

from dvl.periodic import PeriodicFunction


@pytest.fixture
def rng():
    return random.Random(20240601)


def dirichlet(n, values_on_coprimes):
    """Dirichlet-type function mod n from a dict {a: value}."""
    vals = [Fraction(values_on_coprimes.get(a, 0)) if gcd(a, n) == 1 else Fraction(0) for a in range(1, n + 1)]
    return PeriodicFunction(n, tuple(vals))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
