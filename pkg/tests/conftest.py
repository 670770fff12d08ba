import math
from fractions import Fraction
from itertools import combinations

import pytest

ACCEPTANCE_LINES = []


def koszul_chi(n, degrees):
    """chi(O_X) from the Koszul resolution of a complete intersection:
    sum over subsets S of (-1)^|S| chi(O_{P^n}(-sum_S d_i)), where
    chi(O_{P^n}(k)) = (k+1)(k+2)...(k+n)/n!."""

    def chi_line(k):
        return Fraction(math.prod(k + j for j in range(1, n + 1)), math.factorial(n))

    total = Fraction(0)
    for r in range(len(degrees) + 1):
        for S in combinations(degrees, r):
            total += (-1) ** r * chi_line(-sum(S))
    assert total.denominator == 1
    return int(total)


@pytest.fixture
def koszul():
    return koszul_chi


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
