from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, strategies as st

from incompress.arith import (
    bernoulli,
    binomial,
    factorial,
    gcd,
    is_prime,
    p_adic_valuation,
    primes_up_to,
    todd_number,
)
from incompress.errors import InvalidOperand, UndefinedValuation
from incompress.series import todd_series


def test_fraction_basics():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    assert 0 + Fraction(7, 3) == Fraction(7, 3)
    half = Fraction(2, 4)
    assert (half.numerator, half.denominator) == (1, 2)
    with pytest.raises(ZeroDivisionError):
        Fraction(1) / 0


@given(st.fractions(), st.fractions(), st.fractions())
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    r = a * b + c
    assert gcd(abs(r.numerator), r.denominator) == 1 and r.denominator >= 1


def test_valuation_examples():
    assert p_adic_valuation(12, 2) == 2
    assert p_adic_valuation(todd_number(2), 3) == 1
    assert p_adic_valuation(-40, 5) == 1
    with pytest.raises(UndefinedValuation):
        p_adic_valuation(0, 2)
    with pytest.raises(InvalidOperand):
        p_adic_valuation(12, 4)


def _factorize(n):
    out, f = {}, 2
    while n > 1:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    return out


@pytest.mark.parametrize("m", range(0, 51, 7))
def test_legendre_matches_factorization(m):
    fac = _factorize(factorial(m))
    for p in primes_up_to(13):
        legendre = sum(m // p ** j for j in range(1, 10))
        assert p_adic_valuation(factorial(m), p) == legendre == fac.get(p, 0)


def test_todd_numbers_printed_values():
    assert [todd_number(d) for d in range(5)] == [1, 2, 12, 24, 720]
    assert todd_number(5) == 2 ** 5 * 3 ** 2 * 5 == 1440


def test_todd_divisibility_and_valuations():
    for d in range(1, 31):
        assert todd_number(d) % todd_number(d - 1) == 0
    for d in range(21):
        for p in primes_up_to(d + 1):
            assert p_adic_valuation(todd_number(d), p) == d // (p - 1)


def test_todd_number_is_denominator_of_todd_polynomial_on_line_bundles():
    # for one root x the degree-d part is B+_d/d! x^d; tau_d is a multiple of its denominator
    T = todd_series(12)
    for d in range(13):
        assert todd_number(d) % T[d].denominator == 0


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(6) == Fraction(1, 42)
    assert bernoulli(10) == Fraction(5, 66)
    assert all(bernoulli(r) == 0 for r in range(3, 31, 2))


def test_bernoulli_recurrence():
    for r in range(1, 31):
        assert sum(binomial(r + 1, j) * bernoulli(j) for j in range(r + 1)) == 0


def test_misc_integer_helpers():
    assert factorial(4) == 24
    assert binomial(2 + 2, 3) == 4
    assert binomial(3, 5) == 0 and binomial(3, -1) == 0
    assert gcd(12, 8) == 4
    assert primes_up_to(13) == [2, 3, 5, 7, 11, 13]
    assert [k for k in range(30) if is_prime(k)] == primes_up_to(29)
