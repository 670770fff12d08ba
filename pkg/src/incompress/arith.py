"""Integer and rational helpers: valuations, Todd numbers, Bernoulli numbers.

Rationals are ``fractions.Fraction`` throughout; they are normalized on
construction and Python ints never overflow.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd

from .errors import InternalInconsistency, InvalidOperand, UndefinedValuation

__all__ = [
    "Fraction",
    "binomial",
    "bernoulli",
    "factorial",
    "gcd",
    "is_prime",
    "p_adic_valuation",
    "primes_up_to",
    "to_int",
    "todd_number",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_up_to(n: int) -> list[int]:
    return [k for k in range(2, n + 1) if is_prime(k)]


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def p_adic_valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n."""
    if not is_prime(p):
        raise InvalidOperand(f"{p} is not prime")
    if n == 0:
        raise UndefinedValuation("valuation of 0 is undefined")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


@lru_cache(maxsize=None)
def todd_number(d: int) -> int:
    """tau_d = prod over primes p of p**floor(d/(p-1)).

    Only primes p <= d+1 contribute; tau_0 = 1.
    """
    if d < 0:
        raise InvalidOperand("todd_number needs d >= 0")
    out = 1
    for p in primes_up_to(d + 1):
        out *= p ** (d // (p - 1))
    return out


@lru_cache(maxsize=None)
def _bernoulli_table(r: int) -> tuple[Fraction, ...]:
    # sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1, B_0 = 1
    bs = [Fraction(1)]
    for k in range(1, r + 1):
        s = sum(comb(k + 1, j) * bs[j] for j in range(k))
        bs.append(-s / (k + 1))
    return tuple(bs)


def bernoulli(r: int) -> Fraction:
    """Bernoulli number B_r with B_1 = -1/2."""
    if r < 0:
        raise InvalidOperand("bernoulli needs r >= 0")
    return _bernoulli_table(r)[r]


def to_int(q: Fraction, what: str = "value") -> int:
    """Return q as an int, or raise InternalInconsistency if it is not integral."""
    q = Fraction(q)
    if q.denominator != 1:
        raise InternalInconsistency(f"{what} = {q} is not an integer")
    return q.numerator
