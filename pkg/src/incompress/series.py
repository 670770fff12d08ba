"""Truncated power series over the rationals.

A ``PowerSeries`` of order N stores c_0..c_N.  Binary operations require
equal orders; nothing beyond index N is ever read or invented.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Union

from .errors import InvalidOperand, NonInvertibleSeries

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class PowerSeries:
    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[Scalar]):
        coeffs = tuple(Fraction(c) for c in coefficients)
        if not coeffs:
            raise InvalidOperand("a series needs at least the constant term")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def constant(cls, c: Scalar, order: int) -> "PowerSeries":
        return cls([c] + [0] * order)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls.constant(1, order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficient(k)

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise InvalidOperand(f"index {k} outside 0..{self.order}")
        return self.coefficients[k]

    def _check(self, other: "PowerSeries") -> None:
        if self.order != other.order:
            raise InvalidOperand(
                f"truncation order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries.constant(other, self.order)
        self._check(other)
        return PowerSeries(a + b for a, b in zip(self.coefficients, other.coefficients))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-a for a in self.coefficients)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "PowerSeries":
        c = Fraction(c)
        return PowerSeries(c * a for a in self.coefficients)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return self.scale(other)
        self._check(other)
        a, b = self.coefficients, other.coefficients
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += ai * b[j]
        return PowerSeries(out)

    def __rmul__(self, other):
        return self.scale(other)

    def invert(self) -> "PowerSeries":
        a = self.coefficients
        if a[0] == 0:
            raise NonInvertibleSeries("constant term is zero")
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, self.order + 1):
            s = sum(a[j] * out[k - j] for j in range(1, k + 1))
            out.append(-s * inv0)
        return PowerSeries(out)

    def __pow__(self, e: int) -> "PowerSeries":
        if e < 0:
            return self.invert() ** (-e)
        result = PowerSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self):
        terms = [f"{c}*z^{k}" for k, c in enumerate(self.coefficients) if c]
        return f"PowerSeries({' + '.join(terms) or '0'}; O(z^{self.order + 1}))"


# function-style aliases
def series_add(a: PowerSeries, b) -> PowerSeries:
    return a + b


def series_mul(a: PowerSeries, b) -> PowerSeries:
    return a * b


def series_scale(a: PowerSeries, c: Scalar) -> PowerSeries:
    return a.scale(c)


def series_neg(a: PowerSeries) -> PowerSeries:
    return -a


def series_invert(a: PowerSeries) -> PowerSeries:
    return a.invert()


def series_int_pow(a: PowerSeries, e: int) -> PowerSeries:
    return a ** e


def coefficient(a: PowerSeries, k: int) -> Fraction:
    return a.coefficient(k)


@lru_cache(maxsize=None)
def reduced_exp_series(d: int, order: int) -> PowerSeries:
    """(1 - exp(-d z)) / z, i.e. coefficients (-1)^k d^(k+1) / (k+1)!."""
    if d < 1:
        raise InvalidOperand("reduced_exp_series needs d >= 1")
    return PowerSeries(
        Fraction((-1) ** k * d ** (k + 1), factorial(k + 1)) for k in range(order + 1)
    )


@lru_cache(maxsize=None)
def todd_series(order: int) -> PowerSeries:
    """z / (1 - exp(-z)) truncated at ``order``."""
    if order < 0:
        raise InvalidOperand("order must be >= 0")
    return reduced_exp_series(1, order).invert()
