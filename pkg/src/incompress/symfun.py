"""Partitions and exact basis changes between monomial, elementary and
power-sum symmetric functions.

Transitions are computed by brute force: every symmetric function of
degree d is expanded as an explicit polynomial in d variables, its
monomial-basis coefficients are read off, and the resulting triangular
system is solved by leading-term elimination.  This is slow for large d but
it is hard to get wrong, and it avoids normalization traps.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import prod
from typing import Iterable, Mapping, Sequence

from .arith import is_prime
from .errors import InternalInconsistency, InvalidOperand

MONOMIAL = "monomial"
ELEMENTARY = "elementary"
POWERSUM = "powersum"
BASES = (MONOMIAL, ELEMENTARY, POWERSUM)


class Partition(tuple):
    """Weakly increasing tuple of positive ints, e.g. ``Partition((1, 2))``.

    Input order is irrelevant; parts are sorted on construction.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted(int(a) for a in parts)
        if parts and parts[0] <= 0:
            raise InvalidOperand(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def degree(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        desc = sorted(self, reverse=True)
        return Partition(sum(1 for a in desc if a > i) for i in range(desc[0]))

    def exponent_vector(self, nvars: int) -> tuple[int, ...]:
        """Parts in decreasing order, zero-padded to ``nvars``."""
        if len(self) > nvars:
            raise InvalidOperand(f"{self} has more than {nvars} parts")
        return tuple(sorted(self, reverse=True)) + (0,) * (nvars - len(self))

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"


def _increasing_partitions(d: int, smallest: int, allowed: Sequence[int] | None):
    if d == 0:
        yield ()
        return
    parts = allowed if allowed is not None else range(1, d + 1)
    for a in parts:
        if a < smallest:
            continue
        if a > d:
            break
        for rest in _increasing_partitions(d - a, a, allowed):
            yield (a,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(d: int) -> tuple[Partition, ...]:
    return tuple(Partition(t) for t in _increasing_partitions(d, 1, None))


def partitions_of(d: int) -> list[Partition]:
    """All partitions of d, lexicographic on the increasing part sequence."""
    if d < 0:
        raise InvalidOperand("degree must be >= 0")
    return list(_partitions_cached(d))


def lambda_p_parts(d: int, p: int) -> list[int]:
    """Admissible parts p**i - 1 (i >= 1) not exceeding d."""
    out = []
    q = p
    while q - 1 <= d:
        out.append(q - 1)
        q *= p
    return out


def lambda_p_partitions(d: int, p: int) -> list[Partition]:
    """Partitions of d all of whose parts have the form p**i - 1."""
    if not is_prime(p):
        raise InvalidOperand(f"{p} is not prime")
    if d < 0:
        raise InvalidOperand("degree must be >= 0")
    return [Partition(t) for t in _increasing_partitions(d, 1, lambda_p_parts(d, p))]


def in_lambda_p(alpha: Sequence[int], p: int) -> bool:
    return all(a in lambda_p_parts(a, p) for a in alpha)


# --- explicit polynomials -------------------------------------------------


@dataclass
class ExponentPolynomial:
    """Polynomial in ``num_vars`` variables as {exponent tuple: coefficient}."""

    num_vars: int
    terms: dict = field(default_factory=dict)

    @classmethod
    def one(cls, num_vars: int) -> "ExponentPolynomial":
        return cls(num_vars, {(0,) * num_vars: 1})

    def __add__(self, other: "ExponentPolynomial") -> "ExponentPolynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return ExponentPolynomial(self.num_vars, out)

    def scale(self, c) -> "ExponentPolynomial":
        if not c:
            return ExponentPolynomial(self.num_vars, {})
        return ExponentPolynomial(self.num_vars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: "ExponentPolynomial") -> "ExponentPolynomial":
        if self.num_vars != other.num_vars:
            raise InvalidOperand("variable count mismatch")
        # pack exponent vectors into ints so that vector addition is int addition
        deg = max((sum(e) for e in self.terms), default=0)
        deg += max((sum(e) for e in other.terms), default=0)
        base = deg + 1
        n = self.num_vars

        def pack(e):
            k = 0
            for a in e:
                k = k * base + a
            return k

        left = [(pack(e), c) for e, c in self.terms.items()]
        right = [(pack(e), c) for e, c in other.terms.items()]
        out: dict = {}
        for k1, c1 in left:
            for k2, c2 in right:
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        terms = {}
        for k, c in out.items():
            if not c:
                continue
            e = [0] * n
            for i in range(n - 1, -1, -1):
                k, e[i] = divmod(k, base)
            terms[tuple(e)] = c
        return ExponentPolynomial(n, terms)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * prod(Fraction(x) ** k for x, k in zip(point, e))
        return total

    def monomial_coefficients(self) -> dict[Partition, Fraction]:
        """Coefficients in the monomial basis (valid for symmetric input)."""
        out = {}
        for e, c in self.terms.items():
            if all(e[i] >= e[i + 1] for i in range(len(e) - 1)):
                out[Partition(a for a in e if a)] = c
        return out


@lru_cache(maxsize=None)
def monomial_polynomial(alpha: Partition, num_vars: int) -> ExponentPolynomial:
    """m_alpha: every distinct rearrangement of alpha's exponents, coefficient 1."""
    vec = Partition(alpha).exponent_vector(num_vars)
    return ExponentPolynomial(num_vars, {e: 1 for e in set(permutations(vec))})


@lru_cache(maxsize=None)
def _elementary_single(k: int, num_vars: int) -> ExponentPolynomial:
    terms = {}
    for idx in combinations(range(num_vars), k):
        e = [0] * num_vars
        for i in idx:
            e[i] = 1
        terms[tuple(e)] = 1
    return ExponentPolynomial(num_vars, terms)


@lru_cache(maxsize=None)
def _powersum_single(k: int, num_vars: int) -> ExponentPolynomial:
    terms = {}
    for i in range(num_vars):
        e = [0] * num_vars
        e[i] = k
        terms[tuple(e)] = 1
    return ExponentPolynomial(num_vars, terms)


@lru_cache(maxsize=None)
def basis_polynomial(basis: str, lam: Partition, num_vars: int) -> ExponentPolynomial:
    """e_lambda, p_lambda or m_lambda as an explicit polynomial."""
    lam = Partition(lam)
    if basis == MONOMIAL:
        return monomial_polynomial(lam, num_vars)
    single = {ELEMENTARY: _elementary_single, POWERSUM: _powersum_single}.get(basis)
    if single is None:
        raise InvalidOperand(f"unknown basis {basis!r}")
    out = ExponentPolynomial.one(num_vars)
    for a in lam:
        out = out * single(a, num_vars)
    return out


@lru_cache(maxsize=None)
def _basis_in_monomials(basis: str, lam: Partition) -> dict[Partition, Fraction]:
    return basis_polynomial(basis, lam, lam.degree).monomial_coefficients()


# --- basis transitions ----------------------------------------------------


@dataclass(frozen=True)
class SymPolyInBasis:
    basis: str
    degree: int
    terms: Mapping[Partition, Fraction]

    def __post_init__(self):
        if self.basis not in BASES:
            raise InvalidOperand(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.terms.items():
            lam = Partition(lam)
            if lam.degree != self.degree:
                raise InvalidOperand(f"{lam} does not have degree {self.degree}")
            if c:
                clean[lam] = Fraction(c)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def to_exponent_polynomial(self, num_vars: int) -> ExponentPolynomial:
        out = ExponentPolynomial(num_vars, {})
        for lam, c in self.terms.items():
            out = out + basis_polynomial(self.basis, lam, num_vars).scale(c)
        return out

    def __str__(self):
        sym = {MONOMIAL: "m", ELEMENTARY: "e", POWERSUM: "p"}[self.basis]
        return " + ".join(f"{c}*{sym}{lam}" for lam, c in self.terms.items()) or "0"


def _lex_key(lam: Partition, d: int):
    return lam.exponent_vector(d)


@lru_cache(maxsize=None)
def _monomial_in_basis(alpha: Partition, target: str) -> SymPolyInBasis:
    d = alpha.degree
    if d == 0:
        return SymPolyInBasis(target, 0, {Partition(): 1})
    if target == MONOMIAL:
        return SymPolyInBasis(target, d, {alpha: 1})
    remaining: dict[Partition, Fraction] = {alpha: Fraction(1)}
    result: dict[Partition, Fraction] = {}
    # e_{lam'} has leading (lex-largest) monomial m_lam with coefficient 1;
    # p_lam has lex-smallest monomial m_lam with coefficient prod(mult!).
    while remaining:
        if target == ELEMENTARY:
            lead = max(remaining, key=lambda lam: _lex_key(lam, d))
            generator = lead.conjugate()
        elif target == POWERSUM:
            lead = min(remaining, key=lambda lam: _lex_key(lam, d))
            generator = lead
        else:
            raise InvalidOperand(f"unknown basis {target!r}")
        expansion = _basis_in_monomials(target, generator)
        pivot = expansion.get(lead)
        if not pivot:
            raise InternalInconsistency(f"zero pivot for {lead} in {target} basis")
        c = remaining[lead] / pivot
        result[generator] = result.get(generator, 0) + c
        for lam, v in expansion.items():
            nv = remaining.get(lam, 0) - c * v
            if nv:
                remaining[lam] = nv
            else:
                remaining.pop(lam, None)
    return SymPolyInBasis(target, d, result)


def monomial_in_basis(alpha: Sequence[int], target: str) -> SymPolyInBasis:
    """Expand the monomial symmetric function m_alpha in ``target`` basis."""
    return _monomial_in_basis(Partition(alpha), target)


def evaluate(q: SymPolyInBasis, values: Mapping[int, Fraction]) -> Fraction:
    """Substitute values[k] for the k-th basis generator (e_k or p_k)."""
    if q.basis == MONOMIAL:
        raise InvalidOperand("monomial basis has no multiplicative generators")
    total = Fraction(0)
    for lam, c in q.terms.items():
        term = Fraction(c)
        for a in lam:
            if a not in values:
                raise InvalidOperand(f"missing value for generator {a}")
            term *= values[a]
        total += term
    return total


def evaluate_in_powersums(q: SymPolyInBasis, p_values: Mapping[int, Fraction]) -> Fraction:
    if q.basis != POWERSUM:
        raise InvalidOperand("expected a power-sum expansion")
    return evaluate(q, p_values)


def evaluate_in_elementary(q: SymPolyInBasis, e_values: Mapping[int, Fraction]) -> Fraction:
    if q.basis != ELEMENTARY:
        raise InvalidOperand("expected an elementary expansion")
    return evaluate(q, e_values)


def powersums_from_elementary(e_values: Mapping[int, Fraction], kmax: int) -> dict[int, Fraction]:
    """Newton's identities: p_1..p_kmax from e_1..e_kmax (missing e_i are 0)."""
    e = lambda i: Fraction(e_values.get(i, 0))
    p: dict[int, Fraction] = {}
    for k in range(1, kmax + 1):
        s = (-1) ** (k - 1) * k * e(k)
        for i in range(1, k):
            s += (-1) ** (i - 1) * e(i) * p[k - i]
        p[k] = s
    return p


def elementary_values(point: Sequence) -> dict[int, Fraction]:
    """e_1..e_n of the coordinates of ``point``."""
    coeffs = [Fraction(1)]
    for x in point:
        x = Fraction(x)
        coeffs = [a + x * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return {k: coeffs[k] for k in range(1, len(coeffs))}
