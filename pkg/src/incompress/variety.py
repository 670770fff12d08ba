"""Complete intersections in P^n and their numerical invariants.

Everything is computed in the hyperplane class h: deg h^(dim X) on X is the
product of the degrees, and the virtual bundle -T_X has Chern polynomial
prod(1 + d_i h) / (1 + h)^(n+1).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Mapping, Sequence

from .arith import is_prime, primes_up_to, to_int, todd_number
from .errors import (
    DegreeMismatch,
    InconsistentPointIndex,
    InternalInconsistency,
    InvalidOperand,
    NotApplicable,
)
from .series import PowerSeries, reduced_exp_series, todd_series
from .symfun import (
    ELEMENTARY,
    POWERSUM,
    Partition,
    evaluate,
    lambda_p_partitions,
    monomial_in_basis,
    partitions_of,
)


@dataclass(frozen=True)
class CompleteIntersection:
    """X = H_1 ∩ ... ∩ H_m in P^n with deg H_i = degrees[i].

    ``point_index`` is the gcd of degrees of closed points (n_X).  It depends
    on the base field, so it is an input; the default is the product of the
    degrees, the degree of a generic linear section.
    """

    ambient_dim: int
    degrees: tuple[int, ...] = ()
    point_index: int | None = None

    def __post_init__(self):
        degs = tuple(sorted(int(d) for d in self.degrees))
        object.__setattr__(self, "degrees", degs)
        if any(d < 1 for d in degs):
            raise InvalidOperand(f"degrees must be positive: {degs}")
        if self.ambient_dim - len(degs) < 1:
            raise InvalidOperand(
                f"dim X = {self.ambient_dim} - {len(degs)} must be at least 1"
            )
        if self.point_index is not None:
            if self.point_index < 1 or self.degree_product % self.point_index:
                raise InconsistentPointIndex(
                    f"point index {self.point_index} must divide "
                    f"the degree product {self.degree_product}"
                )

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.degrees)

    @property
    def m(self) -> int:
        return len(self.degrees)

    @property
    def degree_product(self) -> int:
        return prod(self.degrees)

    @property
    def n_x(self) -> int:
        return self.degree_product if self.point_index is None else self.point_index

    @property
    def has_default_point_index(self) -> bool:
        return self.n_x == self.degree_product

    @property
    def sigma1(self) -> int:
        return sum(self.degrees)

    @property
    def sigma2(self) -> int:
        ds = self.degrees
        return sum(ds[i] * ds[j] for i in range(len(ds)) for j in range(i + 1, len(ds)))

    @property
    def sigma3(self) -> int:
        ds = self.degrees
        return sum(
            ds[i] * ds[j] * ds[k]
            for i in range(len(ds))
            for j in range(i + 1, len(ds))
            for k in range(j + 1, len(ds))
        )

    def with_point_index(self, n_x: int | None) -> "CompleteIntersection":
        return CompleteIntersection(self.ambient_dim, self.degrees, n_x)

    def __str__(self):
        degs = ",".join(map(str, self.degrees)) or "-"
        return f"CI(P^{self.ambient_dim}; {degs}; n_X={self.n_x})"


# --- Euler characteristic by residues ---------------------------------------


@lru_cache(maxsize=None)
def _chi_residue(n: int, degrees: tuple[int, ...]) -> int:
    # prod(1-e^{-d z}) / (1-e^{-z})^{n+1} = z^{m-n-1} * prod(R_d) * T^{n+1};
    # the residue is the z^{n-m} coefficient of the unit part.
    dim = n - len(degrees)
    unit = todd_series(dim) ** (n + 1)
    for d in degrees:
        unit = unit * reduced_exp_series(d, dim)
    return to_int(unit[dim], "chi residue")


def euler_char_residue(X: CompleteIntersection) -> int:
    """chi(O_X) as a residue at z = 0."""
    return _chi_residue(X.ambient_dim, X.degrees)


def chi_of_product_with_projective(X: CompleteIntersection, a: int) -> tuple[int, int]:
    """(chi, dim) of X x P^a; chi is multiplicative and chi(P^a) = 1."""
    if a < 0:
        raise InvalidOperand("a must be >= 0")
    return euler_char_residue(X), X.dim + a


# --- Chern data of -T_X ------------------------------------------------------


def chern_class_coeffs(X: CompleteIntersection) -> PowerSeries:
    """c(-T_X) in powers of h, truncated at h^(dim X)."""
    N = X.dim
    out = PowerSeries([1, 1] + [0] * (N - 1)) ** (-(X.ambient_dim + 1))
    for d in X.degrees:
        out = out * PowerSeries([1, d] + [0] * (N - 1))
    return out


def power_sums(X: CompleteIntersection, k: int) -> int:
    """s_k with p_k(-T_X) = s_k h^k.

    -T_X = sum O(d_i) - (n+1) O(1) + O, and power sums are additive; the
    trivial summand contributes nothing for k >= 1.
    """
    if k < 1:
        raise InvalidOperand("k must be >= 1")
    return sum(d ** k for d in X.degrees) - (X.ambient_dim + 1)


def _check_partition(X: CompleteIntersection, alpha) -> Partition:
    alpha = Partition(alpha)
    if alpha.degree != X.dim:
        raise DegreeMismatch(f"|{alpha}| = {alpha.degree} but dim X = {X.dim}")
    return alpha


def char_number_powersum(X: CompleteIntersection, alpha) -> int:
    """c_alpha via m_alpha in power sums, p_k -> s_k."""
    alpha = _check_partition(X, alpha)
    q = monomial_in_basis(alpha, POWERSUM)
    values = {k: Fraction(power_sums(X, k)) for k in range(1, X.dim + 1)}
    return to_int(evaluate(q, values) * X.degree_product, f"c_{alpha}")


def char_number_elementary(X: CompleteIntersection, alpha) -> int:
    """c_alpha via m_alpha in elementary functions, e_k -> c_k(-T_X)."""
    alpha = _check_partition(X, alpha)
    q = monomial_in_basis(alpha, ELEMENTARY)
    c = chern_class_coeffs(X)
    values = {k: c[k] for k in range(1, X.dim + 1)}
    return to_int(evaluate(q, values) * X.degree_product, f"c_{alpha}")


def char_number(X: CompleteIntersection, alpha, verify: bool = False) -> int:
    """c_alpha(X) = deg m_alpha(Chern roots of -T_X).

    With ``verify`` the elementary-basis route is also run and must agree.
    """
    value = char_number_powersum(X, alpha)
    if verify:
        other = char_number_elementary(X, alpha)
        if other != value:
            raise InternalInconsistency(
                f"c_{Partition(alpha)} of {X}: power-sum route {value}, "
                f"elementary route {other}"
            )
    return value


@dataclass(frozen=True)
class CharNumberTable:
    variety: CompleteIntersection
    entries: Mapping[Partition, int]

    def __post_init__(self):
        dp = self.variety.degree_product
        for alpha, c in self.entries.items():
            if not isinstance(c, int) or c % dp:
                raise InternalInconsistency(f"c_{alpha} = {c} not divisible by {dp}")

    def __getitem__(self, alpha) -> int:
        return self.entries[Partition(alpha)]

    def normalized(self, alpha) -> Fraction:
        """C_alpha = c_alpha / n_X."""
        return Fraction(self[alpha], self.variety.n_x)


@lru_cache(maxsize=None)
def _char_entries(n: int, degrees: tuple[int, ...]) -> tuple[tuple[Partition, int], ...]:
    X = CompleteIntersection(n, degrees)
    return tuple((a, char_number(X, a)) for a in partitions_of(X.dim))


def char_number_table(X: CompleteIntersection) -> CharNumberTable:
    return CharNumberTable(X, dict(_char_entries(X.ambient_dim, X.degrees)))


def factorial_weight(alpha: Sequence[int]) -> int:
    """prod (alpha_i + 1)!"""
    return prod(factorial(a + 1) for a in alpha)


def euler_char_via_charnumbers(X: CompleteIntersection) -> int:
    """chi(O_X) = (-1)^d sum_alpha c_alpha / prod (alpha_i+1)!."""
    table = char_number_table(X)
    s = sum(Fraction(c, factorial_weight(a)) for a, c in table.entries.items())
    return to_int((-1) ** X.dim * s, "chi from characteristic numbers")


# --- Rost numbers and u_p ------------------------------------------------------


def rost_number(X: CompleteIntersection, p: int) -> int:
    """eta_p = c_(p-1,...,p-1) / p, defined when (p-1) | dim X."""
    if not is_prime(p):
        raise InvalidOperand(f"{p} is not prime")
    if X.dim % (p - 1):
        raise NotApplicable(f"p-1 = {p - 1} does not divide dim X = {X.dim}")
    alpha = Partition([p - 1] * (X.dim // (p - 1)))
    c = char_number_table(X)[alpha]
    if c % p:
        raise InternalInconsistency(f"c_{alpha} = {c} not divisible by {p}")
    return c // p


def u_p_coefficients(d: int, p: int) -> dict[Partition, int]:
    """n_alpha = p tau_{d-1} / prod(alpha_i+1)! for alpha in Lambda_p, |alpha| = d.

    Each n_alpha is an integer prime to p.
    """
    if d < 1:
        raise InvalidOperand("d must be >= 1")
    tau = todd_number(d - 1)
    out = {}
    for alpha in lambda_p_partitions(d, p):
        n_alpha = Fraction(p * tau, factorial_weight(alpha))
        if n_alpha.denominator != 1 or n_alpha.numerator % p == 0:
            raise InternalInconsistency(f"n_{alpha} = {n_alpha} for p = {p}")
        out[alpha] = n_alpha.numerator
    return out


def u_p(X: CompleteIntersection, p: int) -> int:
    """u_p = sum over Lambda_p of tau_{d-1} c_alpha / prod(alpha_i+1)!."""
    if not is_prime(p):
        raise InvalidOperand(f"{p} is not prime")
    table = char_number_table(X)
    total = 0
    for alpha, n_alpha in u_p_coefficients(X.dim, p).items():
        c = table[alpha]
        if c % p:
            raise InternalInconsistency(f"c_{alpha} = {c} not divisible by {p}")
        total += n_alpha * (c // p)
    return total


def lambda_p_char_numbers(X: CompleteIntersection, p: int) -> dict[Partition, int]:
    table = char_number_table(X)
    return {a: table[a] for a in lambda_p_partitions(X.dim, p)}


def relevant_primes(d: int) -> list[int]:
    """Primes p with Lambda_p nonempty in degree d, i.e. p <= d + 1."""
    return primes_up_to(d + 1)
