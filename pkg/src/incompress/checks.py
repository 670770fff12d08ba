"""Exhaustive invariant sweeps over families of complete intersections.

Each ``check_*`` function returns a :class:`CheckResult`; ``run_all`` runs
every check for a :class:`SweepConfig`.  The CLI ``sweep`` command and the
acceptance tests both go through here.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from itertools import combinations_with_replacement
from typing import Callable, Iterator

from .arith import bernoulli, is_prime, p_adic_valuation, primes_up_to, todd_number
from .criteria import cond3_check, corollary_check, myex_criterion
from .series import todd_series
from .symfun import (
    ELEMENTARY,
    POWERSUM,
    elementary_values,
    evaluate,
    in_lambda_p,
    lambda_p_partitions,
    monomial_in_basis,
    partitions_of,
    powersums_from_elementary,
)
from .variety import (
    CompleteIntersection,
    char_number_elementary,
    char_number_table,
    euler_char_residue,
    euler_char_via_charnumbers,
    factorial_weight,
    rost_number,
    u_p,
)


@dataclass
class SweepConfig:
    max_dim: int = 5
    max_m: int = 3
    max_degree: int = 5
    cond3_max_m: int = 4
    cond3_max_degree: int = 6
    prpart_max_d: int = 12
    prpart_max_p: int = 13
    symfun_max_degree: int = 8
    symfun_points: int = 50
    seed: int = 20080601


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.cases > 0 and not self.failures

    def expect(self, ok: bool, detail) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(detail)


def complete_intersections(max_dim: int, max_m: int, max_degree: int,
                           dims: Iterator[int] | None = None) -> Iterator[CompleteIntersection]:
    """All CIs with 1 <= dim <= max_dim, m <= max_m, degrees in 1..max_degree."""
    for d in dims if dims is not None else range(1, max_dim + 1):
        for m in range(max_m + 1):
            for degs in combinations_with_replacement(range(1, max_degree + 1), m):
                yield CompleteIntersection(d + m, degs)


def divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def _timed(fn: Callable[..., CheckResult]):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _sweep(cfg: SweepConfig):
    return complete_intersections(cfg.max_dim, cfg.max_m, cfg.max_degree)


@_timed
def check_todd_numbers(cfg: SweepConfig) -> CheckResult:
    res = CheckResult("todd_numbers")
    for d, want in enumerate([1, 2, 12, 24, 720]):
        res.expect(todd_number(d) == want, (d, todd_number(d)))
    for d in range(1, 31):
        res.expect(todd_number(d) % todd_number(d - 1) == 0, ("divisibility", d))
    return res


@_timed
def check_chi_routes(cfg: SweepConfig) -> CheckResult:
    res = CheckResult("chi_residue_equals_charnumber_sum")
    for X in _sweep(cfg):
        a, b = euler_char_residue(X), euler_char_via_charnumbers(X)
        res.expect(a == b, (str(X), a, b))
    return res


@_timed
def check_charnumber_routes(cfg: SweepConfig) -> CheckResult:
    res = CheckResult("charnumber_powersum_equals_elementary")
    for X in _sweep(cfg):
        table = char_number_table(X)
        for alpha, c in table.entries.items():
            other = char_number_elementary(X, alpha)
            res.expect(c == other, (str(X), str(alpha), c, other))
    return res


@_timed
def check_degree_divisibility(cfg: SweepConfig) -> CheckResult:
    res = CheckResult("degree_product_divides_charnumbers")
    for X in _sweep(cfg):
        for alpha, c in char_number_table(X).entries.items():
            res.expect(c % X.degree_product == 0, (str(X), str(alpha), c))
    return res


@_timed
def check_lambda_p_divisibility(cfg: SweepConfig) -> CheckResult:
    res = CheckResult("p_divides_c_alpha_on_lambda_p")
    for X in _sweep(cfg):
        table = char_number_table(X)
        for p in primes_up_to(X.dim + 1):
            for alpha in lambda_p_partitions(X.dim, p):
                res.expect(table[alpha] % p == 0, (str(X), p, str(alpha), table[alpha]))
    return res


@_timed
def check_closed_forms(cfg: SweepConfig) -> CheckResult:
    """chi in terms of c_alpha for curves, surfaces and 3-folds."""
    res = CheckResult("chi_closed_forms_dim_1_2_3")
    for X in _sweep(cfg):
        if X.dim > 3:
            continue
        t = char_number_table(X)
        chi = euler_char_residue(X)
        if X.dim == 1:
            rhs = Fraction(-t[(1,)], 2)
        elif X.dim == 2:
            rhs = Fraction(t[(1, 1)], 4) + Fraction(t[(2,)], 6)
        else:
            rhs = (-Fraction(t[(1, 1, 1)], 8) - Fraction(t[(1, 2)], 12)
                   - Fraction(t[(3,)], 24))
        res.expect(chi == rhs, (str(X), chi, rhs))
    return res


@_timed
def check_u_p_forms(cfg: SweepConfig) -> CheckResult:
    """u_p against its explicit low-dimensional forms, and Rost numbers."""
    res = CheckResult("u_p_explicit_forms")
    for X in _sweep(cfg):
        if X.dim > 3:
            continue
        t = char_number_table(X)
        if X.dim == 1:
            want = {2: Fraction(t[(1,)], 2)}
            res.expect(rost_number(X, 2) == u_p(X, 2), (str(X), "eta_2 = u_2"))
            res.expect(euler_char_residue(X) == -u_p(X, 2), (str(X), "chi = -u_2"))
        elif X.dim == 2:
            want = {2: Fraction(t[(1, 1)], 2), 3: Fraction(t[(2,)], 3)}
            res.expect(rost_number(X, 2) == u_p(X, 2), (str(X), "eta_2 = u_2"))
            res.expect(rost_number(X, 3) == u_p(X, 3), (str(X), "eta_3 = u_3"))
        else:
            want = {2: Fraction(3 * t[(1, 1, 1)], 2) + Fraction(t[(3,)], 2)}
            res.expect(rost_number(X, 2) == t[(1, 1, 1)] // 2, (str(X), "eta_2"))
        for p, w in want.items():
            res.expect(u_p(X, p) == w, (str(X), p, u_p(X, p), w))
    return res


@_timed
def check_corollary_i(cfg: SweepConfig) -> CheckResult:
    res = CheckResult("corollary_i_default_point_index")
    for X in _sweep(cfg):
        chi = euler_char_residue(X)
        res.expect(chi * todd_number(X.dim) % X.degree_product == 0, (str(X), chi))
    return res


@_timed
def check_prpart(cfg: SweepConfig) -> CheckResult:
    """v_p(tau_{d-1}) + 1 >= v_p(prod(alpha_i+1)!), equality iff alpha in Lambda_p."""
    res = CheckResult("valuation_inequality_lambda_p")
    for d in range(1, cfg.prpart_max_d + 1):
        for p in primes_up_to(cfg.prpart_max_p):
            lhs = p_adic_valuation(todd_number(d - 1), p) + 1
            for alpha in partitions_of(d):
                rhs = p_adic_valuation(factorial_weight(alpha), p)
                ok = lhs >= rhs and ((lhs == rhs) == in_lambda_p(alpha, p))
                res.expect(ok, (d, p, str(alpha), lhs, rhs))
    return res


@_timed
def check_u_p_proposition(cfg: SweepConfig) -> CheckResult:
    """n does not divide chi tau_{d-1}  iff  n does not divide some u_p."""
    res = CheckResult("chi_tau_vs_u_p_equivalence")
    for X in _sweep(cfg):
        chi_tau = euler_char_residue(X) * todd_number(X.dim - 1)
        ups = [u_p(X, p) for p in primes_up_to(X.dim + 1)]
        for n in divisors(X.degree_product):
            lhs = chi_tau % n != 0
            rhs = any(u % n for u in ups)
            res.expect(lhs == rhs, (str(X), n, chi_tau, ups))
    return res


@_timed
def check_myex_implies_corollary(cfg: SweepConfig) -> CheckResult:
    res = CheckResult("myex_implies_corollary_ii")
    for X in _sweep(cfg):
        p = X.dim + 1
        if not is_prime(p):
            continue
        chi = euler_char_residue(X)
        for n in divisors(X.degree_product):
            Y = X.with_point_index(n)
            if myex_criterion(Y, p):
                res.expect(corollary_check(Y, chi)["incompressible_by_ii"], (str(Y), p))
    return res


@_timed
def check_cond3(cfg: SweepConfig) -> CheckResult:
    res = CheckResult("cond3_predicate_equals_table")
    for X in complete_intersections(3, cfg.cond3_max_m, cfg.cond3_max_degree, dims=[3]):
        c = cond3_check(X)
        res.expect(c["predicate"] == c["table_case"], (str(X), c))
    return res


@_timed
def check_todd_bernoulli(cfg: SweepConfig) -> CheckResult:
    res = CheckResult("todd_series_bernoulli_bridge")
    T = todd_series(20)
    for r in range(21):
        want = Fraction(1, 2) if r == 1 else bernoulli(r)
        res.expect(T[r] * factorial(r) == want, (r, T[r]))
    return res


@_timed
def check_symfun_routes(cfg: SweepConfig) -> CheckResult:
    """m_alpha via e-basis and via p-basis agree at random rational points."""
    res = CheckResult("symfun_elementary_vs_powersum")
    rng = random.Random(cfg.seed)
    for d in range(1, cfg.symfun_max_degree + 1):
        for alpha in partitions_of(d):
            qe = monomial_in_basis(alpha, ELEMENTARY)
            qp = monomial_in_basis(alpha, POWERSUM)
            for _ in range(cfg.symfun_points):
                point = [Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(d)]
                e = elementary_values(point)
                p = powersums_from_elementary(e, d)
                a, b = evaluate(qe, e), evaluate(qp, p)
                res.expect(a == b, (str(alpha), point, a, b))
    return res


@_timed
def check_known_values(cfg: SweepConfig) -> CheckResult:
    res = CheckResult("known_euler_characteristics")
    for n in range(1, 7):
        res.expect(euler_char_residue(CompleteIntersection(n)) == 1, ("P", n))
    for d in range(1, 9):
        want = 1 - (d - 1) * (d - 2) // 2
        res.expect(euler_char_residue(CompleteIntersection(2, (d,))) == want, ("plane", d))
    res.expect(euler_char_residue(CompleteIntersection(3, (4,))) == 2, "K3")
    for p in (3, 5):
        res.expect(euler_char_residue(CompleteIntersection(p - 1, (p,))) == 0, ("CY", p))
    return res


ALL_CHECKS = [
    check_todd_numbers,
    check_todd_bernoulli,
    check_known_values,
    check_chi_routes,
    check_charnumber_routes,
    check_closed_forms,
    check_u_p_forms,
    check_degree_divisibility,
    check_lambda_p_divisibility,
    check_corollary_i,
    check_prpart,
    check_u_p_proposition,
    check_myex_implies_corollary,
    check_cond3,
    check_symfun_routes,
]


def run_all(cfg: SweepConfig | None = None) -> list[CheckResult]:
    cfg = cfg or SweepConfig()
    return [check(cfg) for check in ALL_CHECKS]
