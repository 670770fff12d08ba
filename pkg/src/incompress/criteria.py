"""Degree-formula congruences and incompressibility criteria.

All criteria here are sufficient conditions.  A criterion that does not fire
yields ``Verdict.UNDECIDED``; it never certifies compressibility.
"""
from __future__ import annotations

import enum
from math import comb
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .arith import is_prime, primes_up_to, todd_number
from .errors import (
    InconsistentPointIndex,
    InternalInconsistency,
    InvalidOperand,
    NotApplicable,
)
from .symfun import Partition, in_lambda_p, lambda_p_partitions
from .variety import (
    CharNumberTable,
    CompleteIntersection,
    char_number_table,
    euler_char_residue,
    euler_char_via_charnumbers,
    rost_number,
    u_p,
)


class Verdict(str, enum.Enum):
    PROVEN = "incompressible-proven"
    UNDECIDED = "not-decided"
    NOT_APPLICABLE = "not-applicable"

    @classmethod
    def of(cls, fired: Optional[bool]) -> "Verdict":
        if fired is None:
            return cls.NOT_APPLICABLE
        return cls.PROVEN if fired else cls.UNDECIDED


@dataclass(frozen=True)
class MapHypothesis:
    """Data of a hypothetical rational map f: Y --> X."""

    chi_Y: int
    dim_Y: int
    chi_X: int
    n_X: int
    deg_f: int

    def __post_init__(self):
        if self.dim_Y < 1:
            raise InvalidOperand("dim_Y must be >= 1")
        if self.n_X < 1:
            raise InvalidOperand("n_X must be >= 1")
        if self.deg_f < 0:
            raise InvalidOperand("deg_f must be >= 0 (0 means non-dominant)")


def dfr_congruence_holds(h: MapHypothesis) -> bool:
    """chi_Y tau_{dim Y - 1} == deg f chi_X tau_{dim Y - 1}  (mod n_X)."""
    tau = todd_number(h.dim_Y - 1)
    return (h.chi_Y - h.deg_f * h.chi_X) * tau % h.n_X == 0


def corollary_check(X: CompleteIntersection, chi: int | None = None) -> dict[str, bool]:
    """Return ``sanity_i`` (n_X | chi tau_d) and ``incompressible_by_ii``
    (n_X does not divide chi tau_{d-1}).

    ``chi`` overrides the computed Euler characteristic, e.g. chi = 1 for a
    rationally connected variety.
    """
    if chi is None:
        chi = euler_char_residue(X)
    d, n_x = X.dim, X.n_x
    sanity = chi * todd_number(d) % n_x == 0
    if not sanity:
        raise InconsistentPointIndex(
            f"n_X = {n_x} does not divide chi * tau_{d} = {chi * todd_number(d)}"
        )
    return {
        "sanity_i": sanity,
        "incompressible_by_ii": chi * todd_number(d - 1) % n_x != 0,
    }


def rationally_connected_verdict(dim: int, n_x: int) -> bool:
    """chi = 1 case: incompressible if n_X does not divide tau_{dim - 1}."""
    return todd_number(dim - 1) % n_x != 0


def myex_criterion(X: CompleteIntersection, p: int) -> Optional[bool]:
    """For dim X = p - 1: p does not divide #{i : p | d_i} and p does not
    divide (prod d_i)/n_X.  ``None`` when dim X != p - 1."""
    if not is_prime(p):
        raise InvalidOperand(f"{p} is not prime")
    if X.dim != p - 1:
        return None
    m_p = sum(1 for d in X.degrees if d % p == 0)
    return m_p % p != 0 and (X.degree_product // X.n_x) % p != 0


def rost_congruence_holds(
    c_alpha_Y: int, c_alpha_X: int, alpha, p: int, deg_f: int, n_X: int
) -> bool:
    """c_alpha(Y)/p == deg f c_alpha(X)/p  (mod n_X), alpha in Lambda_p."""
    alpha = Partition(alpha)
    if not is_prime(p) or not in_lambda_p(alpha, p):
        raise InvalidOperand(f"{alpha} is not in Lambda_{p}")
    if c_alpha_Y % p or c_alpha_X % p:
        raise InvalidOperand(f"characteristic numbers for {alpha} must be divisible by {p}")
    return (c_alpha_Y - deg_f * c_alpha_X) // p % n_X == 0


def rost_incompressible(c_alpha_X: int, p: int, n_X: int) -> bool:
    """n_X does not divide c_alpha(X)/p."""
    return (c_alpha_X // p) % n_X != 0


def cond3_table(m: int, sigma1: int, sigma2: int) -> bool:
    """Four-case classification of condition cond3 by m mod 4."""
    r = m % 4
    if r == 0:
        return True
    if r == 2:
        return sigma1 % 2 == 0
    if r == 1:
        return sigma1 % 2 == 1 or sigma2 % 2 == 1
    return sigma1 % 2 == 1 or sigma2 % 2 == 0


def cond3_parity(m: int, sigma1: int, sigma2: int, sigma3: int) -> bool:
    """cond3 from the parities of C_(3) and C_(1,1,1), keeping the sigma3 term.

    C_(3) = sum d_i^3 - m - 4 and C_(1,1,1) is the h^3 coefficient of
    prod(1 + d_i h) / (1 + h)^(m+4), i.e.
    sigma3 - (m+4) sigma2 + C(m+5,2) sigma1 - C(m+6,3).
    """
    c3 = (sigma1 + m) % 2
    c111 = (sigma3 + m * sigma2 + comb(m + 5, 2) * sigma1 + comb(m + 6, 3)) % 2
    return c3 == 0 or c111 == 0


def cond3_check(X: CompleteIntersection) -> dict:
    """C_(1,1,1) even or C_(3) even, from exact characteristic numbers, next
    to the m mod 4 table.  Only meaningful at the default point index."""
    if X.dim != 3:
        raise NotApplicable("cond3 needs a 3-fold")
    if not X.has_default_point_index:
        raise NotApplicable("cond3 is tabulated only for n_X = prod d_i")
    t = char_number_table(X)
    c111, c3 = t[(1, 1, 1)] // X.n_x, t[(3,)] // X.n_x
    return {
        "predicate": c111 % 2 == 0 or c3 % 2 == 0,
        "table_case": cond3_table(X.m, X.sigma1, X.sigma2),
        "parity_with_sigma3": cond3_parity(X.m, X.sigma1, X.sigma2, X.sigma3),
        "C_111": c111,
        "C_3": c3,
    }


# --- reports -----------------------------------------------------------------


@dataclass(frozen=True)
class CriterionVerdict:
    criterion: str
    verdict: Verdict
    evidence: Mapping[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class PrimeData:
    eta_p: Optional[int]
    u_p: int
    rost_verdict: bool
    u_p_verdict: bool


@dataclass(frozen=True)
class IncompressibilityReport:
    variety: CompleteIntersection
    chi: int
    chi_via_charnumbers: int
    tau_d: int
    tau_d_minus_1: int
    charnumbers: CharNumberTable
    per_prime: Mapping[int, PrimeData]
    sanity_i: bool
    corollary_ii_verdict: bool
    myex_verdict: Optional[bool]
    cond3: Optional[bool]
    verdicts: tuple[CriterionVerdict, ...]

    @property
    def overall(self) -> Verdict:
        if any(v.verdict is Verdict.PROVEN for v in self.verdicts):
            return Verdict.PROVEN
        return Verdict.UNDECIDED


def build_report(X: CompleteIntersection) -> IncompressibilityReport:
    d, n_x = X.dim, X.n_x
    chi = euler_char_residue(X)
    chi_b = euler_char_via_charnumbers(X)
    if chi != chi_b:
        raise InternalInconsistency(f"chi routes disagree for {X}: {chi} vs {chi_b}")
    cor = corollary_check(X, chi)
    table = char_number_table(X)
    tau_d, tau_dm1 = todd_number(d), todd_number(d - 1)

    verdicts = [
        CriterionVerdict(
            "corollary_ii",
            Verdict.of(cor["incompressible_by_ii"]),
            {"n_X": n_x, "chi": chi, "tau_d_minus_1": tau_dm1, "product": chi * tau_dm1},
        )
    ]

    per_prime: dict[int, PrimeData] = {}
    for p in primes_up_to(d + 1):
        eta = rost_number(X, p) if d % (p - 1) == 0 else None
        up = u_p(X, p)
        lam = lambda_p_partitions(d, p)
        rost_fire = any(rost_incompressible(table[a], p, n_x) for a in lam)
        per_prime[p] = PrimeData(eta, up, rost_fire, up % n_x != 0)
        evidence = {"p": p, "n_X": n_x, "u_p": up}
        for a in lam:
            evidence[f"c_{a}/p"] = table[a] // p
        verdicts.append(CriterionVerdict(f"rostdeg_p{p}", Verdict.of(rost_fire), evidence))

    myex = None
    if is_prime(d + 1):
        p = d + 1
        myex = myex_criterion(X, p)
        m_p = sum(1 for deg in X.degrees if deg % p == 0)
        verdicts.append(
            CriterionVerdict(
                f"myex_p{p}",
                Verdict.of(myex),
                {"p": p, "m_p": m_p, "cofactor": X.degree_product // n_x},
            )
        )
    else:
        verdicts.append(CriterionVerdict("myex", Verdict.NOT_APPLICABLE, {}))

    cond3 = None
    if d == 3 and X.has_default_point_index:
        c3 = cond3_check(X)
        cond3 = c3["predicate"]

    return IncompressibilityReport(
        variety=X,
        chi=chi,
        chi_via_charnumbers=chi_b,
        tau_d=tau_d,
        tau_d_minus_1=tau_dm1,
        charnumbers=table,
        per_prime=per_prime,
        sanity_i=cor["sanity_i"],
        corollary_ii_verdict=cor["incompressible_by_ii"],
        myex_verdict=myex,
        cond3=cond3,
        verdicts=tuple(verdicts),
    )
