import random
import threading
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from incompress.errors import InvalidOperand
from incompress.symfun import (
    ELEMENTARY,
    POWERSUM,
    ExponentPolynomial,
    Partition,
    SymPolyInBasis,
    elementary_values,
    evaluate,
    evaluate_in_powersums,
    in_lambda_p,
    lambda_p_partitions,
    monomial_in_basis,
    monomial_polynomial,
    partitions_of,
    powersums_from_elementary,
)

F = Fraction


def test_partition_normal_form():
    assert Partition((3, 1, 2)) == (1, 2, 3)
    assert Partition((1, 2)).degree == 3
    assert Partition().degree == 0
    assert Partition((1, 1, 3)).conjugate() == Partition((1, 1, 3))
    assert Partition((1, 1, 2)).conjugate() == Partition((1, 3))
    with pytest.raises(InvalidOperand):
        Partition((0, 1))


def test_partitions_of_examples():
    assert partitions_of(3) == [(1, 1, 1), (1, 2), (3,)]
    assert partitions_of(0) == [()]


def _brute_partitions(d):
    # all compositions of d (bitmask of cut points), sorted
    out = set()
    for mask in range(2 ** max(d - 1, 0)):
        parts, cur = [], 1
        for i in range(d - 1):
            if mask >> i & 1:
                parts.append(cur)
                cur = 1
            else:
                cur += 1
        if d:
            parts.append(cur)
        out.add(tuple(sorted(parts)))
    return sorted(out)


@pytest.mark.parametrize("d", range(0, 11))
def test_partitions_match_brute_force(d):
    ps = partitions_of(d)
    assert len(set(ps)) == len(ps)
    assert sorted(ps) == _brute_partitions(d) == ps
    if d == 8:
        assert len(ps) == 22


def test_lambda_p_examples():
    assert lambda_p_partitions(3, 2) == [(1, 1, 1), (3,)]
    assert lambda_p_partitions(2, 3) == [(2,)]
    assert lambda_p_partitions(5, 2) == [(1, 1, 1, 1, 1), (1, 1, 3)]
    with pytest.raises(InvalidOperand):
        lambda_p_partitions(3, 4)


@pytest.mark.parametrize("d", range(0, 13))
@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_lambda_p_is_subset_with_prime_power_parts(d, p):
    lam = lambda_p_partitions(d, p)
    assert set(lam) <= set(partitions_of(d))
    for alpha in lam:
        for a in alpha:
            q = a + 1
            while q % p == 0:
                q //= p
            assert q == 1
    assert set(lam) == {a for a in partitions_of(d) if in_lambda_p(a, p)}


def test_low_degree_expansions():
    assert monomial_in_basis((1, 1, 1), ELEMENTARY).terms == {(3,): 1}
    assert monomial_in_basis((1,), POWERSUM).terms == {(1,): 1}
    assert monomial_in_basis((2,), POWERSUM).terms == {(2,): 1}
    assert monomial_in_basis((1, 1), POWERSUM).terms == {(1, 1): F(1, 2), (2,): F(-1, 2)}
    assert monomial_in_basis((3,), ELEMENTARY).terms == {(1, 1, 1): 1, (1, 2): -3, (3,): 3}
    assert monomial_in_basis((), POWERSUM).terms == {(): 1}


def test_m11_by_brute_force_in_two_variables():
    q = monomial_in_basis((1, 1), POWERSUM)
    for x, y in [(2, 0), (1, 1), (F(1, 2), 3)]:
        direct = monomial_polynomial(Partition((1, 1)), 2).evaluate([x, y])
        assert evaluate_in_powersums(q, {1: x + y, 2: x * x + y * y}) == direct
    assert evaluate_in_powersums(q, {1: 2, 2: 4}) == 0


def test_evaluate_edge_cases():
    q = SymPolyInBasis(POWERSUM, 2, {(1, 1): 1})
    assert evaluate_in_powersums(q, {1: 3}) == 9
    assert evaluate_in_powersums(SymPolyInBasis(POWERSUM, 2, {}), {}) == 0
    with pytest.raises(InvalidOperand):
        evaluate_in_powersums(SymPolyInBasis(POWERSUM, 2, {(2,): 1}), {1: 1})


def test_newton_identities():
    pt = [F(1), F(2), F(-3, 2)]
    p = powersums_from_elementary(elementary_values(pt), 6)
    for k in range(1, 7):
        assert p[k] == sum(x ** k for x in pt)


@pytest.mark.parametrize("d", range(1, 9))
def test_elementary_round_trip(d):
    for alpha in partitions_of(d):
        q = monomial_in_basis(alpha, ELEMENTARY)
        assert all(c.denominator == 1 for c in q.terms.values())
        assert q.to_exponent_polynomial(d).terms == monomial_polynomial(alpha, d).terms


@pytest.mark.parametrize("d", range(1, 7))
def test_powersum_round_trip(d):
    for alpha in partitions_of(d):
        q = monomial_in_basis(alpha, POWERSUM)
        assert q.to_exponent_polynomial(d).terms == monomial_polynomial(alpha, d).terms


@pytest.mark.parametrize("d", range(1, 7))
def test_both_bases_match_direct_evaluation(d):
    rng = random.Random(d)
    for alpha in partitions_of(d):
        qe = monomial_in_basis(alpha, ELEMENTARY)
        qp = monomial_in_basis(alpha, POWERSUM)
        m = monomial_polynomial(alpha, d)
        for _ in range(5):
            pt = [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(d)]
            e = elementary_values(pt)
            direct = m.evaluate(pt)
            assert evaluate(qe, e) == direct
            assert evaluate(qp, powersums_from_elementary(e, d)) == direct


def test_stable_in_more_variables():
    # the expansion computed with d variables holds with more variables too
    alpha = Partition((1, 2))
    q = monomial_in_basis(alpha, ELEMENTARY)
    assert q.to_exponent_polynomial(5).terms == monomial_polynomial(alpha, 5).terms


def test_concurrent_cache_access():
    from incompress import clear_caches

    clear_caches()
    out = {}

    def work(i):
        out[i] = [monomial_in_basis(a, POWERSUM).terms for a in partitions_of(6)]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(out[i] == out[0] for i in range(4))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=4),
       st.lists(st.fractions(-3, 3, max_denominator=4), min_size=4, max_size=4))
def test_exponent_polynomial_product_is_evaluation_product(parts, point):
    a = monomial_polynomial(Partition(parts), 4)
    b = monomial_polynomial(Partition((1,)), 4)
    assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)
