from fractions import Fraction

import pytest

from conftest import TEST_SEQS, brute_partitions
from marypoly.errors import InsufficientFactors
from marypoly.intpoly import IntPoly, eval_int
from marypoly.mseq import MSeq, digit_sum
from marypoly.partitions import (
    a_columns, a_series, b_count, bound_C, closed_bound, coeff_a, oracle_series, p_poly,
    p_poly_uncached, p_value, p_values, s_partitions, stable_from, tail_coeff_stable,
    uniform_bound,
)

T = IntPoly([0, 1])


def geometric(q_exp, k):
    # (t^{q_exp (k)} - 1)/(t^{q_exp} - 1) = 1 + t^q + ... + t^{q(k-1)}
    return IntPoly([1] * k).dilate(q_exp)


@pytest.mark.parametrize("spec", TEST_SEQS + ["2,3", "3;2"])
def test_matches_brute_force_enumeration(spec):
    M = MSeq.parse(spec)
    for n in range(40):
        counts = brute_partitions(M.parts(n), n)
        expected = IntPoly([counts.get(j, 0) for j in range(n + 1)])
        assert p_poly(M, n) == expected, n


def test_small_values():
    for spec in TEST_SEQS:
        assert p_poly(spec, 0) == IntPoly.one()
        assert p_poly(spec, 1) == T
    assert p_poly(2, 2) == T**2 + T


@pytest.mark.parametrize("m", [2, 3, 5])
def test_first_block_closed_form(m):
    for k in range(m):
        for j in range(m):
            n = k * m + j
            assert p_poly(m, n) == IntPoly.monomial(k + j) * geometric(m - 1, k + 1)


@pytest.mark.parametrize("spec", TEST_SEQS)
def test_cache_matches_plain_recursion(spec):
    for n in range(60):
        assert p_poly(spec, n) == p_poly_uncached(spec, n)


def test_cache_order_independent():
    M = MSeq.parse("5,2;3")
    late = p_poly(M, 77)
    assert [p_poly(M, n) for n in range(78)][-1] == late


def test_point_values_match_polynomial():
    for spec in TEST_SEQS:
        for x in (-1, 1, 2, -3):
            vals = p_values(spec, 80, x)
            assert vals == [eval_int(p_poly(spec, n), x) for n in range(81)]
            assert p_value(spec, 80, x) == vals[80]


def test_oracle_examples():
    tab = oracle_series(2, 2)
    assert list(tab.rows) == [IntPoly.one(), T, T**2 + T]
    for spec in TEST_SEQS:
        assert oracle_series(spec, 10).rows[0] == IntPoly.one()
    for m in (2, 3, 5):
        assert oracle_series(m, m).rows[m - 1] == IntPoly.monomial(m - 1)
    assert tab.coeff(1, 2) == 1
    assert list(tab.to_csv_rows())[:3] == [(0, 0, 1), (1, 0, 0), (1, 1, 1)]


def test_oracle_factor_guard():
    with pytest.raises(InsufficientFactors):
        oracle_series(2, 10, factors=3)  # M_3 = 8 <= 10
    assert oracle_series(2, 10, factors=6).rows == oracle_series(2, 10).rows


def test_coeff_a():
    for m in (2, 3):
        assert [coeff_a(m, 0, n) for n in range(10)] == [1] + [0] * 9
        powers = {m**i for i in range(8)}
        assert all(coeff_a(m, 1, n) == (n in powers) for n in range(1, 200))
    assert coeff_a(2, 2, 2) == 1
    assert coeff_a(2, 1, Fraction(3, 2)) == 0
    assert coeff_a(2, 1, 2.5) == 0
    assert coeff_a(2, 1, Fraction(4, 2)) == 1
    assert coeff_a(2, 5, 3) == 0 and coeff_a(2, -1, 3) == 0 and coeff_a(2, 0, -2) == 0


def test_b_count():
    assert [b_count(2, n) for n in range(8)] == [1, 1, 2, 2, 4, 4, 6, 6]
    for m in (3, 5, 7):
        assert all(b_count(m, n) == 1 for n in range(m))
    assert b_count(3, 3) == 2
    for spec in TEST_SEQS:
        assert all(b_count(spec, n) == sum(brute_partitions(MSeq.parse(spec).parts(n), n).values())
                   for n in range(30))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_a_series(m):
    N = 300
    assert a_series(m, 0, N) == [1] + [0] * N
    if m == 2:
        assert a_series(2, 1, 20)[1:] == [1 if n & (n - 1) == 0 else 0 for n in range(1, 21)]
    for k in range(1, 6):
        A, B = a_series(m, k, N), a_series(m, k - 1, N)
        for n in range(N + 1):
            lhs = A[n] - (B[n - 1] if n else 0)
            rhs = A[n // m] if n % m == 0 else 0
            assert lhs == rhs
        assert A == [coeff_a(m, k, n) for n in range(N + 1)]


def test_a_columns_against_polynomials():
    cols = a_columns(3, 6, 120)
    for n in range(121):
        p = p_poly(3, n)
        assert [cols[k][n] for k in range(7)] == [p[k] for k in range(7)]


def test_bound_C():
    for m in (2, 3, 5):
        assert all(bound_C(m, k) == 1 for k in range(m))
    assert bound_C(2, 2) == 3
    assert closed_bound(2, 4) == 32 >= bound_C(2, 4)
    for m in (2, 3, 4):
        for k in range(25):
            assert bound_C(m, k) <= closed_bound(m, k)
    assert [uniform_bound(k) for k in range(5)] == [1, 1, 4, 6, 32]


def test_degree_and_order():
    for m in (2, 3, 4, 5):
        for n in range(300):
            p = p_poly(m, n)
            assert p.degree == n
            assert p.order == digit_sum(m, n)


def brute_s(M, n):
    parts = [M.big_m(i) - 1 for i in range(1, 12) if M.big_m(i) - 1 <= max(n, 1)]
    return sum(brute_partitions(parts, n).values()) if n else 1


@pytest.mark.parametrize("spec", TEST_SEQS + ["3;2", "5,2;3"])
def test_s_partitions_brute_force(spec):
    M = MSeq.parse(spec)
    s = s_partitions(M, 20)
    assert s[0] == 1
    assert s == [brute_s(M, n) for n in range(21)]
    if M.m_at(1) == 2:
        assert all(v >= 1 for v in s)


def test_tail_examples():
    M = MSeq.constant(5)
    assert all(tail_coeff_stable(M, k) == 0 for k in range(1, 4))
    # k = m_1 - 1: only j = 1 contributes, a_{M'}(1, 1) = 1
    assert tail_coeff_stable(M, 4) == coeff_a(M, 0 + 1, 1) == 1
    for spec in TEST_SEQS:
        for k in range(1, 11):
            n = stable_from(spec, k) + 5
            assert tail_coeff_stable(spec, k) == oracle_series(spec, n).coeff(n - k, n)


@pytest.mark.parametrize("spec", TEST_SEQS + ["3;2", "5,2;3"])
def test_tail_equals_s_partitions_of_k(spec):
    # the stable value of a_M(n-k, n) counts partitions of k into parts M_j - 1
    M = MSeq.parse(spec)
    s = s_partitions(M, 10)
    for k in range(1, 11):
        start = stable_from(M, k)
        assert {coeff_a(M, n - k, n) for n in range(start, start + 20)} == {s[k]}


def test_shifted_s_partitions_do_not_match():
    # the index-shifted reading with M' disagrees already for k = 1
    M = MSeq.parse("3;2")
    assert tail_coeff_stable(M, 1) == 0
    assert s_partitions(MSeq.constant(2), 1)[1] == 1
