"""M-ary partition polynomials p_M(n, t) and their coefficients a_M(j, n).

Two independent routes are provided:

* ``p_poly`` runs the two-case recurrence
  ``p_M(m_1 n + j) = t p_M(m_1 n + j - 1)`` (0 < j < m_1) and
  ``p_M(m_1 n) = t p_M(m_1 n - 1) + p_{M'}(n)``, recursing into the shifted
  sequence M' and memoizing by shift depth;
* ``oracle_series`` expands the truncated product of geometric series
  ``prod_j sum_i t^i q^(i M_j)`` directly.

The recurrence only needs values at multiples of ``m_{d+1}`` at each depth
d, because ``p(m k + j) = t^j p(m k)``; those are what the cache stores.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Generic, TypeVar

import numpy as np

from .errors import InsufficientFactors
from .intpoly import IntPoly, shift
from .mseq import MSeq, shift_seq

V = TypeVar("V")


class PolyCache(Generic[V]):
    """Store of recurrence values keyed by (canonical shift depth, n).

    Only indices n that are multiples of m_{depth+1} are stored; each depth
    is a dense list so the key space is contiguous.  Concurrent reads of a
    cache that is no longer being extended are safe; extension is
    single-writer.
    """

    def __init__(self):
        self._rows: dict[int, list[V]] = {}

    def row(self, depth: int) -> list[V]:
        return self._rows.setdefault(depth, [])

    def get(self, depth: int, n: int, step: int):
        row = self._rows.get(depth, ())
        k = n // step
        return row[k] if k < len(row) else None

    def __len__(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def clear(self) -> None:
        self._rows.clear()


class RecurrenceEngine(Generic[V]):
    """Evaluates the M-ary recurrence over any value domain.

    ``mul_t_pow(v, j)`` must realize multiplication by ``t**j`` and ``one``
    is the value of p_M(0, t).
    """

    def __init__(self, M: MSeq, one: V, mul_t_pow: Callable[[V, int], V],
                 add: Callable[[V, V], V]):
        self.M = M
        self.cache: PolyCache[V] = PolyCache()
        self._one = one
        self._mul_t_pow = mul_t_pow
        self._add = add

    def _base(self, depth: int) -> int:
        return self.M.m_at(depth + 1)

    def _extend(self, depth: int, k: int) -> list[V]:
        # row[i] = p_{M^(depth)}(m * i) with m = m_{depth+1}
        row = self.cache.row(depth)
        m = self._base(depth)
        nxt = self.M.canonical_depth(depth + 1)
        while len(row) <= k:
            i = len(row)
            if i == 0:
                row.append(self._one)
            else:
                row.append(self._add(self._mul_t_pow(row[i - 1], m), self.value(nxt, i)))
        return row

    def value(self, depth: int, n: int) -> V:
        depth = self.M.canonical_depth(depth)
        m = self._base(depth)
        k, j = divmod(n, m)
        row = self.cache.row(depth)
        base = row[k] if k < len(row) else self._extend(depth, k)[k]
        return self._mul_t_pow(base, j) if j else base

    def __call__(self, n: int) -> V:
        if n < 0:
            raise ValueError("n must be nonnegative")
        return self.value(0, n)

    def values(self, upto: int) -> list[V]:
        """p_M(n) for n = 0..upto."""
        return [self(n) for n in range(upto + 1)]


def poly_engine(M: MSeq) -> RecurrenceEngine[IntPoly]:
    return RecurrenceEngine(M, IntPoly.one(), shift, IntPoly.__add__)


def point_engine(M: MSeq, x: int) -> RecurrenceEngine[int]:
    """Engine computing the integers p_M(n, x) without building polynomials."""
    return RecurrenceEngine(M, 1, lambda v, j: v * x**j, int.__add__)


@functools.lru_cache(maxsize=64)
def _shared_poly_engine(M: MSeq) -> RecurrenceEngine[IntPoly]:
    return poly_engine(M)


@functools.lru_cache(maxsize=64)
def _shared_point_engine(M: MSeq, x: int) -> RecurrenceEngine[int]:
    return point_engine(M, x)


def _as_mseq(M) -> MSeq:
    if isinstance(M, MSeq):
        return M
    if isinstance(M, int):
        return MSeq.constant(M)
    return MSeq.parse(str(M))


def p_poly(M, n: int) -> IntPoly:
    """The M-ary partition polynomial p_M(n, t)."""
    return _shared_poly_engine(_as_mseq(M))(n)


def p_poly_uncached(M, n: int) -> IntPoly:
    """Plain recursion with no memo; exponential, only for checking the cache."""
    M = _as_mseq(M)
    if n == 0:
        return IntPoly.one()
    m1 = M.m_at(1)
    k, j = divmod(n, m1)
    if j:
        return shift(p_poly_uncached(M, k * m1), j)
    return shift(p_poly_uncached(M, n - 1), 1) + p_poly_uncached(shift_seq(M), k)


def p_value(M, n: int, x: int) -> int:
    """p_M(n, x) for an integer x, via the recurrence on integers."""
    return _shared_point_engine(_as_mseq(M), x)(n)


def p_values(M, upto: int, x: int) -> list[int]:
    eng = _shared_point_engine(_as_mseq(M), x)
    return eng.values(upto)


# ---------------------------------------------------------------------------
# generating-product oracle


@dataclass(frozen=True)
class SeriesTable:
    max_n: int
    rows: tuple[IntPoly, ...]

    def coeff(self, j: int, n: int) -> int:
        return self.rows[n][j]

    def to_csv_rows(self):
        for n, p in enumerate(self.rows):
            for j in range(n + 1):
                yield n, j, p[j]


def min_factors(M: MSeq, max_n: int) -> int:
    """Smallest f with M_f > max_n."""
    f = 0
    while M.big_m(f) <= max_n:
        f += 1
    return f


def oracle_series(M, max_n: int, factors: int | None = None) -> SeriesTable:
    """Expand prod_{j < factors} 1/(1 - t q^{M_j}) up to q^max_n and t^max_n."""
    M = _as_mseq(M)
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    if factors is None:
        factors = min_factors(M, max_n)
    if M.big_m(factors) <= max_n:
        raise InsufficientFactors(
            f"M_{factors} = {M.big_m(factors)} <= {max_n}; omitted factors would contribute")
    N = max_n + 1
    # table[n, j] = coefficient of q^n t^j
    table = np.zeros((N, N), dtype=object)
    table[0, 0] = 1
    for f in range(factors):
        c = M.big_m(f)
        acc = table.copy()
        i = 1
        while i * c <= max_n and i <= max_n:
            # term t^i q^(i c) of the geometric series
            acc[i * c:, i:] += table[: N - i * c, : N - i]
            i += 1
        table = acc
    rows = tuple(IntPoly([int(x) for x in table[n, : n + 1]]) for n in range(N))
    return SeriesTable(max_n, rows)


# ---------------------------------------------------------------------------
# coefficients


def coeff_a(M, j: int, n) -> int:
    """a_M(j, n), the number of M-ary partitions of n with exactly j parts.

    Zero when j < 0, j > n, or n is not a nonnegative integer.
    """
    if isinstance(n, Rational) and not isinstance(n, int):
        if Fraction(n).denominator != 1:
            return 0
        n = int(n)
    elif not isinstance(n, int):
        if float(n) != math.floor(n):
            return 0
        n = int(n)
    if n < 0 or j < 0 or j > n:
        return 0
    return p_poly(M, n)[j]


def b_count(M, n: int) -> int:
    """b_M(n) = p_M(n, 1), the number of M-ary partitions of n."""
    if n < 0:
        return 0
    return p_value(M, n, 1)


def a_columns(m: int, k: int, max_n: int) -> list[list[int]]:
    """Columns ``cols[i][n] = a_m(i, n)`` for i <= k and n <= max_n.

    Uses a_m(i, n) = a_m(i-1, n-1) + a_m(i, n/m) with the term dropped when
    m does not divide n, and a_m(i, 0) = [i == 0].
    """
    cols = [[0] * (max_n + 1) for _ in range(k + 1)]
    cols[0][0] = 1
    for n in range(1, max_n + 1):
        q, r = divmod(n, m)
        for i in range(k + 1):
            v = cols[i - 1][n - 1] if i else 0
            if r == 0:
                v += cols[i][q]
            cols[i][n] = v
    return cols


def a_series(m: int, k: int, max_n: int) -> list[int]:
    """First max_n + 1 coefficients of A_m(k, x) = sum_n a_m(k, n) x^n."""
    if m < 2 or k < 0:
        raise ValueError("need m >= 2 and k >= 0")
    return a_columns(m, k, max_n)[k]


def bound_C(m: int, k: int) -> int:
    """C_k with C_j = 1 for j < m and C_k = C_{k-1} + floor(k/(m-1)) C_{k-m}."""
    if m < 2 or k < 0:
        raise ValueError("need m >= 2 and k >= 0")
    C = [1] * max(m, k + 1)
    for i in range(m, k + 1):
        C[i] = C[i - 1] + (i // (m - 1)) * C[i - m]
    return C[k]


def closed_bound(m: int, k: int, residue: int = 0) -> Fraction:
    """(m/(m-1))^e * prod_{j<e} (k - i - j m) with e = floor((k - i)/m), i = residue."""
    kk = k - residue
    e = kk // m
    out = Fraction(m, m - 1) ** e
    for j in range(max(e, 0)):
        out *= kk - j * m
    return out


def uniform_bound(k: int) -> int:
    """2^floor(k/2) * prod_{j < floor(k/2)} (k - 2j), valid for every m."""
    e = k // 2
    out = 2**e
    for j in range(e):
        out *= k - 2 * j
    return out


def stable_from(M, k: int) -> int:
    """Smallest n with n >= k m_1 / (m_1 - 1)."""
    m1 = _as_mseq(M).m_at(1)
    return -(-k * m1 // (m1 - 1))


def tail_coeff_stable(M, k: int) -> int:
    """Eventual value of a_M(n - k, n): sum over k/m_1 <= j <= k/(m_1 - 1) of a_{M'}(m_1 j - k, j)."""
    if k < 1:
        raise ValueError("k must be positive")
    M = _as_mseq(M)
    m1 = M.m_at(1)
    Mp = shift_seq(M)
    lo = -(-k // m1)
    hi = k // (m1 - 1)
    return sum(coeff_a(Mp, m1 * j - k, j) for j in range(lo, hi + 1))


def s_partitions(M, max_n: int) -> list[int]:
    """s_M(0..max_n): partitions into parts M_i - 1 (i >= 1)."""
    M = _as_mseq(M)
    counts = [0] * (max_n + 1)
    counts[0] = 1
    i = 1
    while M.big_m(i) - 1 <= max_n:
        part = M.big_m(i) - 1
        for n in range(part, max_n + 1):
            counts[n] += counts[n - part]
        i += 1
    return counts
