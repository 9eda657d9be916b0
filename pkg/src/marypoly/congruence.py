"""Polynomial congruences for p_M(n, t) modulo gcds of geometric-sum generators.

A congruence ``a == b (mod g)`` always means that the monic integer
polynomial g divides a - b exactly in Z[t].  A zero modulus means equality.

Two digit conventions appear and are kept apart:

* the M-ary digits ``[a_0, a_1, ..., a_k]`` of n (``mseq.to_digits``), used
  by the main theorem, the lemma and the scalar corollaries;
* the base-m digits of n relabelled ``a_1, a_2, ...`` from the least
  significant end, used by the q-analogue (``quantum_check``), where n
  plays the role of the quotient mn / m.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .intpoly import IntPoly, divides, gcd_many, rem_mod, shift
from .mseq import MSeq, base_digits, gcd_prefix, shift_seq, to_digits
from .partitions import _as_mseq, b_count, p_poly
from .roots import p_q_recurrence, q_integer


def f_poly(a: int, d: int = 1) -> IntPoly:
    """f(a, t^d) = 1 + t^d + ... + t^{d(a-1)}."""
    if a < 0 or d < 1:
        raise ValueError("need a >= 0 and d >= 1")
    return IntPoly([1] * a).dilate(d) if a else IntPoly.zero()


def generator(M: MSeq, i: int) -> IntPoly:
    """t^{m_i + m_{i+1} - 1} f(m_{i+1}, t^{m_i - 1})."""
    mi, mj = M.m_at(i), M.m_at(i + 1)
    return shift(f_poly(mj, mi - 1), mi + mj - 1)


def g_poly(M, h: int) -> IntPoly:
    """g_h(t): monic gcd of the generators for i = 1..h (left fold)."""
    if h < 1:
        raise ValueError("h must be positive")
    M = _as_mseq(M)
    return gcd_many([generator(M, i) for i in range(1, h + 1)])


def rhs_product(M, digits) -> IntPoly:
    """t^{a_0} prod_{j=1}^{k} t^{a_j} f(a_j + 1, t^{m_j - 1})."""
    M = _as_mseq(M)
    out = IntPoly.monomial(digits[0])
    for j in range(1, len(digits)):
        a = digits[j]
        out = shift(out * f_poly(a + 1, M.m_at(j) - 1), a)
    return out


@dataclass(frozen=True)
class CongruenceCase:
    mseq: MSeq
    n: int
    digits: tuple[int, ...]
    modulus: IntPoly
    lhs: IntPoly
    rhs: IntPoly
    holds: bool


def check_theorem(M, n: int) -> CongruenceCase:
    """p_M(n, t) == rhs_product(digits) (mod g_k), k the top digit index."""
    M = _as_mseq(M)
    digits = to_digits(M, n)
    k = len(digits) - 1
    modulus = g_poly(M, k) if k >= 1 else IntPoly.zero()
    lhs = p_poly(M, n)
    rhs = rhs_product(M, digits)
    return CongruenceCase(M, n, tuple(digits), modulus, lhs, rhs, divides(modulus, lhs - rhs))


def lemma_modulus(M: MSeq) -> IntPoly:
    return generator(M, 1)


def check_lemma(M, n: int) -> bool:
    """p_M(m_1 n) == t^r f(r+1, t^{m_1-1}) p_{M'}(k m_2) mod t^{m_1+m_2-1} f(m_2, t^{m_1-1}),
    where n = k m_2 + r."""
    M = _as_mseq(M)
    m1, m2 = M.m_at(1), M.m_at(2)
    k, r = divmod(n, m2)
    lhs = p_poly(M, m1 * n)
    rhs = shift(f_poly(r + 1, m1 - 1), r) * p_poly(shift_seq(M), k * m2)
    return divides(lemma_modulus(M), lhs - rhs)


def digit_product(M, n: int) -> int:
    """prod_{j >= 1} (a_j + 1) over the M-ary digits of n."""
    return prod(a + 1 for a in to_digits(_as_mseq(M), n)[1:])


def mod_m_characterization(m: int, n: int) -> int:
    """prod_{j >= 1} (a_j + 1) mod m over the base-m digits of n."""
    if m < 2:
        raise ValueError("m must be at least 2")
    return digit_product(MSeq.constant(m), n) % m


@dataclass(frozen=True)
class ScalarCase:
    n: int
    modulus: int
    count: int
    product: int
    g_at_one: int | None
    holds: bool


def check_scalar(M, n: int) -> ScalarCase:
    """b_M(n) == prod (a_j + 1) modulo gcd(m_1, ..., m_k).

    ``g_at_one`` records g_k(1) for comparison with that modulus; with k = 0
    the modulus is 0 and the two sides must agree exactly.
    """
    M = _as_mseq(M)
    k = len(to_digits(M, n)) - 1
    mod = gcd_prefix(M, k)
    count = b_count(M, n)
    dp = digit_product(M, n)
    g1 = g_poly(M, k)(1) if k >= 1 else None
    holds = (count - dp) % mod == 0 if mod else count == dp
    return ScalarCase(n, mod, count, dp, g1, holds)


def quantum_digits(m: int, n: int) -> list[int]:
    """[a_1, ..., a_k] with n = a_1 + a_2 m + ... + a_k m^{k-1}."""
    return base_digits(m, n)


def quantum_product(m: int, n: int) -> IntPoly:
    out = IntPoly.one()
    for a in quantum_digits(m, n):
        out = out * q_integer(a + 1)
    return out


def quantum_check(m: int, n: int) -> bool:
    """P_m(n, q) == prod [a_j + 1]_q (mod [m]_q)."""
    if m < 2:
        raise ValueError("m must be at least 2")
    modulus = q_integer(m)
    diff = p_q_recurrence(m, n) - quantum_product(m, n)
    return rem_mod(diff, modulus).is_zero()


def scalar_modulus_candidates(M, k: int) -> tuple[int, int]:
    """(gcd(m_1..m_k), g_k(1)) for recording which modulus the data supports."""
    M = _as_mseq(M)
    return gcd_prefix(M, k), g_poly(M, k)(1)

