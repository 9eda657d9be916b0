"""Root structure of m-ary partition polynomials.

Exact facts (order of vanishing at 0, values at -1, the reduced polynomial
in q = t^(m-1)) are computed over the integers; complex roots are located
numerically in double precision with the Aberth-Ehrlich iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Sequence

import numpy as np

from .errors import NoConvergence, OddBase, SupportViolation
from .intpoly import IntPoly, shift
from .mseq import MSeq, base_digits, digit_sum, valuation
from .partitions import _as_mseq, b_count, p_poly, p_value

# ---------------------------------------------------------------------------
# exact statements


def eval_minus_one(M, n: int) -> int:
    """p_M(n, -1), the even-minus-odd part-count difference."""
    return p_value(M, n, -1)


def even_m_sign_formula(m: int, n: int) -> int:
    """(-1)^{a_0} prod_{j>=1} (1 + (-1)^{a_j}) / 2 over the base-m digits of n."""
    if m % 2:
        raise OddBase(f"sign formula needs an even base, got {m}")
    digits = base_digits(m, n)
    if any(a % 2 for a in digits[1:]):
        return 0
    return -1 if digits[0] % 2 else 1


def odd_m_value(m: int, n: int) -> int:
    """(-1)^n b_m(n), the claimed value of p_m(n, -1) for odd m."""
    if m % 2 == 0:
        raise ValueError(f"odd base expected, got {m}")
    return (-1) ** n * b_count(MSeq.constant(m), n)


@dataclass(frozen=True)
class RationalRoots:
    zero_multiplicity: int
    minus_one_is_root: bool


def rational_roots(M, n: int) -> RationalRoots:
    p = p_poly(M, n)
    return RationalRoots(int(p.order), eval_minus_one(M, n) == 0)


def radius_bound(m: int) -> float:
    """4^(1/m): every root of p_m(n, t) lies strictly inside this radius."""
    if m < 2:
        raise ValueError("m must be at least 2")
    return 4.0 ** (1.0 / m)


def tilde_normalize(m: int, n: int) -> IntPoly:
    """p_m(n, t) / t^{s_m(n)} rewritten in q = t^(m-1).

    Raises SupportViolation if an exponent is not a multiple of m - 1.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    p = p_poly(MSeq.constant(m), n)
    s = digit_sum(m, n)
    c = p.coeffs
    if any(c[:s]):
        raise SupportViolation(f"t^{s} does not divide p_{m}({n}, t)")
    c = c[s:]
    step = m - 1
    bad = [e for e, x in enumerate(c) if x and e % step]
    if bad:
        raise SupportViolation(
            f"p_{m}({n}, t)/t^{s} has exponent {bad[0]} not divisible by {step}")
    if any(x < 0 for x in c):
        raise SupportViolation(f"negative coefficient in reduced p_{m}({n}, t)")
    return IntPoly(c[::step])


def q_integer(k: int) -> IntPoly:
    """[k]_q = 1 + q + ... + q^(k-1)."""
    return IntPoly([1] * k)


def p_q_recurrence(m: int, n: int) -> IntPoly:
    """P_m(n, q) from P_m(k) = [k+1]_q (k < m) and, for n >= m,
    P_m(n) = q^{1 + nu_m(n)} P_m(n - 1) + P_m(floor(n / m))."""
    if m < 2 or n < 0:
        raise ValueError("need m >= 2 and n >= 0")
    return _p_q_table(m, n)[n]


_P_TABLES: dict[int, list[IntPoly]] = {}


def _p_q_table(m: int, n: int) -> list[IntPoly]:
    table = _P_TABLES.setdefault(m, [])
    while len(table) <= n:
        i = len(table)
        if i < m:
            table.append(q_integer(i + 1))
        else:
            table.append(shift(table[i - 1], 1 + valuation(m, i)) + table[i // m])
    return table


# ---------------------------------------------------------------------------
# numerical roots


@dataclass
class RootReport:
    n: int | None
    m: int | None
    roots: list[complex]
    residuals: list[float]
    max_modulus: float
    zero_multiplicity: int = 0
    iterations: int = 0
    converged: bool = True
    tol: float = 1e-10
    extra: dict = field(default_factory=dict)

    @property
    def nonzero_roots(self) -> list[complex]:
        return self.roots[self.zero_multiplicity:]

    def unit_circle_counts(self, eps: float = 1e-9) -> dict[str, int]:
        inside = outside = on = 0
        for z in self.nonzero_roots:
            r = abs(z)
            if r > 1 + eps:
                outside += 1
            elif r < 1 - eps:
                inside += 1
            else:
                on += 1
        return {"inside": inside, "on": on, "outside": outside}

    def nonzero_modulus_range(self) -> tuple[float, float] | None:
        mods = [abs(z) for z in self.nonzero_roots]
        return (min(mods), max(mods)) if mods else None


def _float_coeffs(coeffs: Sequence[int]) -> np.ndarray:
    big = max(abs(c) for c in coeffs)
    # int / int true division stays exact in magnitude for huge integers
    return np.array([c / big for c in coeffs], dtype=np.float64)


def _horner(a: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Value and derivative of sum a[i] z^i at each point of z."""
    p = np.full(z.shape, a[-1], dtype=np.complex128)
    dp = np.zeros(z.shape, dtype=np.complex128)
    for c in a[-2::-1]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _newton_ratio(a: np.ndarray, z: np.ndarray) -> np.ndarray:
    """p(z)/p'(z), evaluated through the reversed polynomial when |z| > 1."""
    out = np.empty_like(z)
    small = np.abs(z) <= 1.0
    if small.any():
        p, dp = _horner(a, z[small])
        out[small] = p / dp
    if (~small).any():
        zz = z[~small]
        w = 1.0 / zz
        d = len(a) - 1
        r, dr = _horner(a[::-1], w)
        out[~small] = zz * r / (d * r - w * dr)
    return out


def relative_residuals(a: Sequence[float], z: np.ndarray) -> np.ndarray:
    """|p(z)| / sum |a_i| |z|^i, computed on whichever side of the unit circle is stable."""
    a = np.asarray(a, dtype=np.float64)
    z = np.asarray(z, dtype=np.complex128)
    out = np.empty(z.shape, dtype=np.float64)
    small = np.abs(z) <= 1.0
    absa = np.abs(a)
    if small.any():
        zs = z[small]
        num, _ = _horner(a, zs)
        den, _ = _horner(absa, np.abs(zs).astype(np.complex128))
        out[small] = np.abs(num) / den.real
    if (~small).any():
        w = 1.0 / z[~small]
        num, _ = _horner(a[::-1], w)
        den, _ = _horner(absa[::-1], np.abs(w).astype(np.complex128))
        out[~small] = np.abs(num) / den.real
    return out


def aberth(a: np.ndarray, tol: float = 1e-10, max_iter: int = 200,
           radius: float | None = None) -> tuple[np.ndarray, int, bool]:
    """All roots of sum a[i] z^i (a[0] != 0, a[-1] != 0) by Aberth-Ehrlich iteration.

    Returns (roots, iterations, converged).  A root is settled once its
    relative residual is below ``tol`` or its correction is below
    ``4 eps |z|``.
    """
    d = len(a) - 1
    if d == 1:
        return np.array([-a[0] / a[1]], dtype=np.complex128), 0, True
    if radius is None:
        radius = 1.05 * abs(a[0] / a[-1]) ** (1.0 / d)
    k = np.arange(d)
    z = radius * np.exp(1j * (2 * np.pi * k / d + 0.4))
    eps = np.finfo(float).eps
    active = np.ones(d, dtype=bool)
    it = 0
    for it in range(1, max_iter + 1):
        idx = np.nonzero(active)[0]
        zi = z[idx]
        ratio = _newton_ratio(a, zi)
        diff = zi[:, None] - z[None, :]
        diff[np.arange(len(idx)), idx] = np.inf
        s = (1.0 / diff).sum(axis=1)
        step = ratio / (1.0 - ratio * s)
        step[~np.isfinite(step)] = 0.0
        z[idx] = zi - step
        small_step = np.abs(step) <= 4 * eps * np.maximum(np.abs(z[idx]), 1.0)
        good = relative_residuals(a, z[idx]) <= tol
        active[idx[small_step | good]] = False
        if not active.any():
            return z, it, True
    return z, it, False


def complex_roots(p: IntPoly, tol: float = 1e-10, max_iter: int = 200, *,
                  n: int | None = None, m: int | None = None) -> RootReport:
    """All complex roots of p with multiplicity.

    The factor t^ord is split off exactly.  If the remaining exponents share
    a common step g > 1 (as for reduced partition polynomials), the roots
    are found for u = t^g and their g-th roots are taken, which keeps the
    iteration size down; residuals are always measured on the full
    polynomial.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root set")
    s = int(p.order)
    c = list(p.coeffs[s:])
    zeros = [0j] * s
    if len(c) == 1:
        return RootReport(n, m, zeros, [0.0] * s, 0.0, s, 0, True, tol)
    step = reduce(math.gcd, (e for e, x in enumerate(c) if x), 0)
    reduced = c[::step]
    a = _float_coeffs(reduced)
    u, iters, ok = aberth(a, tol=tol, max_iter=max_iter)
    if step > 1:
        w = np.exp(2j * np.pi * np.arange(step) / step)
        base = u.astype(np.complex128) ** (1.0 / step)
        z = (base[:, None] * w[None, :]).ravel()
    else:
        z = u
    full = _float_coeffs(c)
    res = relative_residuals(full, z)
    order = np.lexsort((np.angle(z), np.abs(z)))
    z, res = z[order], res[order]
    roots = zeros + [complex(x) for x in z]
    residuals = [0.0] * s + [float(r) for r in res]
    max_mod = float(np.abs(z).max()) if len(z) else 0.0
    report = RootReport(n, m, roots, residuals, max_mod, s, iters, ok, tol)
    if not ok or max(residuals) > tol:
        report.converged = False
        raise NoConvergence(
            f"Aberth iteration did not reach residual {tol} in {max_iter} steps", report)
    return report


def root_report(m: int, n: int, tol: float = 1e-10, max_iter: int = 200) -> RootReport:
    return complex_roots(p_poly(MSeq.constant(m), n), tol, max_iter, n=n, m=m)
