import numpy as np
import pytest

from marypoly.errors import NoConvergence, OddBase
from marypoly.intpoly import IntPoly, eval_int
from marypoly.mseq import MSeq, base_digits
from marypoly.partitions import b_count, p_poly
from marypoly.roots import (
    complex_roots, eval_minus_one, even_m_sign_formula, odd_m_value, p_q_recurrence,
    q_integer, radius_bound, rational_roots, relative_residuals, root_report, tilde_normalize,
)

T = IntPoly([0, 1])


def test_eval_minus_one():
    assert [eval_minus_one(2, n) for n in range(3)] == [1, -1, 0]
    for spec in ("2", "3", "2,3;4"):
        for n in range(200):
            assert eval_minus_one(spec, n) == eval_int(p_poly(spec, n), -1)


def test_even_sign_formula():
    assert even_m_sign_formula(4, 4) == 0
    assert even_m_sign_formula(4, 2 + 0 * 4 + 2 * 16) == 1
    assert even_m_sign_formula(4, 3 + 2 * 4) == -1
    for m in (2, 4, 6):
        for n in range(3000):
            d = base_digits(m, n)
            if any(a % 2 for a in d[1:]):
                assert eval_minus_one(m, n) == 0
            else:
                assert eval_minus_one(m, n) == (-1) ** d[0]
    with pytest.raises(OddBase):
        even_m_sign_formula(3, 1)


def test_odd_m_value():
    for m in (3, 5, 7):
        for n in range(300):
            v = eval_minus_one(m, n)
            assert v == (-1) ** n * b_count(m, n) == odd_m_value(m, n) != 0


def test_rational_roots():
    assert rational_roots(2, 3).zero_multiplicity == 2
    p = p_poly(2, 3)
    assert p[1] == 0 and p[2] != 0
    r0 = rational_roots(2, 0)
    assert r0.zero_multiplicity == 0 and not r0.minus_one_is_root
    r2 = rational_roots(2, 2)
    assert r2.zero_multiplicity == 1 and r2.minus_one_is_root


def test_radius_bound():
    assert radius_bound(2) == 2.0
    assert radius_bound(4) == pytest.approx(2**0.5, abs=1e-15)
    vals = [radius_bound(m) for m in range(2, 20)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_complex_roots_examples():
    rep = complex_roots(T**2 - 1)
    assert sorted(z.real for z in rep.roots) == pytest.approx([-1, 1], abs=1e-12)
    z = complex_roots(IntPoly.monomial(5))
    assert z.roots == [0j] * 5 and z.zero_multiplicity == 5 and z.max_modulus == 0
    with pytest.raises(ValueError):
        complex_roots(IntPoly.zero())


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_matches_numpy_roots_small_degree(m):
    for n in range(1, 40):
        rep = root_report(m, n)
        p = p_poly(m, n)
        ref = np.roots(list(reversed(p.coeffs)))
        assert len(rep.roots) == n == len(ref)
        ours = np.array(rep.roots)
        # match each reference root to a distinct computed root
        left = list(ours)
        for r in ref:
            i = int(np.argmin([abs(r - x) for x in left]))
            assert abs(r - left[i]) < 1e-5 * max(1, abs(r))
            left.pop(i)


def test_root_reports_are_backward_stable():
    rep = root_report(4, 120)
    a = np.array([float(c) for c in p_poly(4, 120).coeffs[rep.zero_multiplicity:]])
    res = relative_residuals(a / abs(a).max(), np.array(rep.nonzero_roots))
    assert res.max() < 1e-8
    assert rep.max_modulus < radius_bound(4)
    counts = rep.unit_circle_counts()
    assert sum(counts.values()) == len(rep.nonzero_roots)
    lo, hi = rep.nonzero_modulus_range()
    assert 0 < lo <= hi == pytest.approx(rep.max_modulus)


def test_no_convergence_carries_report():
    with pytest.raises(NoConvergence) as info:
        complex_roots(p_poly(2, 200), max_iter=1)
    assert info.value.report is not None and not info.value.report.converged


def test_tilde_normalize():
    for m in (2, 3, 4, 5):
        for k in range(m):
            assert tilde_normalize(m, k * m) == q_integer(k + 1)
        assert tilde_normalize(m, 0) == IntPoly.one()
    for n in range(60):
        assert tilde_normalize(2, n) == IntPoly(p_poly(2, n).coeffs[p_poly(2, n).order:])


def test_p_q_recurrence():
    for m in (2, 3, 4):
        for n in range(m):
            assert p_q_recurrence(m, n) == q_integer(n + 1)
    q = IntPoly([0, 1])
    assert p_q_recurrence(2, 2) == (q**2 + 1) * (1 + q) == tilde_normalize(2, 4)
    for m in (2, 3, 5):
        for n in range(200):
            assert p_q_recurrence(m, n) == tilde_normalize(m, m * n)
