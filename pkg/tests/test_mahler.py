import pytest

from marypoly.errors import OddBase
from marypoly.intpoly import IntPoly
from marypoly.mahler import (
    Dfao, MahlerSystem, dfao_lsd, dfao_msd, kernel, mahler_residual, mahler_system,
    meaningful_trunc, sign_sequence, verify_mahler,
)
from marypoly.mseq import base_digits
from marypoly.roots import even_m_sign_formula


def test_system_k0_k1():
    s0 = mahler_system(3, 0)
    assert s0.coeff_polys == (IntPoly.one(),) and s0.inhom == IntPoly([-1])
    for m in (2, 3, 4):
        s1 = mahler_system(m, 1)
        assert s1.coeff_polys == (IntPoly.one(), IntPoly([-1]))
        assert s1.inhom == IntPoly([0, -1])


def test_system_shape():
    for m in (2, 3, 4):
        for k in range(6):
            s = mahler_system(m, k)
            assert len(s.coeff_polys) == k + 1
            assert s.coeff_polys[k] == IntPoly([(-1) ** k])
            assert s.inhom == s.q_closed_form()


def test_level_two_middle_coefficient():
    for m in (2, 3, 4):
        assert mahler_system(m, 2).coeff_polys[1] == -(IntPoly.monomial(m - 1) + 1)


def test_verify_examples():
    assert verify_mahler(2, 1, 200)
    assert verify_mahler(3, 4, 400)
    for m in (2, 3):
        for k in range(6):
            s = mahler_system(m, k)
            assert verify_mahler(m, k, meaningful_trunc(s), s)


def test_perturbed_q_fails():
    s = mahler_system(2, 3)
    bad = MahlerSystem(2, 3, s.coeff_polys, s.inhom + IntPoly.monomial(5))
    assert not verify_mahler(2, 3, 100, bad)
    assert mahler_residual(2, 3, 100, bad)[5] == 1


def test_printed_exponent_variant_fails():
    for m in (2, 3, 4):
        assert mahler_system(m, 1, printed_exponent=True) == mahler_system(m, 1)
        for k in (2, 3):
            s = mahler_system(m, k, printed_exponent=True)
            assert not verify_mahler(m, k, 400, s)


def test_automata_examples():
    for m in (2, 4, 6):
        lsd, msd = dfao_lsd(m), dfao_msd(m)
        assert lsd(0) == msd(0) == 1
        assert lsd(1) == msd(1) == -1
        for n in range(2000):
            assert lsd(n) == msd(n) == even_m_sign_formula(m, n)
            if all(a % 2 == 0 for a in base_digits(m, n)):
                assert msd(n) == 1
    assert dfao_lsd(2)(4) == 0
    with pytest.raises(OddBase):
        dfao_lsd(3)
    with pytest.raises(OddBase):
        dfao_msd(5)


def test_dfao_rejects_partial_transition():
    with pytest.raises(ValueError):
        Dfao(2, ("a",), "a", {("a", 0): "a"}, {"a": 1}, msd_first=False)


def test_kernel_small():
    res = kernel(2, 64, 4)
    assert len(res) == 4
    assert res.classes[0] == [(0, 0)]
    assert {r[:3] for r in res.representatives} == {(1, -1, 0), (1, 0, 0), (-1, 0, 0), (0, 0, 0)}
    assert len(kernel(2, 16, 3, seq=[0] * (8 * 16))) == 1
    with pytest.raises(ValueError):
        kernel(2, 16, 3, seq=[0] * 10)


def test_sign_sequence():
    assert sign_sequence(2, 4) == [1, -1, 0, 0, 0]
