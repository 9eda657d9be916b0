"""Named verification checks run by ``marypoly verify-all``.

Each check returns a ``CheckResult``; ``passed`` is False as soon as a
counterexample is found and ``detail`` then carries it in full.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import congruence as cg
from . import mahler as mh
from . import partitions as pt
from . import roots as rt
from .errors import NoConvergence, SupportViolation
from .mseq import MSeq, digit_sum

ROOT_SLACK = 1e-6
ROOT_RESIDUAL = 1e-8
KERNEL_BUDGET = 3_000_000


@dataclass
class CheckResult:
    check: str
    params: str
    passed: bool
    detail: dict = field(default_factory=dict)


def check_oracle(M: MSeq, n_max: int) -> CheckResult:
    table = pt.oracle_series(M, n_max)
    bad = next((n for n in range(n_max + 1) if pt.p_poly(M, n) != table.rows[n]), None)
    detail = {} if bad is None else {
        "n": bad, "recurrence": list(pt.p_poly(M, bad)), "oracle": list(table.rows[bad])}
    return CheckResult("oracle_equivalence", f"M={M};n<={n_max}", bad is None, detail)


def check_degree(M: MSeq, n_max: int) -> CheckResult:
    bad = next((n for n in range(n_max + 1) if pt.p_poly(M, n).degree != n), None)
    return CheckResult("degree", f"M={M};n<={n_max}", bad is None,
                       {} if bad is None else {"n": bad})


def check_order(m: int, n_max: int) -> CheckResult:
    M = MSeq.constant(m)
    bad = next((n for n in range(n_max + 1)
                if pt.p_poly(M, n).order != digit_sum(m, n)), None)
    return CheckResult("order_at_zero", f"m={m};n<={n_max}", bad is None,
                       {} if bad is None else {"n": bad, "order": pt.p_poly(M, bad).order})


def check_sign(m: int, n_max: int) -> CheckResult:
    M = MSeq.constant(m)
    values = pt.p_values(M, n_max, -1)
    bad = None
    if m % 2 == 0:
        lsd, msd = mh.dfao_lsd(m), mh.dfao_msd(m)
        for n, v in enumerate(values):
            f = rt.even_m_sign_formula(m, n)
            if not (v == f == lsd(n) == msd(n)) or abs(v) > 1:
                bad = {"n": n, "value": v, "formula": f, "lsd": lsd(n), "msd": msd(n)}
                break
    else:
        for n, v in enumerate(values):
            if v != rt.odd_m_value(m, n) or v == 0:
                bad = {"n": n, "value": v, "expected": rt.odd_m_value(m, n)}
                break
    return CheckResult("minus_one_dichotomy", f"m={m};n<={n_max}", bad is None, bad or {})


def check_root_bound(m: int, ns: list[int]) -> CheckResult:
    bound = rt.radius_bound(m)
    worst = 0.0
    strict = True
    counts = {"inside": 0, "on": 0, "outside": 0}
    bad = None
    for n in ns:
        try:
            rep = rt.root_report(m, n)
        except NoConvergence as exc:
            bad = {"n": n, "reason": str(exc)}
            break
        worst = max(worst, rep.max_modulus)
        strict &= rep.max_modulus < bound
        for key, v in rep.unit_circle_counts().items():
            counts[key] += v
        if rep.max_modulus >= bound + ROOT_SLACK or max(rep.residuals) >= ROOT_RESIDUAL:
            bad = {"n": n, "max_modulus": rep.max_modulus, "max_residual": max(rep.residuals)}
            break
    detail = {"max_modulus": worst, "bound": bound, "strict": strict, **counts}
    if bad:
        detail["counterexample"] = bad
    params = f"m={m};n={min(ns)}..{max(ns)};count={len(ns)}" if ns else f"m={m};none"
    return CheckResult("root_bound", params, bad is None, detail)


def check_tilde(m: int, n_max: int) -> CheckResult:
    bad = None
    try:
        for n in range(n_max + 1):
            rt.tilde_normalize(m, n)
        for n in range(n_max // m + 1):
            if rt.p_q_recurrence(m, n) != rt.tilde_normalize(m, m * n):
                bad = {"n": n, "recurrence": list(rt.p_q_recurrence(m, n))}
                break
    except SupportViolation as exc:
        bad = {"reason": str(exc)}
    return CheckResult("tilde_support", f"m={m};n<={n_max}", bad is None, bad or {})


def check_theorem(M: MSeq, ns) -> CheckResult:
    bad = None
    for n in ns:
        case = cg.check_theorem(M, n)
        if not case.holds:
            bad = {"n": n, "digits": list(case.digits), "modulus": list(case.modulus),
                   "lhs": list(case.lhs), "rhs": list(case.rhs)}
            break
    return CheckResult("congruence_theorem", f"M={M};n<={max(ns)}", bad is None, bad or {})


def check_lemma(M: MSeq, n_max: int) -> CheckResult:
    bad = next((n for n in range(n_max + 1) if not cg.check_lemma(M, n)), None)
    return CheckResult("congruence_lemma", f"M={M};n<={n_max}", bad is None,
                       {} if bad is None else {"n": bad})


def check_scalar(M: MSeq, n_max: int) -> CheckResult:
    bad = None
    observed = set()
    for n in range(n_max + 1):
        case = cg.check_scalar(M, n)
        observed.add((case.modulus, case.g_at_one))
        if not case.holds:
            bad = {"n": n, "count": case.count, "product": case.product, "modulus": case.modulus}
            break
    detail = bad or {}
    detail["moduli_vs_g1"] = sorted(str(x) for x in observed)
    return CheckResult("scalar_corollary", f"M={M};n<={n_max}", bad is None, detail)


def check_quantum(m: int, n_max: int) -> CheckResult:
    bad = next((n for n in range(n_max + 1) if not cg.quantum_check(m, n)), None)
    return CheckResult("quantum_corollary", f"m={m};n<={n_max}", bad is None,
                       {} if bad is None else {"n": bad})


def check_mahler(m: int, k_max: int = 5, trunc: int = 400) -> CheckResult:
    bad = None
    for k in range(k_max + 1):
        system = mh.mahler_system(m, k)
        if not mh.verify_mahler(m, k, trunc, system):
            bad = {"k": k}
            break
        if system.inhom != system.q_closed_form():
            bad = {"k": k, "reason": "Q_k differs from closed form"}
            break
    control = mh.mahler_system(m, 1)
    control = mh.MahlerSystem(m, 1, control.coeff_polys, control.inhom + 1)
    if bad is None and mh.verify_mahler(m, 1, trunc, control):
        bad = {"reason": "perturbed Q still verifies"}
    return CheckResult("mahler_identity", f"m={m};k<={k_max};trunc={trunc}", bad is None, bad or {})


def check_kernel(m: int, depth: int = 6, seq_len: int = 512) -> CheckResult:
    if m % 2:
        return CheckResult("kernel_count", f"m={m};skipped(odd m)", True, {"skipped": True})
    while depth > 2 and m**depth * seq_len > KERNEL_BUDGET:
        depth -= 1
    res = mh.kernel(m, seq_len, depth)
    return CheckResult("kernel_count", f"m={m};depth={depth};len={seq_len}", len(res) == 4,
                       {"classes": len(res)})


def check_tail(M: MSeq, k_max: int = 10, window: int = 30) -> CheckResult:
    s = pt.s_partitions(M, k_max)
    bad = None
    for k in range(1, k_max + 1):
        start = pt.stable_from(M, k)
        vals = {pt.coeff_a(M, n - k, n) for n in range(start, start + window)}
        stable = pt.tail_coeff_stable(M, k)
        if vals != {stable} or stable != s[k]:
            bad = {"k": k, "observed": sorted(vals), "formula": stable, "s_partitions": s[k]}
            break
    return CheckResult("tail_stability", f"M={M};k<={k_max}", bad is None, bad or {})


def check_coeff_bounds(m: int, n_max: int, k_max: int = 12) -> CheckResult:
    cols = pt.a_columns(m, k_max, n_max)
    bad = None
    for k in range(k_max + 1):
        uni = pt.uniform_bound(k)
        for n in range(n_max + 1):
            i = n % m
            a = cols[k][n]
            rec = pt.bound_C(m, k - i) if k >= i else 0
            if a > rec or a > pt.closed_bound(m, k, i) or a > uni:
                bad = {"k": k, "n": n, "a": a, "C": rec}
                break
        if bad:
            break
    return CheckResult("coefficient_bounds", f"m={m};k<={k_max};n<={n_max}", bad is None, bad or {})


def check_zero_structure(m: int, n_max: int, k_max: int = 12) -> CheckResult:
    cols = pt.a_columns(m, k_max, n_max)
    bad = None
    for n in range(1, n_max + 1):
        if n % m == 0:
            continue
        r = 1
        while m**r * n - 1 <= n_max:
            idx = m**r * n - 1
            for j in range(min(k_max + 1, (m - 1) * r)):
                if cols[j][idx]:
                    bad = {"j": j, "r": r, "n": n}
                    break
            r += 1
        if bad:
            break
    return CheckResult("zero_structure", f"m={m};n<={n_max}", bad is None, bad or {})


def check_telescoping(m: int, n_max: int, k_max: int = 12) -> CheckResult:
    cols = pt.a_columns(m, k_max, n_max)
    bad = None
    for k in range(1, k_max + 1):
        for n in range(1, n_max + 1):
            if n % m == 0:
                continue
            r = 0
            while m**r * n <= n_max:
                rhs = sum(cols[k - 1][m ** (r - j) * n - 1] for j in range(r)) + cols[k][n]
                if cols[k][m**r * n] != rhs:
                    bad = {"k": k, "n": n, "r": r}
                    break
                r += 1
            if bad:
                break
        if bad:
            break
    return CheckResult("telescoping", f"m={m};k<={k_max};n<={n_max}", bad is None, bad or {})


def sample_range(lo: int, hi: int, limit: int, rng: random.Random) -> list[int]:
    """All of lo..hi if it fits in ``limit``, else a seeded sample."""
    if hi - lo + 1 <= limit:
        return list(range(lo, hi + 1))
    return sorted(rng.sample(range(lo, hi + 1), limit))


def verify_all(m: int, n_max: int, M: MSeq | None = None, seed: int = 20240101,
               root_limit: int = 400) -> list[CheckResult]:
    rng = random.Random(seed)
    M = M or MSeq.constant(m)
    results = [
        check_oracle(M, n_max),
        check_degree(M, n_max),
        check_order(m, n_max),
        check_sign(m, n_max),
        check_root_bound(m, sample_range(1, n_max, root_limit, rng)),
        check_tilde(m, n_max),
        check_theorem(M, range(n_max + 1)),
        check_lemma(M, n_max),
        check_scalar(M, n_max),
        check_quantum(m, n_max),
        check_mahler(m),
        check_kernel(m),
        check_tail(M),
        check_coeff_bounds(m, n_max),
        check_zero_structure(m, n_max),
        check_telescoping(m, n_max),
    ]
    return results
