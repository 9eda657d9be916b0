"""Mahler-type functional equations for A_m(k, x), the sign automata and m-kernels.

A_m(k, x) = sum_n a_m(k, n) x^n satisfies

    sum_{j=0}^{k} P_{k,j}(x) A_m(k, x^{m^j}) + Q_k(x) = 0

with P, Q generated level by level from P_{0,0} = 1, Q_0 = -1.  The
identity is checked on truncated series; compositions x -> x^{m^j} are done
by spreading coefficients, never by resumming.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import OddBase
from .intpoly import IntPoly, shift
from .mseq import MSeq, base_digits
from .partitions import a_series, p_values


@dataclass(frozen=True)
class MahlerSystem:
    m: int
    k: int
    coeff_polys: tuple[IntPoly, ...]
    inhom: IntPoly

    def q_closed_form(self) -> IntPoly:
        """-x^{(m^k - 1)/(m - 1)}."""
        return IntPoly.monomial((self.m**self.k - 1) // (self.m - 1), -1)


def mahler_system(m: int, k: int, *, printed_exponent: bool = False) -> MahlerSystem:
    """P_{k,j} and Q_k for the equation of A_m(k, x).

    Level k comes from level k - 1 by substituting
    A(k-1, y) = (A(k, y) - A(k, y^m)) / y at y = x^{m^j} and clearing
    denominators with x^{m^{k-1}}, giving for 0 < j < k

        P_{k,j} = x^{m^{k-1} - m^j} P_{k-1,j} - x^{m^{k-1} - m^{j-1}} P_{k-1,j-1}.

    ``printed_exponent`` uses x^{m^k - m^j} in the first term instead, a
    variant that does not satisfy the equation for k >= 2; it exists only
    as a negative control.
    """
    if m < 2 or k < 0:
        raise ValueError("need m >= 2 and k >= 0")
    P = [IntPoly.one()]
    Q = IntPoly([-1])
    for level in range(1, k + 1):
        mk1 = m ** (level - 1)
        top = m**level if printed_exponent else mk1
        nxt = [shift(P[0], mk1 - 1)]
        for j in range(1, level):
            nxt.append(shift(P[j], top - m**j) - shift(P[j - 1], mk1 - m ** (j - 1)))
        nxt.append(-P[level - 1])
        P = nxt
        Q = shift(Q, mk1)
    return MahlerSystem(m, k, tuple(P), Q)


def _truncated_product(poly: IntPoly, series: Sequence[int], step: int, trunc: int) -> list[int]:
    """Coefficients 0..trunc of poly(x) * S(x^step), S given by its coefficients."""
    out = [0] * (trunc + 1)
    for e, c in enumerate(poly.coeffs):
        if not c or e > trunc:
            continue
        for i, s in enumerate(series):
            pos = e + i * step
            if pos > trunc:
                break
            if s:
                out[pos] += c * s
    return out


def mahler_residual(m: int, k: int, trunc: int, system: MahlerSystem | None = None) -> list[int]:
    """Coefficients of x^0..x^trunc of the left-hand side; all exact."""
    if system is None:
        system = mahler_system(m, k)
    A = a_series(m, k, trunc)
    total = [0] * (trunc + 1)
    for j, P in enumerate(system.coeff_polys):
        for i, v in enumerate(_truncated_product(P, A, m**j, trunc)):
            total[i] += v
    for i, c in enumerate(system.inhom.coeffs[: trunc + 1]):
        total[i] += c
    return total


def verify_mahler(m: int, k: int, trunc: int, system: MahlerSystem | None = None) -> bool:
    """Whether the functional equation holds through x^trunc.

    Every coefficient up to x^trunc only involves a_m(k, n) with n <= trunc,
    so nothing past the truncation is inferred.
    """
    return not any(mahler_residual(m, k, trunc, system))


def meaningful_trunc(system: MahlerSystem) -> int:
    """Truncation at which every P_{k,j} and the top dilation m^k are exercised."""
    deg = max(int(p.degree) for p in system.coeff_polys)
    return max(deg, int(system.inhom.degree)) + system.m**system.k


# ---------------------------------------------------------------------------
# automata


@dataclass(frozen=True)
class Dfao:
    """Deterministic finite automaton with output, reading base-m digits."""

    m: int
    states: tuple[str, ...]
    initial: str
    transition: dict
    output: dict
    msd_first: bool

    def __post_init__(self):
        for s in self.states:
            if s not in self.output:
                raise ValueError(f"no output for state {s!r}")
            for d in range(self.m):
                if (s, d) not in self.transition:
                    raise ValueError(f"missing transition from {s!r} on digit {d}")

    def run(self, n: int) -> int:
        digits = base_digits(self.m, n) if n else []
        if self.msd_first:
            digits = digits[::-1]
        state = self.initial
        for d in digits:
            state = self.transition[(state, d)]
        return self.output[state]

    __call__ = run


def _by_parity(m: int, table: dict[str, tuple[str, str]]) -> dict:
    # table: state -> (target on even digit, target on odd digit)
    return {(s, d): table[s][d % 2] for s in table for d in range(m)}


def dfao_lsd(m: int) -> Dfao:
    """Least-significant-digit-first machine for p_m(n, -1), m even."""
    if m % 2:
        raise OddBase(f"automaton needs an even base, got {m}")
    table = {
        "start": ("plus", "minus"),
        "plus": ("plus", "zero"),
        "minus": ("minus", "zero"),
        "zero": ("zero", "zero"),
    }
    output = {"start": 1, "plus": 1, "minus": -1, "zero": 0}
    return Dfao(m, tuple(table), "start", _by_parity(m, table), output, msd_first=False)


def dfao_msd(m: int) -> Dfao:
    """Most-significant-digit-first machine for p_m(n, -1), m even."""
    if m % 2:
        raise OddBase(f"automaton needs an even base, got {m}")
    table = {
        "start": ("start", "minus"),
        "minus": ("zero", "zero"),
        "zero": ("zero", "zero"),
    }
    output = {"start": 1, "minus": -1, "zero": 0}
    return Dfao(m, tuple(table), "start", _by_parity(m, table), output, msd_first=True)


# ---------------------------------------------------------------------------
# kernels


@dataclass
class KernelResult:
    """Classes of kernel subsequences that are distinguishable at this resolution.

    Subsequences ``(a_{m^i n + j})`` are compared on their first
    ``seq_len`` terms only, so the count is a lower bound on the true kernel
    size up to ``depth``.
    """

    m: int
    depth: int
    seq_len: int
    classes: list[list[tuple[int, int]]]
    representatives: list[tuple[int, ...]]

    def __len__(self) -> int:
        return len(self.classes)


def sign_sequence(m: int, upto: int) -> list[int]:
    """p_m(n, -1) for n = 0..upto."""
    return p_values(MSeq.constant(m), upto, -1)


def coeff_mod_sequence(m: int, k: int, upto: int) -> list[int]:
    """a_m(k, n) mod m for n = 0..upto."""
    return [v % m for v in a_series(m, k, upto)]


def kernel(m: int, seq_len: int, depth: int,
           seq: Sequence[int] | Callable[[int], Sequence[int]] | None = None) -> KernelResult:
    """Group the m-kernel subsequences for i <= depth by prefix equality.

    ``seq`` is a list of values or a function returning the first N+1 values;
    by default the sign sequence p_m(n, -1).
    """
    need = m**depth * seq_len
    if seq is None:
        values = sign_sequence(m, need)
    elif callable(seq):
        values = list(seq(need))
    else:
        values = list(seq)
    if len(values) < need:
        raise ValueError(f"need {need} terms, got {len(values)}")
    groups: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for i in range(depth + 1):
        step = m**i
        for j in range(step):
            key = tuple(values[j: j + step * seq_len: step])
            groups.setdefault(key, []).append((i, j))
    reps = sorted(groups, key=lambda key: groups[key][0])
    return KernelResult(m, depth, seq_len, [groups[r] for r in reps], reps)
