"""Base sequences M = (1, m_1, m_2, ...), mixed-radix digits and digit statistics.

An ``MSeq`` is eventually periodic: an explicit ``head`` followed by a
repeating ``tail`` cycle.  The constant-m sequence is ``MSeq((), (m,))``.
Instances are normalized on construction so that equal sequences compare
and hash equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import DigitOutOfRange


def _minimal_period(cycle: tuple[int, ...]) -> tuple[int, ...]:
    n = len(cycle)
    for p in range(1, n + 1):
        if n % p == 0 and cycle == cycle[:p] * (n // p):
            return cycle[:p]
    return cycle


@dataclass(frozen=True)
class MSeq:
    head: tuple[int, ...]
    tail: tuple[int, ...]

    def __post_init__(self):
        head = tuple(int(x) for x in self.head)
        tail = tuple(int(x) for x in self.tail)
        if not tail:
            raise ValueError("tail cycle must be nonempty")
        if any(x < 2 for x in head + tail):
            raise ValueError("every m_i (i >= 1) must be at least 2")
        tail = _minimal_period(tail)
        # absorb head entries that already continue the cycle backwards
        while head and head[-1] == tail[-1]:
            head = head[:-1]
            tail = tail[-1:] + tail[:-1]
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "tail", tail)

    @classmethod
    def constant(cls, m: int) -> "MSeq":
        return cls((), (m,))

    @classmethod
    def parse(cls, spec: str) -> "MSeq":
        """Parse ``"m"``, ``"a,b;c"`` (head a,b then repeating c) or ``";c,d"``."""
        text = spec.strip()
        if ";" in text:
            h, t = text.split(";", 1)
        else:
            h, t = "", text
        try:
            head = tuple(int(x) for x in h.split(",") if x.strip())
            tail = tuple(int(x) for x in t.split(",") if x.strip())
        except ValueError as exc:
            raise ValueError(f"malformed sequence spec {spec!r}") from exc
        return cls(head, tail)

    def __str__(self) -> str:
        t = ",".join(map(str, self.tail))
        if not self.head:
            return t
        return ",".join(map(str, self.head)) + ";" + t

    @property
    def is_constant(self) -> bool:
        return not self.head and len(self.tail) == 1

    def canonical_depth(self, d: int) -> int:
        """Smallest depth whose shifted sequence equals ``shift_seq`` applied d times."""
        h = len(self.head)
        if d < h:
            return d
        return h + (d - h) % len(self.tail)

    def m_at(self, i: int) -> int:
        if i < 1:
            if i == 0:
                return 1
            raise ValueError("index must be nonnegative")
        h = len(self.head)
        if i <= h:
            return self.head[i - 1]
        return self.tail[(i - 1 - h) % len(self.tail)]

    def big_m(self, i: int) -> int:
        """Cumulative product M_i = m_0 m_1 ... m_i."""
        out = 1
        for j in range(1, i + 1):
            out *= self.m_at(j)
        return out

    def parts(self, limit: int) -> list[int]:
        """All M_i that do not exceed ``limit`` (at least M_0 = 1)."""
        out = [1]
        i = 1
        while out[-1] * self.m_at(i) <= limit:
            out.append(out[-1] * self.m_at(i))
            i += 1
        return out

    def shifted(self, d: int = 1) -> "MSeq":
        """Drop m_1, ..., m_d."""
        seq = self
        for _ in range(d):
            seq = shift_seq(seq)
        return seq

    def to_digits(self, n: int) -> list[int]:
        return to_digits(self, n)

    def from_digits(self, digits: Sequence[int]) -> int:
        return from_digits(self, digits)


def m_at(M: MSeq, i: int) -> int:
    return M.m_at(i)


def big_M(M: MSeq, i: int) -> int:
    return M.big_m(i)


def shift_seq(M: MSeq) -> MSeq:
    if M.head:
        return MSeq(M.head[1:], M.tail)
    return MSeq((), M.tail[1:] + M.tail[:1])


def to_digits(M: MSeq, n: int) -> list[int]:
    """Mixed-radix digits ``[a_0, ..., a_k]`` with n = sum a_j M_j, 0 <= a_j < m_{j+1}.

    ``n = 0`` yields ``[0]``; otherwise the top digit is nonzero.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [0]
    digits = []
    j = 1
    while n:
        n, a = divmod(n, M.m_at(j))
        digits.append(a)
        j += 1
    return digits


def from_digits(M: MSeq, digits: Sequence[int]) -> int:
    total, weight = 0, 1
    for j, a in enumerate(digits):
        base = M.m_at(j + 1)
        if not 0 <= a < base:
            raise DigitOutOfRange(f"digit a_{j}={a} outside [0, {base - 1}]")
        total += a * weight
        weight *= base
    return total


def base_digits(m: int, n: int) -> list[int]:
    """Base-m digits of n, least significant first (``[0]`` for zero)."""
    return to_digits(MSeq.constant(m), n)


def digit_sum(m: int, n: int) -> int:
    s = 0
    while n:
        n, r = divmod(n, m)
        s += r
    return s


def valuation(m: int, n: int) -> int:
    if n < 1:
        raise ValueError("valuation needs n >= 1")
    e = 0
    while n % m == 0:
        n //= m
        e += 1
    return e


def gcd_prefix(M: MSeq, k: int) -> int:
    """gcd(m_1, ..., m_k); 0 for k = 0."""
    g = 0
    for i in range(1, k + 1):
        g = gcd(g, M.m_at(i))
    return g
