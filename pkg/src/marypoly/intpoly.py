"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored in ascending order, ``coeffs[i]`` being the
coefficient of ``t**i``.  The zero polynomial stores an empty tuple and its
degree is ``NEG_INF``, which poisons arithmetic and cannot be used as an index.
"""

from __future__ import annotations

import json
from math import gcd
from typing import Iterable, Sequence

from .errors import NonIntegerGcd, NotDivisible, NotMonic

NEG_INF = float("-inf")


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        object.__setattr__(self, "coeffs", tuple(_trim(c)))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def _raw(cls, c: list[int]) -> "IntPoly":
        # caller guarantees c is trimmed and holds ints
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(c))
        return p

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls._raw([])

    @classmethod
    def one(cls) -> "IntPoly":
        return cls._raw([1])

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        if k < 0:
            raise ValueError("negative exponent")
        if c == 0:
            return cls.zero()
        return cls._raw([0] * k + [c])

    @classmethod
    def from_json(cls, text: str) -> "IntPoly":
        return cls(json.loads(text))

    def to_json(self) -> str:
        return json.dumps(list(self.coeffs), separators=(",", ":"))

    # -- basic queries --------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def order(self):
        """Index of the lowest nonzero coefficient (``NEG_INF`` for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative coefficient index")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")

    # -- ring operations -----------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative power")
        result, base = IntPoly.one(), self
        while e:
            if e & 1:
                result = mul(result, base)
            base = mul(base, base)
            e >>= 1
        return result

    def __lshift__(self, k: int) -> "IntPoly":
        return shift(self, k)

    def __call__(self, x: int) -> int:
        return eval_int(self, x)

    def dilate(self, d: int) -> "IntPoly":
        """Substitute ``t -> t**d``."""
        if d < 1:
            raise ValueError("dilation factor must be positive")
        if d == 1 or not self.coeffs:
            return self
        out = [0] * (d * (len(self.coeffs) - 1) + 1)
        out[::d] = self.coeffs
        return IntPoly._raw(out)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part, sign chosen so the leading coefficient is positive."""
        g = self.content()
        if g == 0:
            return self
        if self.lc < 0:
            g = -g
        return IntPoly._raw([c // g for c in self.coeffs])


def _coerce(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly._raw([x] if x else [])
    return NotImplemented


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    ac, bc = a.coeffs, b.coeffs
    if len(ac) < len(bc):
        ac, bc = bc, ac
    out = list(ac)
    for i, c in enumerate(bc):
        out[i] += c
    return IntPoly._raw(_trim(out))


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    ac, bc = a.coeffs, b.coeffs
    if not ac or not bc:
        return IntPoly.zero()
    if len(ac) < len(bc):
        ac, bc = bc, ac
    out = [0] * (len(ac) + len(bc) - 1)
    for j, y in enumerate(bc):
        if not y:
            continue
        for i, x in enumerate(ac):
            out[i + j] += x * y
    return IntPoly._raw(out)


def shift(a: IntPoly, k: int) -> IntPoly:
    """Multiply by ``t**k``."""
    if k < 0:
        raise ValueError("shift amount must be nonnegative")
    if not a.coeffs or k == 0:
        return a
    return IntPoly._raw([0] * k + list(a.coeffs))


def eval_int(a: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def divmod_int(a: IntPoly, b: IntPoly, *, exact: bool = False) -> tuple[IntPoly, IntPoly]:
    """Integer long division ``a = q*b + r`` with ``deg r < deg b``.

    Every step needs the current leading coefficient to be divisible by
    ``lc(b)``; if it is not, NotDivisible is raised.  With ``exact`` the
    remainder must vanish as well.
    """
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.coeffs)
    bc = b.coeffs
    db, lb = len(bc) - 1, bc[-1]
    if len(r) - 1 < db:
        if exact and r:
            raise NotDivisible(f"{b} does not divide {a}")
        return IntPoly.zero(), a
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1 - db, -1, -1):
        top = r[i + db]
        if not top:
            continue
        c, rem = divmod(top, lb)
        if rem:
            raise NotDivisible(f"{b} does not divide {a} over the integers")
        q[i] = c
        for j, y in enumerate(bc):
            r[i + j] -= c * y
    rem_poly = IntPoly._raw(_trim(r))
    if exact and not rem_poly.is_zero():
        raise NotDivisible(f"{b} does not divide {a}")
    return IntPoly._raw(_trim(q)), rem_poly


def divide_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    return divmod_int(a, b, exact=True)[0]


def rem_mod(a: IntPoly, g: IntPoly) -> IntPoly:
    """Remainder of ``a`` modulo the monic polynomial ``g``."""
    if g.is_zero() or not g.is_monic():
        raise NotMonic(f"modulus {g} is not monic")
    return divmod_int(a, g)[1]


def divides(g: IntPoly, a: IntPoly) -> bool:
    """Whether ``a`` is an integer-polynomial multiple of ``g`` (0 divides only 0)."""
    if g.is_zero():
        return a.is_zero()
    try:
        divmod_int(a, g, exact=True)
    except NotDivisible:
        return False
    return True


def pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """``lc(b)**(deg a - deg b + 1) * a`` reduced modulo ``b``."""
    r = list(a.coeffs)
    bc = b.coeffs
    db, lb = len(bc) - 1, bc[-1]
    if len(r) - 1 < db:
        return a
    delta = len(r) - 1 - db + 1
    while len(r) - 1 >= db and r:
        top = r[-1]
        shift_by = len(r) - 1 - db
        r = [lb * c for c in r]
        for j, y in enumerate(bc):
            r[shift_by + j] -= top * y
        _trim(r)
        delta -= 1
    if delta:
        r = [c * lb**delta for c in r]
    return IntPoly._raw(r)


def gcd_monic(a: IntPoly, b: IntPoly) -> IntPoly:
    """Monic gcd over Q via the primitive remainder sequence.

    Raises NonIntegerGcd if the monic representative is not in Z[t].
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if a.degree < b.degree:
        a, b = b, a
    a = a.primitive()
    b = b.primitive()
    while not b.is_zero():
        a, b = b, pseudo_rem(a, b).primitive()
    lead = a.lc
    if any(c % lead for c in a.coeffs):
        raise NonIntegerGcd(f"monic gcd {a} / {lead} is not integral")
    return IntPoly._raw([c // lead for c in a.coeffs])


def gcd_many(polys: Sequence[IntPoly]) -> IntPoly:
    """Left fold of gcd_monic."""
    if not polys:
        raise ValueError("gcd of an empty family")
    g = polys[0]
    if len(polys) == 1:
        return gcd_monic(g, IntPoly.zero())
    for p in polys[1:]:
        g = gcd_monic(g, p)
    return g
