"""Dense univariate polynomials over exact rationals.

The indeterminate is written ``x``.  Everywhere else in this package a
q-expression is encoded with ``x = q**(1/2)``, so integer powers of x cover
half-integer powers of q exactly.

Coefficients are ``fractions.Fraction``; coefficient lists never carry
trailing zeros, so the zero polynomial is the empty tuple and has degree -1.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd as _igcd, lcm as _ilcm
from typing import Iterable, Union

Scalar = Union[int, Fraction]

DEFAULT_MAX_DEGREE = 10_000
_ENV_MAX_DEGREE = "QGL_MAX_DEGREE"


class DegreeLimitError(RuntimeError):
    """A polynomial exceeded the QGL_MAX_DEGREE resource cap."""


def max_degree() -> int:
    """Current degree cap: QGL_MAX_DEGREE env var, default 10000."""
    raw = os.environ.get(_ENV_MAX_DEGREE)
    return int(raw) if raw else DEFAULT_MAX_DEGREE


class Poly:
    """Immutable dense polynomial; ``coeffs[i]`` multiplies ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        if len(cs) - 1 > max_degree():
            raise DegreeLimitError(
                f"degree {len(cs) - 1} exceeds {_ENV_MAX_DEGREE}={max_degree()}"
            )
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> "Poly":
        """c * x**n (n >= 0)."""
        if n < 0:
            raise ValueError("monomial exponent must be >= 0")
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "Poly | Scalar") -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial; use RatFunc")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dv = other.coeffs
        lead = dv[-1]
        qlen = max(0, len(r) - len(dv) + 1)
        q = [Fraction(0)] * qlen
        while len(r) >= len(dv):
            c = r[-1] / lead
            s = len(r) - len(dv)
            q[s] = c
            for i, cv in enumerate(dv):
                r[s + i] -= c * cv
            while r and not r[-1]:
                r.pop()
            if not r:
                break
        return Poly(q), Poly(r)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, x0: Scalar) -> Fraction:
        """Evaluate at a rational point by Horner's rule."""
        x0 = Fraction(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("monic of the zero polynomial is undefined")
        lc = self.leading
        if lc == 1:
            return self
        return Poly([c / lc for c in self.coeffs])

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(parts)


def _coerce(value: "Poly | Scalar") -> "Poly":
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly([value])
    return NotImplemented


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def _int_primitive(p: Poly) -> list[int]:
    """Integer coefficient list of p scaled to primitive form (content 1)."""
    denom_lcm = 1
    for c in p.coeffs:
        denom_lcm = _ilcm(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in p.coeffs]
    content = 0
    for v in ints:
        content = _igcd(content, v)
    if content > 1:
        ints = [v // content for v in ints]
    return ints


def _prem(u: list[int], v: list[int]) -> list[int]:
    """Pseudo-remainder lc(v)**(deg u - deg v + 1) * u mod v over the integers."""
    n = len(v) - 1
    lc = v[-1]
    delta = len(u) - 1 - n
    r = list(u)
    steps = 0
    while r and len(r) - 1 >= n:
        rl = r[-1]
        r = [lc * c for c in r]
        steps += 1
        s = len(r) - 1 - n
        for i, cv in enumerate(v):
            r[s + i] -= rl * cv
        while r and r[-1] == 0:
            r.pop()
    if steps < delta + 1:
        m = lc ** (delta + 1 - steps)
        r = [c * m for c in r]
    return r


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor via the subresultant remainder sequence.

    Raises ValueError when both arguments are zero.
    """
    if a.is_zero and b.is_zero:
        raise ValueError("gcd undefined for two zero polynomials")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    u = _int_primitive(a)
    v = _int_primitive(b)
    if len(u) < len(v):
        u, v = v, u
    g, h = 1, 1
    while True:
        delta = (len(u) - 1) - (len(v) - 1)
        r = _prem(u, v)
        if not r:
            break
        if len(r) == 1:
            return ONE
        u, v = v, [c // (g * h**delta) for c in r]
        g = u[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = g**delta // h ** (delta - 1)
    content = 0
    for c in v:
        content = _igcd(content, c)
    if content > 1:
        v = [c // content for c in v]
    return Poly(v).monic()
