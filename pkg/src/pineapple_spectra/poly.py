"""Univariate polynomials with arbitrary-precision integer coefficients."""
from __future__ import annotations

import json
from fractions import Fraction
from math import lcm
from typing import Iterable

__all__ = ["IntPoly", "X", "count_real_roots", "sturm_sequence"]


class IntPoly:
    """Integer polynomial; ``coeffs[i]`` is the coefficient of ``x**i``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def from_high(cls, coeffs: Iterable[int]) -> IntPoly:
        """Build from coefficients listed highest degree first."""
        return cls(list(coeffs)[::-1])

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPoly:
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        out = cls([1])
        for r in roots:
            out = out * cls([-r, 1])
        return out

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: IntPoly | int) -> IntPoly:
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return self + (-_lift(other))

    def __rsub__(self, other: int) -> IntPoly:
        return _lift(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod_rational(self, d: IntPoly) -> tuple[list[Fraction], list[Fraction]]:
        """Long division over the rationals; returns (quotient, remainder) coefficient lists."""
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        dd = d.degree
        quot = [Fraction(0)] * max(0, self.degree - dd + 1)
        lead = Fraction(d.leading)
        for i in range(self.degree - dd, -1, -1):
            c = rem[i + dd] / lead
            quot[i] = c
            if c:
                for j, dc in enumerate(d.coeffs):
                    rem[i + j] -= c * dc
        while rem and rem[-1] == 0:
            rem.pop()
        return quot, rem

    def __divmod__(self, d: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Division with integer results; ``d`` must make the quotient integral."""
        quot, rem = self.divmod_rational(d)
        if any(c.denominator != 1 for c in quot + rem):
            raise ValueError("quotient is not integral; use divmod_rational")
        return IntPoly(int(c) for c in quot), IntPoly(int(c) for c in rem)

    def __floordiv__(self, d: IntPoly) -> IntPoly:
        return divmod(self, d)[0]

    def __mod__(self, d: IntPoly) -> IntPoly:
        return divmod(self, d)[1]

    def synthetic_division(self, r: int) -> tuple[IntPoly, int]:
        """Divide by ``x - r``; returns the quotient and the remainder ``f(r)``."""
        if self.is_zero():
            return IntPoly(), 0
        high = list(reversed(self.coeffs))
        out = [high[0]]
        for c in high[1:]:
            out.append(c + r * out[-1])
        return IntPoly.from_high(out[:-1]), out[-1]

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> IntPoly:
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(c, str) for c in data):
            raise ValueError("expected a JSON array of decimal strings")
        return cls(int(c) for c in data)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if i == 1 else f"x^{i}")
            terms.append((sign, body))
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            text += sign + body
        return text


def _lift(v: IntPoly | int) -> IntPoly:
    return v if isinstance(v, IntPoly) else IntPoly([v])


X = IntPoly([0, 1])


def _frac_rem(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    rem = f[:]
    while len(rem) >= len(g):
        c = rem[-1] / g[-1]
        shift = len(rem) - len(g)
        for j, gc in enumerate(g):
            rem[shift + j] -= c * gc
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def sturm_sequence(f: IntPoly) -> list[list[Fraction]]:
    """Sturm chain of ``f`` (coefficients low first, as Fractions)."""
    if f.degree < 1:
        raise ValueError("Sturm sequences need a polynomial of degree >= 1")
    p0 = [Fraction(c) for c in f.coeffs]
    chain = _chain(p0)
    if len(chain[-1]) > 1:
        # repeated roots: restart from the square-free part f / gcd(f, f')
        quot, rem = f.divmod_rational(_as_intpoly(chain[-1]))
        assert not rem
        chain = _chain(quot)
    return chain


def _chain(p0: list[Fraction]) -> list[list[Fraction]]:
    p1 = [i * c for i, c in enumerate(p0)][1:]
    chain = [p0, p1]
    while True:
        rem = _frac_rem(chain[-2], chain[-1])
        if not rem:
            return chain
        chain.append([-c for c in rem])


def _as_intpoly(coeffs: list[Fraction]) -> IntPoly:
    """Scale a rational polynomial to an integer one."""
    den = lcm(*(c.denominator for c in coeffs))
    return IntPoly(int(c * den) for c in coeffs)


def _sign_changes(chain: list[list[Fraction]], x) -> int:
    signs = []
    for poly in chain:
        if x == "-inf":
            v = poly[-1] * (-1) ** (len(poly) - 1)
        elif x == "+inf":
            v = poly[-1]
        else:
            v = sum(c * Fraction(x) ** i for i, c in enumerate(poly))
        if v:
            signs.append(v > 0)
    return sum(a != b for a, b in zip(signs, signs[1:]))


def count_real_roots(f: IntPoly, lo="-inf", hi="+inf") -> int:
    """Distinct real roots of ``f`` in ``(lo, hi]``, counted exactly.

    ``lo`` and ``hi`` are rationals or the strings ``"-inf"``/``"+inf"``.
    """
    chain = sturm_sequence(f)
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)
