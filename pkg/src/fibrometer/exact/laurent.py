"""Laurent polynomials in ``t`` with exact rational coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Mapping


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class LaurentPoly:
    """Element of Q[t, t^-1]; immutable, zero coefficients never stored."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = Fraction(v)
                if v:
                    c[int(e)] = v
        self._c = c

    @classmethod
    def monomial(cls, exp: int = 0, coeff=1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def from_list(cls, coeffs, low: int = 0) -> "LaurentPoly":
        """Coefficients listed from exponent ``low`` upwards."""
        return cls({low + i: v for i, v in enumerate(coeffs) if v})

    @classmethod
    def t(cls) -> "LaurentPoly":
        return cls({1: 1})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def low(self) -> int:
        return min(self._c)

    @property
    def high(self) -> int:
        return max(self._c)

    def spread(self) -> int:
        """Degree span high - low; -1 for the zero polynomial."""
        return self.high - self.low if self._c else -1

    def __getitem__(self, e: int) -> Fraction:
        return self._c.get(e, Fraction(0))

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({0: other})
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials are invertible")
            (e, v), = self._c.items()
            return LaurentPoly({e * n: v ** n})
        out = LaurentPoly({0: 1})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_unit(self) -> bool:
        return len(self._c) == 1

    def evaluate(self, x):
        return sum(v * x ** e for e, v in self._c.items())

    def substitute_power(self, k: int) -> "LaurentPoly":
        """p(t) -> p(t^k)."""
        return LaurentPoly({e * k: v for e, v in self._c.items()})

    def root_substitute(self, d: int) -> "LaurentPoly | None":
        """Return q with q(t^d) = self, or None when some exponent is not a multiple of d."""
        if d == 0:
            return None
        if any(e % d for e in self._c):
            return None
        return LaurentPoly({e // d: v for e, v in self._c.items()})

    def integer_coefficients(self) -> list[int]:
        """Coefficients from low to high; requires integral coefficients."""
        if not self._c:
            return []
        out = []
        for e in range(self.low, self.high + 1):
            v = self._c.get(e, Fraction(0))
            if v.denominator != 1:
                raise ValueError("non-integral coefficient")
            out.append(int(v))
        return out

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            mag = abs(v)
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "t"
            else:
                mono = f"t^{e}"
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((v < 0, body))
        neg, body = parts[0]
        out = ("-" if neg else "") + body
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def normalize_poly(p: LaurentPoly) -> LaurentPoly:
    """Canonical representative of the unit class of ``p``.

    Lowest exponent 0, coprime integer coefficients, positive leading coefficient.
    """
    if p.is_zero():
        return p
    c = p.coeffs
    den = reduce(_lcm, (v.denominator for v in c.values()), 1)
    ints = {e: int(v * den) for e, v in c.items()}
    g = reduce(gcd, (abs(v) for v in ints.values()), 0)
    lo, hi = min(ints), max(ints)
    sign = 1 if ints[hi] > 0 else -1
    return LaurentPoly({e - lo: sign * v // g for e, v in ints.items()})


def is_monic(p: LaurentPoly) -> bool:
    """Nonzero with leading and trailing canonical coefficients equal to +-1."""
    if p.is_zero():
        return False
    q = normalize_poly(p)
    return abs(q[q.high]) == 1 and abs(q[q.low]) == 1


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of ``str(LaurentPoly)`` for the rendering used in reports."""
    s = text.replace(" ", "")
    if s == "0":
        return LaurentPoly()
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    out: dict = {}
    for sign, body in re.findall(r"([+-])([^+-]+(?:\^-?\d+)?)", s.replace("^-", "^~")):
        body = body.replace("^~", "^-")
        m = re.fullmatch(r"(?:(\d+(?:/\d+)?)\*?)?(t(?:\^(-?\d+))?)?", body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse term {body!r}")
        coeff = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        exp = 0 if m.group(2) is None else (int(m.group(3)) if m.group(3) else 1)
        out[exp] = out.get(exp, 0) + (coeff if sign == "+" else -coeff)
    return LaurentPoly(out)
