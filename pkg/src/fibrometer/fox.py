"""Integral group ring of a free group and Fox free derivatives."""

from __future__ import annotations

from typing import Mapping

from .presentation import FreeWord


class GroupRingElem:
    """Finite integer combination of reduced free-group words.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[FreeWord, int] | None = None):
        clean = {}
        if terms:
            for w, c in terms.items():
                if c:
                    clean[w] = clean.get(w, 0) + c
            clean = {w: c for w, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def word(cls, w: FreeWord, coeff: int = 1) -> "GroupRingElem":
        return cls({w: coeff})

    @classmethod
    def one(cls) -> "GroupRingElem":
        return cls({FreeWord.identity(): 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].shortlex_key())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = GroupRingElem.one() * other if other else GroupRingElem()
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "GroupRingElem") -> "GroupRingElem":
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElem(out)

    def __neg__(self) -> "GroupRingElem":
        return GroupRingElem({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "GroupRingElem") -> "GroupRingElem":
        return self + (-other)

    def __mul__(self, other) -> "GroupRingElem":
        if isinstance(other, int):
            return GroupRingElem({w: c * other for w, c in self._terms.items()})
        out: dict = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = u * v
                out[w] = out.get(w, 0) + a * b
        return GroupRingElem(out)

    __rmul__ = __mul__

    def render(self, names) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.items():
            body = w.render(names, sep="") if w else ""
            if body:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = mag + body
            else:
                term = str(abs(c))
            parts.append(("- " if c < 0 else "+ ") + term)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[1:]

    def __repr__(self) -> str:
        return f"GroupRingElem({self.items()!r})"


def ring_add(a: GroupRingElem, b: GroupRingElem) -> GroupRingElem:
    return a + b


def ring_mul(a: GroupRingElem, b: GroupRingElem) -> GroupRingElem:
    return a * b


def ring_scale_word(w: FreeWord, a: GroupRingElem) -> GroupRingElem:
    """Left multiplication of ``a`` by the group element ``w``."""
    return GroupRingElem.word(w) * a


def fox_derivative(w: FreeWord, g: int) -> GroupRingElem:
    """Free derivative of ``w`` with respect to generator ``g``.

    Uses d(uv) = du + u dv, dx/dx = 1 and d(x^-1)/dx = -x^-1.
    """
    out: dict = {}
    prefix = FreeWord.identity()
    for gen, exp in w.letters:
        if gen == g:
            step = FreeWord.gen(g, 1 if exp > 0 else -1)
            if exp > 0:
                p = prefix
                for _ in range(exp):
                    out[p] = out.get(p, 0) + 1
                    p = p * step
            else:
                p = prefix
                for _ in range(-exp):
                    p = p * step
                    out[p] = out.get(p, 0) - 1
        prefix = prefix * FreeWord.gen(gen, exp)
    return GroupRingElem(out)
