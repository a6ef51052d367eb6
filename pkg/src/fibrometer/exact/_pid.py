"""Fraction-free diagonalization over Q[t, t^-1].

Entries are dense integer polynomials (lists, constant term first, no
trailing zeros).  Rows and columns are only ever rescaled by units of the
Laurent ring (nonzero integers and powers of t), so the product of the
diagonal is the gcd of the maximal nonvanishing minors up to a unit.
"""

from __future__ import annotations

from math import gcd

from ..errors import LimitError

MAX_SIDE = 64
MAX_SPREAD = 512


def trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def low(p: list) -> int:
    for i, v in enumerate(p):
        if v:
            return i
    raise ValueError("zero polynomial has no low degree")


def spread(p: list) -> int:
    return len(p) - 1 - low(p)


def add(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return trim(out)


def scale(a: list, c: int) -> list:
    if c == 0:
        return []
    return [c * v for v in a]


def shift(a: list, k: int) -> list:
    if not a:
        return []
    if k >= 0:
        return [0] * k + a
    return a[-k:]


def mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def pseudo_reduce(a: list, p: list) -> tuple[int, list, list]:
    """Return (c, q, r) with c*a - q*p = r, deg r < deg p, c a nonzero integer."""
    c, q, r = 1, [], list(a)
    m = p[-1]
    dp = len(p) - 1
    while r and len(r) - 1 >= dp:
        lr = r[-1]
        g = gcd(m, lr)
        mult, factor = m // g, lr // g
        d = len(r) - 1 - dp
        r = add(scale(r, mult), shift(scale(p, -factor), d))
        q = add(scale(q, mult), shift([factor], d))
        c *= mult
    return c, q, r


def _key(p: list):
    return (spread(p), sum(1 for v in p if v), max(abs(v) for v in p))


def _normalize_line(entries: list) -> list:
    nz = [e for e in entries if e]
    if not nz:
        return entries
    k = min(low(e) for e in nz)
    g = 0
    for e in nz:
        for v in e:
            g = gcd(g, v)
    out = []
    for e in entries:
        if e:
            e = e[k:]
            if g != 1:
                e = [v // g for v in e]
        out.append(e)
    return out


def _check(p: list):
    if p and spread(p) > MAX_SPREAD:
        raise LimitError(f"polynomial degree spread {spread(p)} exceeds cap {MAX_SPREAD}")


def diagonalize(matrix: list[list[list]]) -> list[list]:
    """Diagonalize by unimodular row and column operations.

    Returns the nonzero diagonal entries; their count is the rank over Q(t).
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    if max(m, n) > MAX_SIDE:
        raise LimitError(f"matrix side {max(m, n)} exceeds cap {MAX_SIDE}")
    A = [[list(e) for e in row] for row in matrix]
    A = [_normalize_line(row) for row in A]
    for row in A:
        for e in row:
            _check(e)
    pivots = []
    for s in range(min(m, n)):
        best = None
        for i in range(s, m):
            for j in range(s, n):
                e = A[i][j]
                if e:
                    k = _key(e)
                    if best is None or k < best[0]:
                        best = (k, i, j)
        if best is None:
            break
        _, i, j = best
        _swap(A, s, i, j)
        while True:
            p = A[s][s]
            lp = low(p)
            pcore = p[lp:]
            for i in range(s + 1, m):
                a = A[i][s]
                if not a:
                    continue
                la = low(a)
                c, q, _ = pseudo_reduce(a[la:], pcore)
                row_i = [shift(scale(e, c), lp) for e in A[i]]
                row_s = [shift(mul(q, e), la) for e in A[s]]
                new = [add(x, scale(y, -1)) for x, y in zip(row_i, row_s)]
                A[i] = _normalize_line(new)
                for e in A[i]:
                    _check(e)
            for j in range(s + 1, n):
                a = A[s][j]
                if not a:
                    continue
                la = low(a)
                c, q, _ = pseudo_reduce(a[la:], pcore)
                for i in range(s, m):
                    A[i][j] = add(shift(scale(A[i][j], c), lp), scale(shift(mul(q, A[i][s]), la), -1))
                col = _normalize_line([A[i][j] for i in range(m)])
                for i in range(m):
                    A[i][j] = col[i]
                    _check(col[i])
            rest = [(i, s) for i in range(s + 1, m) if A[i][s]]
            rest += [(s, j) for j in range(s + 1, n) if A[s][j]]
            if not rest:
                break
            _, i, j = min((_key(A[i][j]), i, j) for i, j in rest)
            _swap(A, s, i, j)
        pivots.append(A[s][s])
    return pivots


def _swap(A, s, i, j):
    if i != s:
        A[s], A[i] = A[i], A[s]
    if j != s:
        for row in A:
            row[s], row[j] = row[j], row[s]
