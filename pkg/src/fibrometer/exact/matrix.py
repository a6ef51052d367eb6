"""Dense exact matrices over Z and Q[t^{+-1}].

Chain complexes use row vectors throughout: for C2 -> C1 -> C0 the matrix
``d2`` has one row per 2-cell and one column per 1-cell, ``d1`` one row per
1-cell and one column per 0-cell, and the complex condition reads
``d2 @ d1 == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

from ..errors import CompositionNonzero
from . import _pid
from .laurent import LaurentPoly, normalize_poly


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(v) for v in self.entries))
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows, cols=None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(v for r in rows for v in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def tolist(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        a, b = self.tolist(), other.tolist()
        out = [[sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
               for i in range(self.rows)]
        return IntMatrix.from_rows(out, other.cols)

    def det(self) -> int:
        """Bareiss fraction-free determinant."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1


def smith_normal_form(a: IntMatrix) -> tuple[tuple, IntMatrix, IntMatrix]:
    """Return ``(d, U, V)`` with ``U @ a @ V`` diagonal with entries ``d``.

    ``d`` has length min(rows, cols), is non-negative, satisfies the
    divisibility chain and has its zeros last.
    """
    m, n = a.rows, a.cols
    A = a.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for s in range(min(m, n)):
        nz = [(abs(A[i][j]), i, j) for i in range(s, m) for j in range(s, n) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(s, i)
        swap_cols(s, j)
        while True:
            p = A[s][s]
            for i in range(s + 1, m):
                if A[i][s]:
                    add_row(i, s, -(A[i][s] // p))
            for j in range(s + 1, n):
                if A[s][j]:
                    add_col(j, s, -(A[s][j] // p))
            rest = [(abs(A[i][s]), i, s) for i in range(s + 1, m) if A[i][s]]
            rest += [(abs(A[s][j]), s, j) for j in range(s + 1, n) if A[s][j]]
            if rest:
                _, i, j = min(rest)
                swap_rows(s, i)
                swap_cols(s, j)
                continue
            bad = next(((i, j) for i in range(s + 1, m) for j in range(s + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(s, bad[0], 1)
        if A[s][s] < 0:
            A[s] = [-x for x in A[s]]
            U[s] = [-x for x in U[s]]
    d = tuple(A[i][i] for i in range(min(m, n)))
    return d, IntMatrix.from_rows(U, m), IntMatrix.from_rows(V, n)


def abelian_invariants(a: IntMatrix) -> tuple[int, tuple]:
    """Free rank and torsion invariants (>1) of the cokernel of ``a`` acting on rows."""
    d, _, _ = smith_normal_form(a)
    nonzero = [v for v in d if v]
    return a.cols - len(nonzero), tuple(v for v in nonzero if v > 1)


@dataclass(frozen=True)
class LaurentMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        ents = tuple(e if isinstance(e, LaurentPoly) else LaurentPoly({0: e}) for e in self.entries)
        object.__setattr__(self, "entries", ents)
        if len(ents) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows, cols=None) -> "LaurentMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(v for r in rows for v in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "LaurentMatrix":
        return cls(rows, cols, (LaurentPoly(),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        one, zero = LaurentPoly({0: 1}), LaurentPoly()
        return cls(n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def tolist(self) -> list[list[LaurentPoly]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        a, b = self.tolist(), other.tolist()
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = LaurentPoly()
                for k in range(self.cols):
                    if a[i][k] and b[k][j]:
                        acc = acc + a[i][k] * b[k][j]
                row.append(acc)
            out.append(row)
        return LaurentMatrix.from_rows(out, other.cols)

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return LaurentMatrix(self.rows, self.cols, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return LaurentMatrix(self.rows, self.cols, tuple(x - y for x, y in zip(self.entries, other.entries)))

    def scale(self, c: LaurentPoly) -> "LaurentMatrix":
        return LaurentMatrix(self.rows, self.cols, tuple(c * x for x in self.entries))

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def determinant(self) -> LaurentPoly:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        piv = _pid.diagonalize(_to_engine(self))
        if len(piv) < self.rows:
            return LaurentPoly()
        return reduce(lambda x, y: x * y, (_from_engine(p) for p in piv), LaurentPoly({0: 1}))


def _to_engine(a: LaurentMatrix) -> list:
    """Rows as integer polynomial lists (each row cleared by a unit)."""
    out = []
    for row in a.tolist():
        nz = [e for e in row if e]
        if not nz:
            out.append([[] for _ in row])
            continue
        lo = min(e.low for e in nz)
        den = reduce(lambda x, y: x * y // gcd(x, y),
                     (v.denominator for e in nz for v in e.coeffs.values()), 1)
        line = []
        for e in row:
            if not e:
                line.append([])
                continue
            coeffs = [0] * (e.high - lo + 1)
            for k, v in e.coeffs.items():
                coeffs[k - lo] = int(v * den)
            line.append(coeffs)
        out.append(line)
    return out


def _from_engine(p: list) -> LaurentPoly:
    return LaurentPoly.from_list(p)


def rank_over_fraction_field(a: LaurentMatrix) -> int:
    if a.rows == 0 or a.cols == 0:
        return 0
    return len(_pid.diagonalize(_to_engine(a)))


def module_order_of_cokernel_torsion(a: LaurentMatrix) -> tuple[int, LaurentPoly]:
    """Rank of ``a`` and the order of the torsion of its row cokernel."""
    if a.rows == 0 or a.cols == 0:
        return 0, LaurentPoly({0: 1})
    piv = _pid.diagonalize(_to_engine(a))
    prod = [1]
    for p in piv:
        prod = _pid.mul(prod, p)
    return len(piv), normalize_poly(_from_engine(prod))


def quotient_module_order(d1: LaurentMatrix, d2: LaurentMatrix) -> LaurentPoly:
    """Order of ker(d1)/im(d2) over Q[t^{+-1}], or 0 when it has a free part.

    Since im(d1) is free, C1/im(d2) splits as ker(d1)/im(d2) plus a free
    module of rank rank(d1); so the quotient is torsion exactly when
    ``cols - rank(d2) == rank(d1)``, and then its order is the product of
    the nonzero invariant factors of ``d2``.
    """
    if d2.cols != d1.rows:
        raise ValueError(f"d2 has {d2.cols} columns but d1 has {d1.rows} rows")
    if d2.rows and d1.cols and not (d2 @ d1).is_zero():
        raise CompositionNonzero("d2 @ d1 is not the zero matrix")
    r1 = rank_over_fraction_field(d1)
    r2, order = module_order_of_cokernel_torsion(d2)
    if d2.cols - r2 > r1:
        return LaurentPoly()
    return order
