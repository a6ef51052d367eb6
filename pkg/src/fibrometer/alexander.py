"""Untwisted and twisted Alexander polynomials of presented groups.

For a representation rho of the group on Q[t^{+-1}]^N the chain complex of
the presentation 2-complex is::

    C2 = R^(N * #relators) --d2--> C1 = R^(N * #generators) --d1--> C0 = R^N

with ``d2`` the blocks rho(dr/dx_j) of Fox derivatives and ``d1`` the
stacked blocks rho(x_j) - I, in the row-vector convention of
:mod:`fibrometer.exact.matrix`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .errors import RelatorViolation
from .exact import (
    LaurentMatrix,
    LaurentPoly,
    is_monic,
    normalize_poly,
    quotient_module_order,
    rank_over_fraction_field,
)
from .exact.matrix import module_order_of_cokernel_torsion
from .fox import GroupRingElem, fox_derivative
from .presentation import FreeWord, PhiMap, Presentation
from .quotients import FiniteQuotientHom, Permutation, cyclic_cover_table, regular_cover_table
from .schreier import SubgroupPresentation, abelianization, subgroup_presentation, tietze_simplify


def _monomial_matrix(perm: tuple, exp: int) -> LaurentMatrix:
    n = len(perm)
    rows = [[LaurentPoly() for _ in range(n)] for _ in range(n)]
    for j, i in enumerate(perm):
        rows[i][j] = LaurentPoly.monomial(exp)
    return LaurentMatrix.from_rows(rows, n)


def _mono_mul(a, b):
    pa, ea = a
    pb, eb = b
    return tuple(pa[j] for j in pb), ea + eb


def _mono_pow(m, e):
    perm, x = m
    return (Permutation(perm) ** e).images, x * e


@dataclass(frozen=True)
class Representation:
    """Generator images in GL(N, Q[t^{+-1}]).

    ``monomial`` holds, when available, each image as ``(perm, exponent)``:
    the matrix t^exponent times the permutation matrix with a 1 in row
    ``perm[j]`` of column ``j``.
    """

    block_size: int
    images: tuple
    provenance: str = "untwisted"
    monomial: tuple | None = None
    hom: FiniteQuotientHom | None = None

    def evaluate_word(self, w: FreeWord) -> LaurentMatrix:
        if self.monomial is not None:
            m = (tuple(range(self.block_size)), 0)
            for g, e in w.letters:
                m = _mono_mul(m, _mono_pow(self.monomial[g], e))
            return _monomial_matrix(*m)
        out = LaurentMatrix.identity(self.block_size)
        for g, e in w.letters:
            base = self.images[g] if e > 0 else _inverse(self.images[g])
            for _ in range(abs(e)):
                out = out @ base
        return out

    def check(self, p: Presentation) -> None:
        ident = LaurentMatrix.identity(self.block_size)
        for i, r in enumerate(p.relators):
            if self.evaluate_word(r) != ident:
                raise RelatorViolation(f"relator {i} is not sent to the identity")

    @property
    def degenerate(self) -> bool:
        """All generator images constant in t (phi vanishes on generators)."""
        if self.monomial is not None:
            return all(e == 0 for _, e in self.monomial)
        return all(all(x.is_zero() or (x.low == x.high == 0) for x in m.entries) for m in self.images)


def _inverse(m: LaurentMatrix) -> LaurentMatrix:
    # only monomial matrices arise in general-path use
    n = m.rows
    rows = [[LaurentPoly() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            x = m[i, j]
            if x:
                if not x.is_unit():
                    raise ValueError("general matrix inversion is not supported")
                rows[j][i] = x ** -1
    out = LaurentMatrix.from_rows(rows, n)
    if out @ m != LaurentMatrix.identity(n):
        raise ValueError("general matrix inversion is not supported")
    return out


def untwisted_rep(p: Presentation, phi: PhiMap) -> Representation:
    mono = tuple(((0,), v) for v in phi.images)
    images = tuple(LaurentMatrix.from_rows([[LaurentPoly.monomial(v)]]) for v in phi.images)
    return Representation(1, images, "untwisted", mono)


def regular_rep(p: Presentation, hom: FiniteQuotientHom, phi: PhiMap) -> Representation:
    """g acts on Q[G][t^{+-1}] by t^phi(g) times left multiplication by hom(g)."""
    index = hom.element_index()
    mono = []
    for x, v in zip(hom.images, phi.images):
        perm = tuple(index[(x * g).images] for g in hom.image_elements)
        mono.append((perm, v))
    mono = tuple(mono)
    images = tuple(_monomial_matrix(perm, v) for perm, v in mono)
    rep = Representation(hom.image_order, images, "regular", mono, hom)
    for i, r in enumerate(p.relators):
        m = (tuple(range(rep.block_size)), 0)
        for g, e in r.letters:
            m = _mono_mul(m, _mono_pow(mono[g], e))
        if m != (tuple(range(rep.block_size)), 0):
            raise RelatorViolation(f"relator {i} is not sent to the identity")
    return rep


def evaluate_ring_element(a: GroupRingElem, rep: Representation) -> LaurentMatrix:
    out = LaurentMatrix.zeros(rep.block_size, rep.block_size)
    for w, c in a.items():
        out = out + rep.evaluate_word(w).scale(LaurentPoly({0: c}))
    return out


def _assemble(blocks: dict, row_blocks: int, col_blocks: int, n: int) -> LaurentMatrix:
    rows = [[LaurentPoly() for _ in range(col_blocks * n)] for _ in range(row_blocks * n)]
    for (i, j), coeffs in blocks.items():
        if any(coeffs.values()):
            rows[i][j] = LaurentPoly(coeffs)
    return LaurentMatrix.from_rows(rows, col_blocks * n)


def fox_matrix(p: Presentation, rep: Representation) -> LaurentMatrix:
    """The boundary d2: block (r, j) is rep(d r / d x_j)."""
    n = rep.block_size
    g = p.num_generators
    if rep.monomial is None:
        rows = []
        for r in p.relators:
            blocks = [evaluate_ring_element(fox_derivative(r, j), rep).tolist() for j in range(g)]
            for i in range(n):
                rows.append([x for b in blocks for x in b[i]])
        return LaurentMatrix.from_rows(rows, g * n)

    acc: dict = defaultdict(lambda: defaultdict(int))
    ident = tuple(range(n))
    for ri, r in enumerate(p.relators):
        prefix = (ident, 0)
        for gen, e in r.letters:
            gperm, gexp = rep.monomial[gen]
            step = (gperm, gexp) if e > 0 else _mono_pow(rep.monomial[gen], -1)
            terms: dict = defaultdict(int)
            if e > 0:
                cur, sign, count = prefix, 1, e
            else:
                cur, sign, count = _mono_mul(prefix, step), -1, -e
            if step[1] == 0:
                # t-degree constant along the power: fold by the order of the permutation
                order = Permutation(step[0]).order()
                full, extra = divmod(count, order)
                for i in range(min(count, order)):
                    terms[cur] += sign * (full + (1 if i < extra else 0))
                    cur = _mono_mul(cur, step)
            else:
                for _ in range(count):
                    terms[cur] += sign
                    cur = _mono_mul(cur, step)
            for (perm, x), c in terms.items():
                if not c:
                    continue
                for j, i in enumerate(perm):
                    acc[(ri * n + i, gen * n + j)][x] += c
            prefix = _mono_mul(prefix, _mono_pow(rep.monomial[gen], e))
    return _assemble(acc, len(p.relators), g, n)


def boundary_d1(p: Presentation, rep: Representation) -> LaurentMatrix:
    n = rep.block_size
    ident = LaurentMatrix.identity(n)
    rows = []
    for m in rep.images:
        rows.extend((m - ident).tolist())
    return LaurentMatrix.from_rows(rows, n)


@dataclass(frozen=True)
class AlexanderResult:
    polynomial: LaurentPoly
    route: str
    degree_span: int
    monic: bool
    zero: bool
    divisibility: int | None = None
    substituted: LaurentPoly | None = None
    degenerate: bool = False

    @classmethod
    def build(cls, poly: LaurentPoly, route: str, **kw) -> "AlexanderResult":
        poly = normalize_poly(poly)
        return cls(poly, route, poly.spread() if poly else -1, is_monic(poly), poly.is_zero(), **kw)


def alexander_polynomial(p: Presentation, rep: Representation) -> AlexanderResult:
    """Order of H1 of the presentation complex with coefficients twisted by ``rep``."""
    d2 = fox_matrix(p, rep)
    d1 = boundary_d1(p, rep)
    poly = quotient_module_order(d1, d2)
    return AlexanderResult.build(poly, "fox-direct", degenerate=rep.degenerate)


def rank_gap(p: Presentation, rep: Representation) -> int:
    """(#cols - rank d2) - rank d1: positive exactly when H1 has a free summand."""
    d2 = fox_matrix(p, rep)
    d1 = boundary_d1(p, rep)
    r2 = rank_over_fraction_field(d2) if d2.rows else 0
    return d2.cols - r2 - rank_over_fraction_field(d1)


def cover_presentation(p: Presentation, hom: FiniteQuotientHom, phi: PhiMap) -> SubgroupPresentation:
    """Tietze-simplified presentation of ker(hom) carrying the pulled-back phi."""
    sp = subgroup_presentation(p, regular_cover_table(hom), phi)
    return tietze_simplify(sp)


def twisted_via_cover(p: Presentation, hom: FiniteQuotientHom, phi: PhiMap) -> AlexanderResult:
    """Twisted polynomial as the untwisted polynomial of the finite cover.

    The pulled-back class is not rescaled; ``substituted`` holds the
    polynomial in t^(1/d) when every exponent is divisible by d.
    """
    sp = cover_presentation(p, hom, phi)
    rep = untwisted_rep(sp.presentation, sp.restricted_phi)
    d2 = fox_matrix(sp.presentation, rep)
    d1 = boundary_d1(sp.presentation, rep)
    raw = normalize_poly(quotient_module_order(d1, d2))
    d = sp.divisibility
    sub = raw.root_substitute(d) if d else None
    if sub is not None:
        sub = normalize_poly(sub)
    return AlexanderResult.build(raw, "shapiro-cover", divisibility=d, substituted=sub,
                                 degenerate=rep.degenerate)


def twisted_via_fox(p: Presentation, hom: FiniteQuotientHom, phi: PhiMap) -> AlexanderResult:
    return alexander_polynomial(p, regular_rep(p, hom, phi))


def b1_cyclic(p: Presentation, phi: PhiMap, n: int) -> int:
    """First Betti number of the n-fold cyclic cover group pi_n."""
    sp = subgroup_presentation(p, cyclic_cover_table(p, phi, n), phi)
    b1, _ = abelianization(sp.presentation)
    return b1


def torsion_order(d2: LaurentMatrix) -> LaurentPoly:
    return module_order_of_cokernel_torsion(d2)[1]
