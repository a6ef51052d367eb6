"""Reidemeister-Schreier presentations of finite-index subgroups, plus Tietze moves."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from functools import reduce
from math import gcd
from typing import NamedTuple

from .exact import IntMatrix, abelian_invariants
from .presentation import FreeWord, PhiMap, Presentation, reduce_word
from .quotients import CosetTable

#: syllable cap on relators produced by generator elimination
MAX_TIETZE_SYLLABLES = 10_000


@dataclass(frozen=True)
class SubgroupPresentation:
    presentation: Presentation
    inclusion: tuple            # ambient word for each subgroup generator
    ambient_index: int
    restricted_phi: PhiMap | None = None
    divisibility: int | None = None
    raw_generator_count: int = 0
    exhausted: bool = False     # Tietze stopped on its pass budget

    @property
    def num_generators(self) -> int:
        return self.presentation.num_generators


class RestrictedPhi(NamedTuple):
    phi: PhiMap
    d: int
    rescaled: PhiMap | None


def schreier_transversal(table: CosetTable, num_generators: int):
    """Breadth-first transversal words and the set of tree edges ``(coset, gen)``."""
    reps: list = [None] * table.index
    reps[0] = FreeWord.identity()
    tree = set()
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for g in range(num_generators):
            for sign in (1, -1):
                d = table.act(c, g, sign)
                if reps[d] is None:
                    reps[d] = reps[c] * FreeWord.gen(g, sign)
                    tree.add((c, g) if sign > 0 else (d, g))
                    queue.append(d)
    if any(r is None for r in reps):
        raise ValueError("coset table is not transitive")
    return reps, tree


def subgroup_presentation(p: Presentation, table: CosetTable, phi: PhiMap | None = None) -> SubgroupPresentation:
    """Presentation of the stabilizer of coset 0.

    Generators are the nontrivial Schreier generators ``rep(c) x rep(c.x)^-1``
    (coset-major, generator-minor); relators are the rewrites of every
    relator read from every coset (coset-major, relator-minor).
    """
    g = p.num_generators
    reps, tree = schreier_transversal(table, g)
    label: dict = {}
    inclusion = []
    for c in range(table.index):
        for x in range(g):
            if (c, x) in tree:
                continue
            label[(c, x)] = len(inclusion)
            d = table.act(c, x)
            inclusion.append(reps[c] * FreeWord.gen(x) * reps[d].inverse())

    relators = []
    for c in range(table.index):
        for r in p.relators:
            relators.append(_rewrite(r, c, table, label))
    names = tuple(f"s{i + 1}" for i in range(len(inclusion)))
    sub = Presentation(names, tuple(relators))
    sp = SubgroupPresentation(sub, tuple(inclusion), table.index, raw_generator_count=len(inclusion))
    if phi is not None:
        rp = restrict_phi(sp, phi)
        sp = replace(sp, restricted_phi=rp.phi, divisibility=rp.d)
    return sp


def _rewrite(r: FreeWord, coset: int, table: CosetTable, label: dict) -> FreeWord:
    out = []
    c = coset
    for x, e in r.letters:
        if e > 0:
            for _ in range(e):
                s = label.get((c, x))
                if s is not None:
                    out.append((s, 1))
                c = table.act(c, x, 1)
        else:
            for _ in range(-e):
                c = table.act(c, x, -1)
                s = label.get((c, x))
                if s is not None:
                    out.append((s, -1))
    return reduce_word(out)


def restrict_phi(sp: SubgroupPresentation, phi: PhiMap) -> RestrictedPhi:
    images = tuple(phi(w) for w in sp.inclusion)
    d = reduce(gcd, images, 0)
    rescaled = PhiMap(tuple(v // d for v in images)) if d else None
    return RestrictedPhi(PhiMap(images), d, rescaled)


def _cyclic_key(w: FreeWord):
    best = None
    for word in (w, w.inverse()):
        s = word.letters
        for i in range(len(s)):
            rot = s[i:] + s[:i]
            if best is None or rot < best:
                best = rot
    return best


def _clean(relators: list[FreeWord]) -> list[FreeWord]:
    out, seen = [], set()
    for r in relators:
        r = r.cyclically_reduce()
        if not r:
            continue
        key = _cyclic_key(r)
        if key in seen:
            continue
        seen.add(key)
        out.append(r)
    return out


def _candidates(relators: list[FreeWord]):
    found = []
    for ri, r in enumerate(relators):
        counts: dict = {}
        for g, e in r.letters:
            c = counts.setdefault(g, [0, 0])
            c[0] += 1
            c[1] = e
        for g, (n, e) in counts.items():
            if n == 1 and abs(e) == 1:
                found.append((r.syllables(), ri, g))
    found.sort()
    return found


def _solve(r: FreeWord, g: int) -> FreeWord:
    """Word w with g = w, given that g occurs exactly once in r with exponent +-1."""
    s = r.letters
    i = next(k for k, (x, _) in enumerate(s) if x == g)
    rot = s[i:] + s[:i]
    rest = FreeWord(rot[1:])
    return rest.inverse() if rot[0][1] > 0 else rest


def tietze_simplify(sp: SubgroupPresentation, budget: int = 10_000) -> SubgroupPresentation:
    """Delete trivial/duplicate relators and eliminate generators occurring once.

    Each generator elimination spends one unit of ``budget``; the result is
    flagged ``exhausted`` when the budget runs out before a fixpoint.
    """
    pres = sp.presentation
    alive = list(range(pres.num_generators))
    relators = _clean(list(pres.relators))
    passes = 0
    exhausted = False
    while True:
        cands = _candidates(relators)
        if not cands:
            break
        if passes >= budget:
            exhausted = True
            break
        done = False
        for _, ri, g in cands:
            solution = _solve(relators[ri], g)
            images = [FreeWord.gen(i) for i in range(pres.num_generators)]
            images[g] = solution
            new = []
            for k, r in enumerate(relators):
                if k == ri:
                    continue
                new.append(r.substitute(images) if g in r.generators() else r)
            if any(r.syllables() > MAX_TIETZE_SYLLABLES for r in new):
                continue
            relators = _clean(new)
            alive.remove(g)
            done = True
            break
        if not done:
            break
        passes += 1

    renumber = {old: new for new, old in enumerate(alive)}
    rels = tuple(FreeWord(tuple((renumber[x], e) for x, e in r.letters)) for r in relators)
    names = tuple(pres.generators[i] for i in alive)
    out = Presentation(names, rels)
    phi = None
    if sp.restricted_phi is not None:
        phi = PhiMap(tuple(sp.restricted_phi.images[i] for i in alive))
    return replace(
        sp,
        presentation=out,
        inclusion=tuple(sp.inclusion[i] for i in alive),
        restricted_phi=phi,
        exhausted=exhausted or sp.exhausted,
    )


def relation_matrix(p: Presentation) -> IntMatrix:
    """Exponent-sum matrix: one row per relator, one column per generator."""
    rows = [[r.exponent_sum(j) for j in range(p.num_generators)] for r in p.relators]
    return IntMatrix.from_rows(rows, p.num_generators)


def abelianization(p: Presentation) -> tuple[int, tuple]:
    """``(b1, torsion invariants)`` of the abelianized presentation."""
    if not p.relators:
        return p.num_generators, ()
    return abelian_invariants(relation_matrix(p))
