"""Homomorphisms onto finite permutation groups and coset tables of covers.

Permutations compose right-to-left, ``(p * q)(i) == p(q(i))``, and a word
is evaluated as the product of its letters' images in reading order.
Coset tables are right actions: coset ``c`` moved by the word ``u v`` is
``(c . u) . v``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .errors import BudgetExhausted, LimitError, NotTransitiveError, RelatorViolation
from .presentation import FreeWord, PhiMap, Presentation

MAX_DEGREE = 7


@dataclass(frozen=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a permutation")

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return _trusted(tuple(range(k)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        a = self.images
        return _trusted(tuple(a[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return _trusted(tuple(inv))

    def __pow__(self, n: int) -> "Permutation":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = Permutation.identity(self.degree)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        out = 1
        for length in self.cycle_type():
            out = out * length // gcd(out, length)
        return out

    def cycle_type(self) -> tuple:
        seen = [False] * self.degree
        lengths = []
        for i in range(self.degree):
            if not seen[i]:
                n, j = 0, i
                while not seen[j]:
                    seen[j] = True
                    j = self.images[j]
                    n += 1
                lengths.append(n)
        return tuple(sorted(lengths, reverse=True))

    def fixed_points(self) -> int:
        return sum(1 for i, j in enumerate(self.images) if i == j)


def _trusted(images: tuple) -> Permutation:
    # skips validation for results of composition and inversion
    p = object.__new__(Permutation)
    object.__setattr__(p, "images", images)
    return p


def _kills(word: FreeWord, images: list, inverses: list, ident: tuple) -> bool:
    """Whether ``word`` evaluates to the identity on tuple images."""
    out = ident
    for g, e in word.letters:
        x = images[g] if e > 0 else inverses[g]
        for _ in range(abs(e)):
            out = tuple(out[j] for j in x)
    return out == ident


def evaluate_word(word: FreeWord, images: Sequence[Permutation], degree: int) -> Permutation:
    out = Permutation.identity(degree)
    for g, e in word.letters:
        out = out * (images[g] ** e)
    return out


def _closure(gens: Sequence[Permutation], degree: int) -> tuple:
    ident = Permutation.identity(degree)
    elements = [ident]
    seen = {ident.images: 0}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for x in gens:
            h = g * x
            if h.images not in seen:
                seen[h.images] = len(elements)
                elements.append(h)
                queue.append(h)
    return tuple(elements)


@dataclass(frozen=True)
class FiniteQuotientHom:
    """Generator images in S_k; the target group is taken to be the image."""

    degree: int
    images: tuple
    image_order: int
    image_elements: tuple

    @classmethod
    def from_images(cls, p: Presentation, images: Sequence) -> "FiniteQuotientHom":
        perms = tuple(x if isinstance(x, Permutation) else Permutation(tuple(x)) for x in images)
        if len(perms) != p.num_generators:
            raise ValueError("need one image per generator")
        degree = perms[0].degree if perms else 1
        for i, r in enumerate(p.relators):
            if not evaluate_word(r, perms, degree).is_identity():
                raise RelatorViolation(f"relator {i} does not map to the identity")
        elements = _closure(perms, degree)
        return cls(degree, perms, len(elements), elements)

    def __call__(self, word: FreeWord) -> Permutation:
        return evaluate_word(word, self.images, self.degree)

    def sort_key(self):
        return (self.image_order, tuple(x.images for x in self.images))

    def is_trivial(self) -> bool:
        return self.image_order == 1

    def element_index(self) -> dict:
        return {g.images: i for i, g in enumerate(self.image_elements)}

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "images": [list(x.images) for x in self.images],
            "image_order": self.image_order,
        }


@dataclass(frozen=True)
class HomSearch:
    homs: tuple
    nodes: int


def _class_representatives(k: int) -> list[Permutation]:
    reps: dict = {}
    for images in itertools.permutations(range(k)):
        p = Permutation(images)
        reps.setdefault(p.cycle_type(), p)
    return sorted(reps.values(), key=lambda p: p.images)


def _conjugate(c: Permutation, c_inv: Permutation, x: Permutation) -> tuple:
    return (c * x * c_inv).images


def search_homs(p: Presentation, k: int, budget: int) -> HomSearch:
    """Backtracking search for homomorphisms p -> S_k up to conjugacy.

    Raises :class:`BudgetExhausted` (with the sorted partial list) when more
    than ``budget`` search nodes would be visited.
    """
    if k < 1:
        raise ValueError("degree must be positive")
    if k > MAX_DEGREE:
        raise LimitError(f"symmetric degree {k} exceeds cap {MAX_DEGREE}")
    if budget <= 0:
        raise BudgetExhausted("search budget must be positive", (), 0)
    g = p.num_generators
    if g == 0:
        return HomSearch((FiniteQuotientHom.from_images(p, ()),), 0)

    all_perms = [Permutation(x) for x in itertools.permutations(range(k))]
    inverse_of = {x.images: x.inverse().images for x in all_perms}
    ident = tuple(range(k))
    tup, inv = [], []

    def satisfied(level):
        return all(_kills(r, tup, inv, ident) for r in checks[level])

    # relators become checkable once their largest generator is assigned
    checks: list[list[FreeWord]] = [[] for _ in range(g)]
    for r in p.relators:
        if r:
            checks[max(r.generators())].append(r)

    found: list[FiniteQuotientHom] = []
    nodes = 0

    def finish():
        found.sort(key=FiniteQuotientHom.sort_key)
        return tuple(found)

    for first in _class_representatives(k):
        centralizer = [(c, c.inverse()) for c in all_perms if c * first == first * c]
        assignment = [first]
        tup[:] = [first.images]
        inv[:] = [inverse_of[first.images]]
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(f"hom search exhausted {budget} nodes at degree {k}", finish(), nodes - 1)
        if not satisfied(0):
            continue
        stack = [iter(all_perms)] if g > 1 else []
        if g == 1:
            _accept(p, assignment, centralizer, found)
            continue
        while stack:
            try:
                cand = next(stack[-1])
            except StopIteration:
                stack.pop()
                assignment.pop()
                tup.pop()
                inv.pop()
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExhausted(f"hom search exhausted {budget} nodes at degree {k}", finish(), nodes - 1)
            assignment.append(cand)
            tup.append(cand.images)
            inv.append(inverse_of[cand.images])
            level = len(assignment) - 1
            if satisfied(level):
                if level == g - 1:
                    _accept(p, assignment, centralizer, found)
                else:
                    stack.append(iter(all_perms))
                    continue
            assignment.pop()
            tup.pop()
            inv.pop()
    return HomSearch(finish(), nodes)


def _accept(p, assignment, centralizer, found):
    key = tuple(x.images for x in assignment)
    for c, c_inv in centralizer:
        if tuple(_conjugate(c, c_inv, x) for x in assignment) < key:
            return
    found.append(FiniteQuotientHom.from_images(p, list(assignment)))


def enumerate_homs(p: Presentation, k: int, budget: int) -> list[FiniteQuotientHom]:
    return list(search_homs(p, k, budget).homs)


def canonical_form(images: Sequence[Permutation]) -> tuple:
    """Lexicographically least tuple of one-line images over all conjugations."""
    k = images[0].degree
    best = None
    for c in itertools.permutations(range(k)):
        c = Permutation(c)
        c_inv = c.inverse()
        t = tuple(_conjugate(c, c_inv, x) for x in images)
        if best is None or t < best:
            best = t
    return best


@dataclass(frozen=True)
class CosetTable:
    """Right action of the generators on cosets ``0 .. index-1`` (base point 0)."""

    index: int
    action: tuple
    inverse_action: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "action", tuple(self.action))
        object.__setattr__(self, "inverse_action", tuple(p.inverse() for p in self.action))

    def act(self, coset: int, gen: int, sign: int = 1) -> int:
        if sign > 0:
            return self.action[gen].images[coset]
        return self.inverse_action[gen].images[coset]

    def act_word(self, coset: int, word: FreeWord) -> int:
        for g, e in word.letters:
            s = 1 if e > 0 else -1
            for _ in range(abs(e)):
                coset = self.act(coset, g, s)
        return coset

    def is_transitive(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            c = queue.popleft()
            for perm, inv in zip(self.action, self.inverse_action):
                for d in (perm(c), inv(c)):
                    if d not in seen:
                        seen.add(d)
                        queue.append(d)
        return len(seen) == self.index

    def relators_trivial(self, p: Presentation) -> bool:
        return all(self.act_word(c, r) == c for r in p.relators for c in range(self.index))


def cyclic_cover_table(p: Presentation, phi: PhiMap, n: int) -> CosetTable:
    """Cosets of ker(phi mod n); generator g acts by adding phi(g)."""
    if n < 1:
        raise ValueError("cover degree must be positive")
    if gcd(phi.gcd, n) != 1:
        raise NotTransitiveError(
            f"phi has image {gcd(phi.gcd, n)}Z/{n}Z mod {n}; the cyclic cover is disconnected")
    action = tuple(Permutation(tuple((i + v) % n for i in range(n))) for v in phi.images)
    return CosetTable(n, action)


def regular_cover_table(hom: FiniteQuotientHom) -> CosetTable:
    """Cosets of ker(hom) identified with image elements; g acts by right multiplication."""
    index = hom.element_index()
    action = []
    for x in hom.images:
        action.append(Permutation(tuple(index[(g * x).images] for g in hom.image_elements)))
    return CosetTable(hom.image_order, tuple(action))


def kernel_key(hom: FiniteQuotientHom) -> tuple:
    """Fingerprint of ker(hom): homs with equal keys define the same cover."""
    return tuple(perm.images for perm in regular_cover_table(hom).action)
