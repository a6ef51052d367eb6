"""Free words, finite presentations, integer classes and braid ingestion.

Words are stored as tuples of syllables ``(generator_index, exponent)``.
The text format read by :func:`parse_presentation` looks like::

    # trefoil
    gens x y
    rel x y x Y X Y
    phi x:1 y:1

where an uppercase letter stands for the inverse of its lowercase generator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import InputError, LimitError, NonCocycleError, NotAKnotError, ParseError

MAX_GENERATORS = 64
MAX_RELATORS = 256
MAX_RELATOR_LENGTH = 10_000

_NAME = re.compile(r"[a-z][a-z0-9]*\Z")
_INVERSE_NAME = re.compile(r"[A-Z][A-Z0-9]*\Z")


def _merge(stack: list, gen: int, exp: int) -> None:
    if exp == 0:
        return
    if stack and stack[-1][0] == gen:
        e = stack[-1][1] + exp
        stack.pop()
        if e:
            stack.append((gen, e))
    else:
        stack.append((gen, exp))


def reduce_word(raw: Iterable[tuple[int, int]]) -> "FreeWord":
    """Freely reduce a sequence of ``(generator, exponent)`` pairs."""
    stack: list = []
    for gen, exp in raw:
        _merge(stack, int(gen), int(exp))
    return FreeWord(tuple(stack), _trusted=True)


@dataclass(frozen=True, init=False)
class FreeWord:
    """A reduced word in the free group on generators ``0, 1, 2, ...``."""

    letters: tuple

    def __init__(self, letters=(), _trusted=False):
        if not _trusted:
            letters = reduce_word(letters).letters
        object.__setattr__(self, "letters", tuple(letters))

    @classmethod
    def identity(cls) -> "FreeWord":
        return cls((), _trusted=True)

    @classmethod
    def gen(cls, index: int, exp: int = 1) -> "FreeWord":
        return cls(((index, exp),) if exp else (), _trusted=True)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if not self.letters:
            return other
        if not other.letters:
            return self
        stack = list(self.letters)
        for gen, exp in other.letters:
            _merge(stack, gen, exp)
        return FreeWord(tuple(stack), _trusted=True)

    def __pow__(self, n: int) -> "FreeWord":
        if n < 0:
            return self.inverse() ** (-n)
        out = FreeWord.identity()
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -e) for g, e in reversed(self.letters)), _trusted=True)

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def syllables(self) -> int:
        return len(self.letters)

    def expand(self) -> list[tuple[int, int]]:
        """The word as a list of single letters ``(generator, +1 or -1)``."""
        out = []
        for g, e in self.letters:
            s = 1 if e > 0 else -1
            out.extend([(g, s)] * abs(e))
        return out

    def generators(self) -> set[int]:
        return {g for g, _ in self.letters}

    def exponent_sum(self, gen: int) -> int:
        return sum(e for g, e in self.letters if g == gen)

    def cyclically_reduce(self) -> "FreeWord":
        letters = list(self.letters)
        while len(letters) >= 2 and letters[0][0] == letters[-1][0]:
            g, e = letters[0][0], letters[0][1] + letters[-1][1]
            letters = letters[1:-1]
            if e:
                if letters and letters[0][0] == g:
                    letters[0] = (g, letters[0][1] + e)
                    if letters[0][1] == 0:
                        letters.pop(0)
                else:
                    letters.insert(0, (g, e))
        return FreeWord(tuple(letters), _trusted=True)

    def substitute(self, images: Sequence["FreeWord"]) -> "FreeWord":
        """Apply the endomorphism sending generator ``i`` to ``images[i]``."""
        out = FreeWord.identity()
        for g, e in self.letters:
            out = out * (images[g] ** e)
        return out

    def shortlex_key(self):
        return (len(self),) + tuple((g, 0 if s > 0 else 1) for g, s in self.expand())

    def render(self, names: Sequence[str], sep: str = " ") -> str:
        parts = []
        for g, s in self.expand():
            parts.append(names[g] if s > 0 else names[g].upper())
        return sep.join(parts)


@dataclass(frozen=True)
class Presentation:
    """Finite presentation; relators are stored cyclically reduced."""

    generators: tuple
    relators: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        rels = tuple(FreeWord(r.letters, _trusted=True).cyclically_reduce() for r in self.relators)
        object.__setattr__(self, "relators", rels)
        if len(set(self.generators)) != len(self.generators):
            raise InputError("generator names must be distinct")
        for name in self.generators:
            if not name:
                raise InputError("generator names must be non-empty")
        n = len(self.generators)
        for i, r in enumerate(rels):
            for g, _ in r.letters:
                if not 0 <= g < n:
                    raise InputError(f"relator {i} uses generator index {g} out of range")

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    def check_limits(self) -> None:
        if self.num_generators > MAX_GENERATORS:
            raise LimitError(f"{self.num_generators} generators exceeds cap {MAX_GENERATORS}")
        if len(self.relators) > MAX_RELATORS:
            raise LimitError(f"{len(self.relators)} relators exceeds cap {MAX_RELATORS}")
        for i, r in enumerate(self.relators):
            if len(r) > MAX_RELATOR_LENGTH:
                raise LimitError(f"relator {i} has length {len(r)} > {MAX_RELATOR_LENGTH}")


@dataclass(frozen=True)
class PhiMap:
    """Homomorphism to the integers given by its values on generators."""

    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(v) for v in self.images))

    def __call__(self, word: FreeWord) -> int:
        return sum(self.images[g] * e for g, e in word.letters)

    def __len__(self) -> int:
        return len(self.images)

    @property
    def gcd(self) -> int:
        return reduce(gcd, self.images, 0)

    @property
    def primitive(self) -> bool:
        return self.gcd == 1

    @property
    def degenerate(self) -> bool:
        return all(v == 0 for v in self.images)


@dataclass(frozen=True)
class PhiCheck:
    primitive: bool
    gcd: int


def validate_phi(p: Presentation, phi: PhiMap) -> PhiCheck:
    """Check that ``phi`` kills every relator; report primitivity.

    Non-primitive classes are accepted and only flagged.
    """
    if len(phi) != p.num_generators:
        raise InputError(f"phi has {len(phi)} values for {p.num_generators} generators")
    for i, r in enumerate(p.relators):
        v = phi(r)
        if v != 0:
            raise NonCocycleError(i, v)
    return PhiCheck(primitive=phi.primitive, gcd=phi.gcd)


def parse_presentation(text: str) -> tuple[Presentation, PhiMap]:
    names = None
    index: dict[str, int] = {}
    relators = []
    phi_values = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = []
        for m in re.finditer(r"\S+", raw):
            tokens.append((m.group(), m.start() + 1))
        head, head_col = tokens[0]
        body = tokens[1:]
        if head == "gens":
            if names is not None:
                raise ParseError("duplicate 'gens' line", lineno, head_col)
            if not body:
                raise ParseError("'gens' needs at least one name", lineno, head_col)
            names = []
            for tok, col in body:
                if not _NAME.match(tok):
                    raise ParseError(f"invalid generator name {tok!r}", lineno, col)
                if tok in index:
                    raise ParseError(f"duplicate generator {tok!r}", lineno, col)
                index[tok] = len(names)
                names.append(tok)
        elif head == "rel":
            if names is None:
                raise ParseError("'rel' before 'gens'", lineno, head_col)
            if phi_values is not None:
                raise ParseError("'rel' after 'phi'", lineno, head_col)
            if not body:
                raise ParseError("empty relator", lineno, head_col)
            letters = []
            for tok, col in body:
                if _NAME.match(tok) and tok in index:
                    letters.append((index[tok], 1))
                elif _INVERSE_NAME.match(tok) and tok.lower() in index:
                    letters.append((index[tok.lower()], -1))
                else:
                    raise ParseError(f"unknown generator {tok!r} in relator", lineno, col)
            word = reduce_word(letters).cyclically_reduce()
            if not word:
                raise ParseError("relator is freely trivial", lineno, head_col)
            relators.append(word)
        elif head == "phi":
            if names is None:
                raise ParseError("'phi' before 'gens'", lineno, head_col)
            if phi_values is not None:
                raise ParseError("duplicate 'phi' line", lineno, head_col)
            phi_values = {}
            for tok, col in body:
                m = re.fullmatch(r"([^:]+):(-?[0-9]+)", tok)
                if not m:
                    raise ParseError(f"expected NAME:INT, got {tok!r}", lineno, col)
                name, value = m.group(1), int(m.group(2))
                if name not in index:
                    raise ParseError(f"unknown generator {name!r} in phi", lineno, col)
                if name in phi_values:
                    raise ParseError(f"duplicate phi value for {name!r}", lineno, col)
                phi_values[name] = value
            missing = [n for n in names if n not in phi_values]
            if missing:
                raise ParseError(f"phi has no value for {', '.join(missing)}", lineno, head_col)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, head_col)
    if names is None:
        raise ParseError("missing 'gens' line")
    if phi_values is None:
        raise ParseError("missing 'phi' line")
    pres = Presentation(tuple(names), tuple(relators))
    pres.check_limits()
    phi = PhiMap(tuple(phi_values[n] for n in names))
    validate_phi(pres, phi)
    return pres, phi


def format_presentation(p: Presentation, phi: PhiMap) -> str:
    lines = ["gens " + " ".join(p.generators)]
    for r in p.relators:
        lines.append("rel " + r.render(p.generators))
    lines.append("phi " + " ".join(f"{n}:{v}" for n, v in zip(p.generators, phi.images)))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(i) for i in self.letters))
        if self.strands < 2:
            raise InputError("a braid needs at least 2 strands")
        if not self.letters:
            raise InputError("braid word is empty")
        for i in self.letters:
            if i == 0 or abs(i) >= self.strands:
                raise InputError(f"braid letter {i} invalid for {self.strands} strands")

    def permutation(self) -> tuple:
        perm = list(range(self.strands))
        for i in self.letters:
            a = abs(i) - 1
            perm[a], perm[a + 1] = perm[a + 1], perm[a]
        return tuple(perm)

    def is_knot(self) -> bool:
        perm = self.permutation()
        seen, j = 0, 0
        while True:
            j = perm[j]
            seen += 1
            if j == 0:
                break
        return seen == self.strands


def parse_braid_spec(spec: str) -> BraidWord:
    """Parse ``"strands=3;word=1,-2,1,-2"``."""
    fields = {}
    for part in spec.split(";"):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ParseError(f"expected key=value in braid spec, got {part!r}")
        key, value = part.split("=", 1)
        fields[key.strip()] = value.strip()
    if set(fields) != {"strands", "word"}:
        raise ParseError("braid spec needs exactly 'strands' and 'word'")
    try:
        strands = int(fields["strands"])
        word = tuple(int(w) for w in fields["word"].split(",") if w.strip())
    except ValueError as exc:
        raise ParseError(f"bad integer in braid spec: {exc}") from None
    return BraidWord(strands, word)


def _artin(letter: int, k: int) -> list[FreeWord]:
    images = [FreeWord.gen(j) for j in range(k)]
    i = abs(letter) - 1
    xi, xj = FreeWord.gen(i), FreeWord.gen(i + 1)
    if letter > 0:
        images[i] = xi * xj * xi.inverse()
        images[i + 1] = xi
    else:
        images[i] = xj
        images[i + 1] = xj.inverse() * xi * xj
    return images


def braid_to_presentation(b: BraidWord) -> tuple[Presentation, PhiMap]:
    """Knot group of the braid closure, one generator per strand.

    Relators are ``beta(x_j) x_j^-1`` for all strands but the last, where
    ``beta`` is the Artin action of the braid; every generator is a meridian.
    """
    if not b.is_knot():
        raise NotAKnotError(f"closure of braid {list(b.letters)} has more than one component")
    k = b.strands
    actions = [_artin(i, k) for i in b.letters]
    relators = []
    for j in range(k - 1):
        w = FreeWord.gen(j)
        for images in reversed(actions):
            w = w.substitute(images)
        relators.append(w * FreeWord.gen(j, -1))
    pres = Presentation(tuple(f"x{j + 1}" for j in range(k)), tuple(relators))
    pres.check_limits()
    phi = PhiMap((1,) * k)
    validate_phi(pres, phi)
    return pres, phi
