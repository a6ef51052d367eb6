"""Rank profiles of cyclic covers and the fibering obstruction search."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .alexander import alexander_polynomial, b1_cyclic, twisted_via_cover, untwisted_rep
from .errors import BudgetExhausted, FibrometerError, LimitError, NotTransitiveError, PreconditionError
from .exact import LaurentPoly
from .presentation import PhiMap, Presentation, validate_phi
from .quotients import MAX_DEGREE, FiniteQuotientHom, cyclic_cover_table, kernel_key, search_homs
from .schreier import abelianization, subgroup_presentation, tietze_simplify

log = logging.getLogger(__name__)

MAX_COVER_N = 24

NOT_FIBERED = "NOT_FIBERED"
FIBERED_EVIDENCE = "FIBERED_EVIDENCE"
UNKNOWN = "UNKNOWN"

CAVEAT_GROUP_HOMOLOGY = (
    "homology is computed for the presentation 2-complex (group homology); "
    "it equals H1 of the manifold only for aspherical inputs")
CAVEAT_RELATIVE = "obstruction relative to 3-manifold hypotheses"
CAVEAT_NON_CONCLUSIVE = (
    "FIBERED_EVIDENCE is not a proof: covers and quotients were only tested within the stated limits")


@dataclass(frozen=True)
class ProfileEntry:
    n: int
    rank_upper: int
    b1_lower: int
    torsion: tuple


@dataclass(frozen=True)
class RankProfile:
    entries: tuple
    gradient_estimate: Fraction | None
    schreier_cap: Fraction | None
    skipped: tuple = ()

    @property
    def lower_gradient(self) -> tuple:
        """Certified lower bounds b1(pi_n)/n <= rk(pi_n)/n."""
        return tuple(Fraction(e.b1_lower, e.n) for e in self.entries)

    def bounded(self) -> bool:
        """No growth of rank-upper between the lower and upper half of tested n."""
        if len(self.entries) < 2:
            return False
        half = len(self.entries) // 2
        lower = max(e.rank_upper for e in self.entries[:half])
        upper = max(e.rank_upper for e in self.entries[half:])
        return upper <= lower


@dataclass(frozen=True)
class SearchLimits:
    max_degree: int = 4
    max_image_order: int = 24
    budget: int = 10 ** 6
    max_n: int = 8


@dataclass(frozen=True)
class Certificate:
    route: str                  # "untwisted" or "twisted"
    polynomial: LaurentPoly
    reason: str                 # "zero" or "non-monic"
    witness_hom: FiniteQuotientHom | None = None


@dataclass(frozen=True)
class Coverage:
    max_degree: int = 0
    max_image_order: int = 0
    budget_spent: int = 0


@dataclass(frozen=True)
class Verdict:
    status: str
    certificate: Certificate | None
    coverage: Coverage
    profile: RankProfile
    caveats: tuple = field(default=())


def rank_profile(p: Presentation, phi: PhiMap, max_n: int) -> RankProfile:
    validate_phi(p, phi)
    if max_n > MAX_COVER_N:
        raise LimitError(f"cover degree {max_n} exceeds cap {MAX_COVER_N}")
    g = p.num_generators
    entries, skipped = [], []
    for n in range(1, max_n + 1):
        try:
            table = cyclic_cover_table(p, phi, n)
        except NotTransitiveError:
            skipped.append(n)
            continue
        sp = tietze_simplify(subgroup_presentation(p, table, phi))
        b1, torsion = abelianization(sp.presentation)
        rank = sp.num_generators
        if rank > n * (g - 1) + 1:
            raise AssertionError(f"rank bound {rank} breaks the Schreier bound at n={n}")
        entries.append(ProfileEntry(n, rank, b1, tuple(torsion)))
    if entries:
        grad = min(Fraction(e.rank_upper, e.n) for e in entries)
        cap = max(Fraction(e.rank_upper, e.n * (g - 1) + 1) for e in entries)
    else:
        grad = cap = None
    return RankProfile(tuple(entries), grad, cap, tuple(skipped))


def betti_growth_check(p: Presentation, phi: PhiMap, max_n: int) -> bool:
    """Confirm b1(pi_n) >= n for n <= max_n when the Alexander polynomial vanishes."""
    delta = alexander_polynomial(p, untwisted_rep(p, phi))
    if not delta.zero:
        raise PreconditionError(f"Alexander polynomial is {delta.polynomial}, not 0")
    for n in range(1, max_n + 1):
        b1 = b1_cyclic(p, phi, n)
        if b1 < n:
            raise AssertionError(f"b1(pi_{n}) = {b1} < {n} although the Alexander polynomial is 0")
    return True


def fibering_search(p: Presentation, phi: PhiMap, limits: SearchLimits = SearchLimits(),
                    aspherical: bool = False) -> Verdict:
    check = validate_phi(p, phi)
    if limits.max_degree > MAX_DEGREE:
        raise LimitError(f"symmetric degree {limits.max_degree} exceeds cap {MAX_DEGREE}")
    if limits.max_n > MAX_COVER_N:
        raise LimitError(f"cover degree {limits.max_n} exceeds cap {MAX_COVER_N}")
    caveats = []
    if not aspherical:
        caveats.append(CAVEAT_GROUP_HOMOLOGY)
    if phi.degenerate:
        caveats.append("phi vanishes on every generator: the input is not a directed group")
    elif not check.primitive:
        caveats.append(f"phi is not primitive (gcd {check.gcd}); covers use phi as given")

    profile = rank_profile(p, phi, limits.max_n) if limits.max_n > 0 else RankProfile((), None, None)
    if profile.skipped:
        caveats.append("cyclic covers skipped (not transitive) for n = "
                       + ", ".join(map(str, profile.skipped)))

    def obstruction(cert, coverage):
        extra = [] if aspherical or cert.reason == "zero" else [CAVEAT_RELATIVE]
        return Verdict(NOT_FIBERED, cert, coverage, profile, tuple(caveats + extra))

    delta = alexander_polynomial(p, untwisted_rep(p, phi))
    if delta.zero or not delta.monic:
        reason = "zero" if delta.zero else "non-monic"
        return obstruction(Certificate("untwisted", delta.polynomial, reason), Coverage())

    spent, completed, exhausted = 0, 0, False
    found: dict = {}
    for k in range(1, limits.max_degree + 1):
        remaining = limits.budget - spent
        if remaining <= 0:
            exhausted = True
            break
        try:
            result = search_homs(p, k, remaining)
            homs, nodes = result.homs, result.nodes
        except BudgetExhausted as exc:
            homs, nodes, exhausted = exc.partial, exc.nodes, True
        spent += nodes
        for hom in homs:
            if hom.is_trivial() or hom.image_order > limits.max_image_order:
                continue
            key = kernel_key(hom)
            prev = found.get(key)
            if prev is None or (hom.image_order, hom.degree, hom.sort_key()) < (
                    prev.image_order, prev.degree, prev.sort_key()):
                found[key] = hom
        if exhausted:
            break
        completed = k
    coverage = Coverage(completed, limits.max_image_order if completed else 0, spent)

    skipped_homs = 0
    order = sorted(found.values(), key=lambda h: (h.image_order, h.degree, h.sort_key()))
    for hom in order:
        try:
            res = twisted_via_cover(p, hom, phi)
        except LimitError as exc:
            log.warning("skipping hom %s: %s", hom.to_json(), exc)
            skipped_homs += 1
            continue
        if res.zero or not res.monic:
            reason = "zero" if res.zero else "non-monic"
            return obstruction(Certificate("twisted", res.polynomial, reason, hom), coverage)
    if skipped_homs:
        caveats.append(f"{skipped_homs} quotient(s) skipped on size limits")
    if exhausted:
        caveats.append("search budget exhausted before all degrees were covered")
        return Verdict(UNKNOWN, None, coverage, profile, tuple(caveats))
    if skipped_homs or not profile.entries or not profile.bounded():
        return Verdict(UNKNOWN, None, coverage, profile, tuple(caveats))
    caveats.append(CAVEAT_NON_CONCLUSIVE)
    return Verdict(FIBERED_EVIDENCE, None, coverage, profile, tuple(caveats))


def verdict_to_json(v: Verdict) -> dict:
    cert = None
    if v.certificate is not None:
        c = v.certificate
        cert = {"route": c.route}
        if c.witness_hom is not None:
            cert["witness_hom"] = c.witness_hom.to_json()
        cert["polynomial"] = str(c.polynomial)
        cert["reason"] = c.reason
    return {
        "status": v.status,
        "certificate": cert,
        "coverage": {
            "max_degree": v.coverage.max_degree,
            "max_image_order": v.coverage.max_image_order,
            "budget_spent": v.coverage.budget_spent,
        },
        "profile": [
            {"n": e.n, "rank_upper": e.rank_upper, "b1_lower": e.b1_lower, "torsion": list(e.torsion)}
            for e in v.profile.entries
        ],
        "caveats": list(v.caveats),
    }


def _render_text(v: Verdict) -> str:
    lines = [f"status: {v.status}"]
    c = v.certificate
    if c is not None:
        lines.append(f"certificate: {c.route} polynomial {c.polynomial} ({c.reason})")
        if c.witness_hom is not None:
            h = c.witness_hom
            imgs = " ".join("[" + ",".join(map(str, x.images)) + "]" for x in h.images)
            lines.append(f"  witness: degree {h.degree}, image order {h.image_order}, images {imgs}")
    cov = v.coverage
    lines.append(f"coverage: degree <= {cov.max_degree}, image order <= {cov.max_image_order}, "
                 f"{cov.budget_spent} nodes")
    if v.profile.entries:
        lines.append("profile:")
        lines.append("   n  rank<=  b1>=  torsion")
        for e in v.profile.entries:
            tors = " ".join(map(str, e.torsion)) or "-"
            lines.append(f"  {e.n:2d}  {e.rank_upper:6d}  {e.b1_lower:4d}  {tors}")
        lines.append(f"gradient estimate (min rank/n): {v.profile.gradient_estimate}")
        lower = ", ".join(str(x) for x in v.profile.lower_gradient)
        lines.append(f"certified lower bounds b1/n: {lower}")
    for cav in v.caveats:
        lines.append(f"caveat: {cav}")
    return "\n".join(lines) + "\n"


def report(v: Verdict, format: str = "text") -> bytes:
    if format == "json":
        return (json.dumps(verdict_to_json(v), indent=2) + "\n").encode()
    if format == "text":
        return _render_text(v).encode()
    raise ValueError(f"unknown report format {format!r}")


def witness_from_json(p: Presentation, data: dict) -> FiniteQuotientHom:
    """Rebuild a witness homomorphism from its report entry."""
    hom = FiniteQuotientHom.from_images(p, data["images"])
    if hom.image_order != data["image_order"]:
        raise FibrometerError("witness image order does not match the report")
    return hom
