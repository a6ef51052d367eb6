"""Fibering obstructions for groups with an integer class.

Computes rank/Betti profiles of cyclic covers and untwisted and twisted
Alexander polynomials from finite presentations.
"""

from .alexander import (
    AlexanderResult,
    Representation,
    alexander_polynomial,
    b1_cyclic,
    regular_rep,
    twisted_via_cover,
    twisted_via_fox,
    untwisted_rep,
)
from .exact import LaurentPoly, is_monic, normalize_poly
from .fox import GroupRingElem, fox_derivative
from .presentation import (
    BraidWord,
    FreeWord,
    PhiMap,
    Presentation,
    braid_to_presentation,
    format_presentation,
    parse_braid_spec,
    parse_presentation,
    reduce_word,
    validate_phi,
)
from .quotients import (
    CosetTable,
    FiniteQuotientHom,
    Permutation,
    cyclic_cover_table,
    enumerate_homs,
    regular_cover_table,
)
from .schreier import SubgroupPresentation, restrict_phi, subgroup_presentation, tietze_simplify
from .verdict import (
    RankProfile,
    SearchLimits,
    Verdict,
    fibering_search,
    betti_growth_check,
    rank_profile,
    report,
)

__version__ = "0.1.0"
