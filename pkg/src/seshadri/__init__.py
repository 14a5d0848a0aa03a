"""Exact bound ladders for Seshadri constants on Picard-number-1 surfaces."""

from .bounds import (
    BoundReport,
    SzembergData,
    compute_m0,
    compute_p0,
    equality_case,
    full_report,
    multipoint_bound,
    steffens_bound,
    szemberg_bound,
)
from .exact import Ordering, SquareDegreeError, cmp_rational_vs_sqrt, is_square, isqrt
from .omega import (
    OmegaPoint,
    OracleResult,
    max_mult,
    multipoint_omega_min,
    omega_contains,
    omega_min,
    verify_lemma,
)
from .pell import CFExpansion, PellSolution, cf_expand, conjectural_bound, convergents, pell_primitive

__version__ = "0.1.0"
