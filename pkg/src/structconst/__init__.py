"""Structure constants of Schur, Hall-Littlewood and universal characters.

Products are computed by expanding geometric series of raising operators
over an index vector and straightening the result; every formula has an
independent oracle alongside it (LR tableaux, x-expansions, Koike's sum).
"""

from .exact_algebra import (
    Inconsistent,
    NonzeroRemainder,
    NotPolynomial,
    QTPoly,
    TPoly,
    XYPolynomial,
    h_poly,
    q_poly,
    solve_exact_linear_system,
    tpoly_divexact,
    tpoly_mul,
    xpoly_mul,
)
from .hall_littlewood import (
    FuelExhausted,
    StraighteningCache,
    b_lambda,
    expand_in_hl_basis,
    hl_to_x,
    mul_hl,
    p_structure_constant,
    pieri_hl,
    psi_coefficient,
    straighten_hl,
)
from .operator_engine import (
    BudgetExceeded,
    EngineStats,
    SeriesKind,
    TranslationSeries,
    apply_translation,
    evaluate_series_product,
    tail_sums,
)
from .schur import (
    lr_tableaux_oracle,
    mul_schur,
    pieri_schur,
    schur_to_x,
    straighten_schur,
)
from .universal_characters import (
    koike_coefficient,
    koike_expansion,
    mul_uc,
    uc_degree,
    uc_to_xy,
)

__version__ = "0.1.0"


def clear_caches():
    """Drop every memo table (used before timing runs)."""
    from . import exact_algebra, hall_littlewood, schur, universal_characters

    for fn in (
        exact_algebra._exp_coefficient,
        schur._mul_schur_memo,
        schur._lr_count,
        schur._schur_to_x,
        hall_littlewood._mul_hl_memo,
        hall_littlewood._hl_to_x,
        hall_littlewood._q_product,
        universal_characters._uc_to_xy,
        universal_characters._mul_uc,
        universal_characters._skew_pairs,
        universal_characters._lr_cofactors,
        universal_characters.koike_expansion,
    ):
        fn.cache_clear()
    hall_littlewood._DEFAULT_CACHE.clear()
