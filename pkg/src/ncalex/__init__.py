"""Exact computation of the noncommutative Alexander invariant chi of boundary links."""

__version__ = "0.1.0"

from .cyclic import CyclicSeries, cyc_equal, cyc_project, necklace_canonical
from .group_algebra import (
    GroupRingElement,
    GroupWord,
    gr_augment,
    gr_mul,
    gr_star,
    reduce_word,
    word_inverse,
    word_mul,
)
from .matrices import (
    LambdaMatrix,
    SeriesMatrix,
    chi,
    chi_series,
    is_hermitian,
    log_plus,
    mat_augment,
    mat_star,
    series_mat_inverse,
)
from .linalg import bareiss_det, unimodular
from .moves import (
    DiagonalCongruence,
    Destabilize,
    ElementaryCongruence,
    Stabilize,
    apply_move,
    apply_sequence,
    random_move_sequence,
    verify_chi_invariance,
)
from .nc_series import NCSeries, abelianize, magnus_embed, ns_exp, ns_invert, ns_log, ns_mul
from .seifert import (
    SeifertMatrix,
    alexander,
    build_W,
    chi_delta,
    compare_pathways,
    compute_Z,
    validate_seifert,
)
