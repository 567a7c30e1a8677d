"""Exact combinatorics and norms for the Baernstein and Schreier sequence spaces."""

from .gl_index import (
    GLWindowResult,
    check_interleave_bound,
    check_removal_bound,
    check_spread_bound,
    check_submultiplicative,
    gl1_windowed,
    indexseq,
)
from .norms import (
    FinVec,
    NormResult,
    SpaceSpec,
    beta_p,
    linear_combination,
    mu_p,
    norm,
    norm_Bp,
    norm_Bp_bruteforce,
    norm_companion,
    norm_Sp,
    norm_Sp_bruteforce,
)
from .schreier_core import (
    SchreierChain,
    SchreierSet,
    enumerate_schreier_subsets,
    finset,
    is_schreier,
    is_spread,
    tau1,
    tau1_bruteforce,
    tau1_decompose,
)
from .sequences import (
    BlockSeq,
    GrowthRow,
    SearchExhaustedError,
    apply_projection,
    build_uncomplemented,
    check_block_upper_bound,
    check_domination,
    check_spike_lower_bound,
    expand,
    growth_table,
    milman_flat_vector,
    normalize_blocks,
    select_intertwined_indices,
    spike_coordinates,
    spike_weights,
)

__version__ = "0.1.0"

__all__ = [
    "BlockSeq",
    "FinVec",
    "GLWindowResult",
    "GrowthRow",
    "NormResult",
    "SchreierChain",
    "SchreierSet",
    "SearchExhaustedError",
    "SpaceSpec",
    "apply_projection",
    "beta_p",
    "build_uncomplemented",
    "check_block_upper_bound",
    "check_domination",
    "check_interleave_bound",
    "check_removal_bound",
    "check_spike_lower_bound",
    "check_spread_bound",
    "check_submultiplicative",
    "enumerate_schreier_subsets",
    "expand",
    "finset",
    "gl1_windowed",
    "growth_table",
    "indexseq",
    "is_schreier",
    "is_spread",
    "linear_combination",
    "milman_flat_vector",
    "mu_p",
    "norm",
    "norm_Bp",
    "norm_Bp_bruteforce",
    "norm_companion",
    "norm_Sp",
    "norm_Sp_bruteforce",
    "normalize_blocks",
    "select_intertwined_indices",
    "spike_coordinates",
    "spike_weights",
    "tau1",
    "tau1_bruteforce",
    "tau1_decompose",
    "__version__",
]
