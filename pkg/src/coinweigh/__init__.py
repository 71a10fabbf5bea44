"""Optimal weighing schemes for the twelve counterfeit-coin problem variants."""

from .core import (
    AdaptiveOnlyInstance,
    AmbiguousOutcome,
    Answer,
    CoinWeighError,
    Configuration,
    ConstructionError,
    DecodeError,
    HEAVIER,
    LIGHTER,
    NONE,
    Scheme,
    SchemeFormatError,
    SearchBudgetExceeded,
    UNKNOWN,
    UndecodableOutcome,
    UnsolvableInstance,
    VARIANTS,
    Variant,
    all_vectors,
    decode,
    decode_candidates,
    format_lnr,
    format_scheme,
    negate,
    outcome_for_heavier,
    parse_lnr,
    parse_scheme,
    simulate,
    trial_pans,
    variant,
    zero_vector,
)
from .bounds import (
    ADAPTIVE_ONLY,
    NONADAPTIVE,
    UNSOLVABLE,
    bound,
    bounds_row,
    counting_bound_check,
    is_solvable,
)
from .constructors import (
    construct,
    extension_vectors,
    genuine_for,
    required_conditions,
    residual_sizes,
)
from .verifier import (
    ALL_CONDITIONS,
    VerificationReport,
    check_conditions,
    complement_argument_check,
    search_nonadaptive,
    verify_exhaustive,
)
from .adaptive import (
    AdaptivePlan,
    adaptive_feasible,
    build_adaptive,
    render_adaptive,
    simulate_adaptive,
)

__version__ = "0.1.0"
