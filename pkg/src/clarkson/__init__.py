"""Verification and exploration toolkit for Clarkson-type norm
inequalities on nonnegative and signed finite l_p vectors."""

from .catalog import (
    DEFAULT_POLICY,
    GapReport,
    InequalityId,
    TolerancePolicy,
    Verdict,
    classify,
    eval_clarkson_1_1,
    eval_clarkson_1_2,
    eval_clarkson_1_3,
    eval_corollary_1_6,
    eval_main_1_7,
    eval_prop_1_4,
    evaluate,
    halving_substitution,
)
from .core import (
    ExponentPair,
    NonnegVector,
    RealVector,
    Regime,
    Weights,
    combine,
    conjugate_exponent,
    p_norm,
    validate_vector,
)
from .rearrange import (
    RearrangedPair,
    SwapInstance,
    brute_force_swap_oracle,
    check_swap_inequality,
    dominance_rearrange,
    rearrangement_norm_gain,
    sum_power_rearrangement_gap,
)
from .search import (
    CellSummary,
    Constraint,
    Distribution,
    SampleSpec,
    SearchOutcome,
    SearchStatus,
    counterexample_search,
    extremal_search,
    sample_pair,
    scan_grid,
)
from .variational import (
    ChiContext,
    PhiContext,
    breakpoints,
    chi,
    chi_sign_scan,
    monotonicity_scan,
    phi,
    phi_prime,
    psi,
    psi_prime,
)

__version__ = "0.1.0"
