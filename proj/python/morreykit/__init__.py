"""Discrete Morrey norms, maximal operators and weight characteristics on the integers."""

from ._core import (
    DomainError,
    LatticeSequence,
    MaximalProfile,
    NoStoppingLevel,
    NormResult,
    PreconditionError,
    ResourceError,
    UncertifiedDomain,
    Weight,
    beta_sweep,
    cz_decompose,
    cz_verify,
    hl_maximal,
    layer_cake_eval,
    lp_w_norm,
    morrey_norm,
    morrey_pinf_norm,
    muckenhoupt_characteristic,
    necessity_probe,
    rh_characteristic,
    run_cli,
    trace_constants,
    verify_strong_pp,
    verify_weak_11,
    weak_morrey_norm,
    weighted_maximal,
)

__version__ = "0.1.0"
