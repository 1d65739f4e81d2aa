"""Localization analysis of 1D two-state quantum walks with periodic coins.

The package decides whether a walk with periodically arranged coin matrices
(plus a finite defect window) has point spectrum, constructs the
exponentially decaying eigenvectors, and computes the time-averaged limit
distribution, cross-checked against direct simulation and the closed-form
spectra of the special model families.
"""

from .closed_forms import (
    ClosedFormSpectrum,
    DegenerateBetaDifference,
    NoMatchingProposition,
    PremiseViolated,
    homogeneous_spectrum,
    match_proposition,
    one_defect_p2_spectrum,
    two_phase_p2_alternating_spectrum,
    two_phase_p2_uniform_spectrum,
)
from .dynamics import (
    DistributionSeries,
    distribution,
    evolve,
    limit_distribution,
    step,
    time_average,
)
from .model import (
    Coin,
    ModelSpec,
    StateVector,
    coin_at,
    hadamard_coin,
    identity_coin,
    load_model,
    origin_state,
    residue_and_period_index,
    save_model,
    validate,
)
from .spectrum import (
    ConditionOneViolated,
    DivergentTail,
    EigenPoint,
    FullRank,
    SpectrumReport,
    condition_one,
    eigen_check,
    eigen_norm,
    eigenvector_profile,
    eigenvector_tilde,
    kernel_direction,
    matching_residual,
    scan_spectrum,
    stationary_measure,
)
from .transfer import (
    ImaginaryResidueTooLarge,
    ZetaPair,
    boundary_products,
    period_block,
    product,
    shifted_block,
    trace_invariant_A,
    transfer_matrix,
    zeta_pair,
)

__version__ = "0.1.0"
