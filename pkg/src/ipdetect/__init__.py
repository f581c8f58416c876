"""Bayesian detectability of induced polarisation in airborne TEM data.

Transdimensional inversion of single soundings with an adaptive
reversible-jump sequential Monte Carlo sampler over decoupled conductivity
and chargeability layer stacks, and the grouped Bayes factor that flags
chargeable ground.
"""

from .detect import (
    DepthGrid,
    ModelMarginals,
    PpdSummary,
    bayes_factor,
    bfipd,
    depth_marginal_grid,
    depth_of_investigation,
    evidence_bayes_factor,
    model_marginals,
    ppd_summary,
)
from .forward import AemSystem, ForwardError, ForwardOperator, forward, forward_array
from .likelihood import NoiseModel, Sounding, log_likelihood, simulate_sounding
from .model import (
    EarthProfile,
    ModelIndex,
    ParticleArray,
    ParticleState,
    PriorSpec,
    merge_profiles,
    sample_prior,
)
from .rjsmc import RjsmcConfig, RjsmcResult, run_rjsmc, sample_rjsmc
from .smc import SmcError, run_static_smc

__version__ = "0.1.0"

__all__ = [
    "AemSystem",
    "DepthGrid",
    "EarthProfile",
    "ForwardError",
    "ForwardOperator",
    "ModelIndex",
    "ModelMarginals",
    "NoiseModel",
    "ParticleArray",
    "ParticleState",
    "PpdSummary",
    "PriorSpec",
    "RjsmcConfig",
    "RjsmcResult",
    "SmcError",
    "Sounding",
    "bayes_factor",
    "bfipd",
    "depth_marginal_grid",
    "depth_of_investigation",
    "evidence_bayes_factor",
    "forward",
    "forward_array",
    "log_likelihood",
    "merge_profiles",
    "model_marginals",
    "ppd_summary",
    "run_rjsmc",
    "run_static_smc",
    "sample_prior",
    "sample_rjsmc",
    "simulate_sounding",
]
