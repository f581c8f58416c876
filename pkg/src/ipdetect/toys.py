"""Analytic test targets that bypass the forward model.

They plug into :func:`ipdetect.rjsmc.sample_rjsmc` as batched log
likelihoods over :class:`~ipdetect.model.ParticleArray` rows, so the same
sampler code is checked against closed-form evidences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import norm

from .model import ModelIndex, ParticleArray, PriorSpec

__all__ = ["NestedGaussianToy", "flat_log_likelihood", "TOY_TARGETS"]


def flat_log_likelihood(batch: ParticleArray) -> np.ndarray:
    """Likelihood identically 1."""
    return np.zeros(len(batch))


@dataclass
class NestedGaussianToy:
    """Two nested models for the mean of Gaussian data.

    Uses the model grid ``kappa_max = 1, lambda_max = 0``: with no interface
    the mean is fixed at ``mu0``; with one conductive interface the mean is
    the first layer's log10 conductivity, uniform on the prior bounds. The
    other parameters do not enter the likelihood.
    """

    y: np.ndarray = field(default_factory=lambda: np.array([0.9, 0.2, 0.5, 1.1]))
    noise_sd: float = 1.0
    mu0: float = 0.0
    prior: PriorSpec = field(default_factory=lambda: PriorSpec(kappa_max=1, lambda_max=0))

    def __post_init__(self):
        self.y = np.atleast_1d(np.asarray(self.y, dtype=float))
        if self.prior.kappa_max != 1 or self.prior.lambda_max != 0:
            raise ValueError("the nested toy needs kappa_max = 1 and lambda_max = 0")

    def _ll(self, mu):
        r = (self.y[None, :] - np.asarray(mu, dtype=float)[:, None]) / self.noise_sd
        return np.sum(-0.5 * r**2, axis=1) - self.y.size * math.log(self.noise_sd * math.sqrt(2 * math.pi))

    def __call__(self, batch: ParticleArray) -> np.ndarray:
        mu = np.where(batch.kappa >= 1, np.nan_to_num(batch.phi[:, 0]), self.mu0)
        return self._ll(mu)

    def log_evidence(self) -> dict:
        """Closed-form ``log p(y | k)`` for both models."""
        n = self.y.size
        s = self.noise_sd
        ybar = self.y.mean()
        lz0 = float(self._ll(np.array([self.mu0]))[0])
        # int N(y | mu) dmu over [lo, hi] / (hi - lo): Gaussian in mu with sd s/sqrt(n)
        lo, hi = self.prior.phi_bounds
        sd = s / math.sqrt(n)
        peak = float(self._ll(np.array([ybar]))[0])
        mass = norm.cdf((hi - ybar) / sd) - norm.cdf((lo - ybar) / sd)
        lz1 = peak + math.log(sd * math.sqrt(2 * math.pi)) + math.log(mass) - math.log(hi - lo)
        return {ModelIndex(0, 0): lz0, ModelIndex(1, 0): lz1}

    def bayes_factor(self) -> float:
        """``p(y | one interface) / p(y | none)``."""
        lz = self.log_evidence()
        return math.exp(lz[ModelIndex(1, 0)] - lz[ModelIndex(0, 0)])


TOY_TARGETS = ("conjugate", "nested", "flat")
