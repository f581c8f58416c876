"""Static SMC with likelihood annealing and an MCMC mutation kernel.

The building blocks (log-space reweighting, ESS, systematic resampling,
temperature bisection, mutation-count rule) are shared with the
trans-dimensional sampler in :mod:`ipdetect.rjsmc`. Targets are plain
objects, so analytic toy problems and the AEM problem run through the same
code.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Protocol

import numpy as np
from scipy.special import logsumexp

__all__ = [
    "SmcError",
    "Target",
    "GaussianToyTarget",
    "SmcResult",
    "ess",
    "normalize_log_weights",
    "reweight",
    "systematic_resample",
    "bisect_gamma",
    "num_mutation_steps",
    "rw_mutate",
    "run_static_smc",
    "step_rng",
]

log = logging.getLogger(__name__)


class SmcError(RuntimeError):
    """Sampler failure (initialisation, weight underflow, safety cap)."""


class Target(Protocol):
    """Static target: prior sampler, log prior and log likelihood on ``(n, d)`` arrays."""

    dim: int

    def sample_prior(self, n: int, rng: np.random.Generator) -> np.ndarray: ...

    def log_prior(self, x: np.ndarray) -> np.ndarray: ...

    def log_like(self, x: np.ndarray) -> np.ndarray: ...


@dataclass
class GaussianToyTarget:
    """Conjugate toy: prior ``N(prior_mean, prior_sd^2)``, data ``y_i ~ N(x, noise_sd^2)``.

    The evidence and posterior are available in closed form, which makes
    this the reference problem for the evidence estimator.
    """

    y: np.ndarray = field(default_factory=lambda: np.array([1.0]))
    prior_mean: float = 0.0
    prior_sd: float = 1.0
    noise_sd: float = 1.0
    dim: int = 1

    def __post_init__(self):
        self.y = np.atleast_1d(np.asarray(self.y, dtype=float))

    def sample_prior(self, n, rng):
        return self.prior_mean + self.prior_sd * rng.standard_normal((n, 1))

    def log_prior(self, x):
        z = (x[:, 0] - self.prior_mean) / self.prior_sd
        return -0.5 * z**2 - math.log(self.prior_sd * math.sqrt(2 * math.pi))

    def log_like(self, x):
        r = (self.y[None, :] - x[:, :1]) / self.noise_sd
        return np.sum(-0.5 * r**2 - math.log(self.noise_sd * math.sqrt(2 * math.pi)), axis=1)

    def log_evidence(self) -> float:
        """``log N(y; prior_mean 1, noise_sd^2 I + prior_sd^2 11^T)``."""
        n = self.y.size
        cov = self.noise_sd**2 * np.eye(n) + self.prior_sd**2
        r = self.y - self.prior_mean
        _, logdet = np.linalg.slogdet(cov)
        return float(-0.5 * (r @ np.linalg.solve(cov, r) + logdet + n * math.log(2 * math.pi)))

    def posterior_mean(self) -> float:
        prec = 1 / self.prior_sd**2 + self.y.size / self.noise_sd**2
        return float((self.prior_mean / self.prior_sd**2 + self.y.sum() / self.noise_sd**2) / prec)


# --------------------------------------------------------------------------
# weights


def normalize_log_weights(log_w) -> tuple[np.ndarray, float]:
    """Normalised weights and ``log sum exp(log_w)``; raises if all are ``-inf``."""
    log_w = np.asarray(log_w, dtype=float)
    if log_w.size == 0:
        raise ValueError("empty weight set")
    total = logsumexp(log_w)
    if not np.isfinite(total):
        raise SmcError("all importance weights vanished")
    return np.exp(log_w - total), float(total)


def ess(weights) -> float:
    """Effective sample size ``1 / sum(W^2)`` of normalised weights."""
    w = np.asarray(weights, dtype=float)
    if w.size == 0:
        raise ValueError("empty weight set")
    return float(1.0 / np.sum(w**2))


def reweight(log_weights, log_like, gamma_prev: float, gamma_next: float):
    """Incremental annealing weights ``W_{t-1} L^(gamma_next - gamma_prev)``.

    Parameters
    ----------
    log_weights : array
        Log of the current normalised weights (``-log N`` after resampling).
    log_like : array
        Cached log likelihood per particle.

    Returns
    -------
    weights : ndarray
        Normalised new weights.
    log_increment : float
        ``log sum_i w_i``, the log incremental evidence.
    """
    if not gamma_next > gamma_prev:
        raise ValueError("gamma_next must exceed gamma_prev")
    d = gamma_next - gamma_prev
    ll = np.asarray(log_like, dtype=float)
    # avoid 0 * -inf when a particle has zero likelihood
    inc = np.where(np.isneginf(ll), -np.inf, d * ll)
    return normalize_log_weights(np.asarray(log_weights, dtype=float) + inc)


def systematic_resample(weights, rng: np.random.Generator) -> np.ndarray:
    """Indices from systematic resampling of normalised ``weights`` (same count)."""
    w = np.asarray(weights, dtype=float)
    n = w.size
    cdf = np.cumsum(w)
    cdf[-1] = 1.0
    u = (rng.random() + np.arange(n)) / n
    return np.minimum(np.searchsorted(cdf, u, side="right"), n - 1)


def bisect_gamma(stat: Callable[[float], float], gamma: float, target: float, tol: float,
                 max_iter: int = 30) -> float:
    """Largest-step temperature in ``(gamma, 1]`` with ``stat(gamma') ~ target``.

    ``stat`` is a decreasing diversity measure (ESS or TESS) after
    reweighting to ``gamma'``. Returns 1 when ``stat(1) >= target``;
    otherwise bisects until ``|stat - target| <= tol`` or ``max_iter``
    iterations, keeping the bracket end whose statistic is above target.
    """
    if gamma >= 1.0:
        raise ValueError("gamma already 1")
    if stat(1.0) >= target:
        return 1.0
    lo, hi = gamma, 1.0
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        s = stat(mid)
        if abs(s - target) <= tol:
            return mid
        if s > target:
            lo = mid
        else:
            hi = mid
    # lo always satisfies stat >= target except at the starting gamma
    return lo if lo > gamma else 0.5 * (lo + hi)


def num_mutation_steps(acceptance_rates, c: float) -> int:
    """Number of MCMC sweeps ``ceil(log c / log(1 - p_min))``.

    ``p_min`` is the smallest rate after clamping each to ``[0.01, 0.99]``,
    so that a particle stays put with probability at most ``c``.
    """
    if not 0 < c < 1:
        raise ValueError("c must lie in (0, 1)")
    rates = np.clip(np.atleast_1d(np.asarray(acceptance_rates, dtype=float)), 0.01, 0.99)
    p = float(rates.min())
    return max(1, math.ceil(math.log(c) / math.log1p(-p) - 1e-12))


def step_rng(seed, step: int, stream: int = 0) -> np.random.Generator:
    """Independent generator for ``(seed, step, stream)``; stable across runs."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(step), int(stream)]))


# --------------------------------------------------------------------------
# mutation


def rw_mutate(target, x, lp, ll, gamma, chol, n_sweeps, rng):
    """Gaussian random-walk Metropolis sweeps on ``prior * L^gamma``.

    Returns updated ``(x, lp, ll)`` and the mean acceptance rate.
    """
    n, d = x.shape
    acc = 0
    for _ in range(n_sweeps):
        prop = x + rng.standard_normal((n, d)) @ chol.T
        lp_new = target.log_prior(prop)
        ll_new = np.full(n, -np.inf)
        ok = np.isfinite(lp_new)
        if ok.any():
            ll_new[ok] = target.log_like(prop[ok])
        with np.errstate(invalid="ignore"):
            log_a = lp_new + gamma * ll_new - lp - gamma * ll
        log_a = np.where(np.isfinite(log_a), log_a, -np.inf)
        take = np.log(rng.random(n)) < log_a
        x[take], lp[take], ll[take] = prop[take], lp_new[take], ll_new[take]
        acc += int(take.sum())
    return x, lp, ll, acc / max(1, n * n_sweeps)


def _proposal_chol(x, scale):
    d = x.shape[1]
    cov = np.atleast_2d(np.cov(x, rowvar=False))
    cov = cov + 1e-8 * max(np.trace(cov) / d, 1e-12) * np.eye(d)
    return scale * np.linalg.cholesky(cov)


@dataclass
class SmcResult:
    particles: np.ndarray
    log_like: np.ndarray
    log_evidence: float
    gammas: list
    log_increments: list
    diagnostics: list


def run_static_smc(target, n_particles: int, alpha: float = 0.5, rng=None, *, seed: int | None = None,
                   c_mutation: float = 0.01, mutate: bool = True, schedule=None,
                   max_steps: int = 1000, max_sweeps: int = 50, on_step=None) -> SmcResult:
    """Adaptive likelihood-annealed SMC.

    Each step picks the next temperature by bisection so that the ESS after
    reweighting is ``alpha * n_particles`` (or jumps to 1), accumulates the
    log incremental evidence, resamples systematically and mutates with a
    random-walk kernel whose covariance is the particle covariance scaled by
    ``2.38 / sqrt(d)``. The number of sweeps follows
    :func:`num_mutation_steps` from a trial sweep.

    Parameters
    ----------
    target : Target
    n_particles : int
    alpha : float
        ESS threshold as a fraction of ``n_particles``.
    rng : numpy Generator, optional
        Used when ``seed`` is not given.
    seed : int, optional
        Master seed; step ``t`` then draws from ``step_rng(seed, t)``.
    mutate : bool
        Disable to obtain plain sequential importance sampling.
    schedule : sequence, optional
        Fixed temperatures (starting at 0, ending at 1) instead of bisection.
    on_step : callable, optional
        Called with each diagnostics record.
    """
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1)")
    if rng is None and seed is None:
        raise ValueError("give rng or seed")
    get_rng = (lambda t: step_rng(seed, t)) if seed is not None else (lambda t: rng)
    n = int(n_particles)
    r0 = get_rng(0)
    x = np.asarray(target.sample_prior(n, r0), dtype=float).reshape(n, -1)
    lp = np.asarray(target.log_prior(x), dtype=float)
    ll = np.asarray(target.log_like(x), dtype=float)
    ll = np.where(np.isnan(ll), -np.inf, ll)
    bad = ~np.isfinite(ll)
    if bad.mean() > 0.5:
        raise SmcError(f"likelihood failed for {bad.sum()} of {n} initial particles")
    log_w = np.full(n, -math.log(n))
    gamma = 0.0
    log_z = 0.0
    gammas, incs, diag = [0.0], [], []
    fixed = None if schedule is None else list(schedule)[1:]
    tol = 0.01 * n
    for t in range(1, max_steps + 1):
        if fixed is not None:
            g_next = float(fixed[t - 1])
        else:
            g_next = bisect_gamma(lambda g: ess(reweight(log_w, ll, gamma, g)[0]),
                                  gamma, alpha * n, tol)
        w, inc = reweight(log_w, ll, gamma, g_next)
        gamma = g_next
        log_z += inc
        e = ess(w)
        r = get_rng(t)
        idx = systematic_resample(w, r)
        x, lp, ll = x[idx], lp[idx], ll[idx]
        log_w = np.full(n, -math.log(n))
        acc, sweeps = float("nan"), 0
        if mutate:
            chol = _proposal_chol(x, 2.38 / math.sqrt(x.shape[1]))
            x, lp, ll, acc = rw_mutate(target, x, lp, ll, gamma, chol, 1, r)
            sweeps = min(max_sweeps, num_mutation_steps([acc], c_mutation)) - 1
            if sweeps > 0:
                x, lp, ll, _ = rw_mutate(target, x, lp, ll, gamma, chol, sweeps, r)
            sweeps += 1
        rec = {"step": t, "gamma": gamma, "ess": e, "log_increment": inc, "log_evidence": log_z,
               "acceptance": acc, "sweeps": sweeps}
        diag.append(rec)
        log.debug("smc step %(step)d gamma=%(gamma).4g ess=%(ess).1f", rec)
        if on_step is not None:
            on_step(rec)
        gammas.append(gamma)
        incs.append(inc)
        if gamma >= 1.0:
            break
    else:
        raise SmcError(f"temperature did not reach 1 within {max_steps} steps")
    return SmcResult(x, ll, log_z, gammas, incs, diag)
