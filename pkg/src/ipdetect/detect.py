"""Model-selection statistics and posterior summaries of a final particle cloud."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .forward import AemSystem, ForwardOperator, operator_for
from .likelihood import NoiseModel, noise_variance
from .model import ModelIndex, ParticleArray, PriorSpec

__all__ = [
    "ModelMarginals",
    "DepthGrid",
    "PpdSummary",
    "model_marginals",
    "bayes_factor",
    "bfipd",
    "evidence_bayes_factor",
    "depth_marginal_grid",
    "depth_of_investigation",
    "ppd_summary",
]

log = logging.getLogger(__name__)

N_BINS = 64
KL_EPS = 1e-12


@dataclass(frozen=True)
class ModelMarginals:
    """Posterior model probabilities ``N_k / N`` on the flat model grid."""

    probs: np.ndarray
    n_total: int
    prior: PriorSpec

    def __getitem__(self, model: ModelIndex) -> float:
        return float(self.probs[model.flat(self.prior)])

    def as_dict(self) -> dict:
        return {m: float(self.probs[m.flat(self.prior)]) for m in self.prior.models()}


def model_marginals(cloud_or_models, prior: PriorSpec | None = None) -> ModelMarginals:
    """Counts-based model marginals from a cloud (or an array of flat model indices)."""
    if prior is None:
        prior = cloud_or_models.prior
        flat = cloud_or_models.models
    elif isinstance(cloud_or_models, ParticleArray):
        flat = cloud_or_models.model_flat(prior)
    else:
        flat = np.asarray(cloud_or_models, dtype=int)
    counts = np.bincount(flat, minlength=prior.n_models)
    return ModelMarginals(counts / counts.sum(), int(counts.sum()), prior)


def _model_prior(prior: PriorSpec) -> np.ndarray:
    return np.full(prior.n_models, math.exp(prior.log_model_prior()))


def bayes_factor(marginals: ModelMarginals, prior: PriorSpec, k1: ModelIndex, k2: ModelIndex, *,
                 return_flag: bool = False):
    """Posterior odds over prior odds, ``[pi(k1|y) / pi(k2|y)] [p(k2) / p(k1)]``.

    An empty ``k2`` gives ``inf`` (``nan`` if ``k1`` is empty too) and a raised
    low-confidence flag.
    """
    p = _model_prior(prior)
    a, b = marginals.probs[k1.flat(prior)], marginals.probs[k2.flat(prior)]
    pa, pb = p[k1.flat(prior)], p[k2.flat(prior)]
    low = b == 0
    if low:
        log.warning("Bayes factor denominator model %s holds no particles", k2)
        value = math.inf if a > 0 else math.nan
    else:
        value = float((a / b) * (pb / pa))
    return (value, bool(low)) if return_flag else value


def bfipd(marginals: ModelMarginals, prior: PriorSpec, *, return_flag: bool = False):
    """Grouped Bayes factor of chargeable (``lam >= 1``) over non-chargeable models.

    ``[|M_nc| sum_{c} pi(c|y)/p(c)] / [|M_c| sum_{nc} pi(nc|y)/p(nc)]``; zero
    non-chargeable mass gives ``inf`` with the low-confidence flag. ``nan``
    when either group is empty (``lambda_max = 0``).
    """
    p = _model_prior(prior)
    lam = np.array([m.lam for m in prior.models()])
    charge = lam >= 1
    n_c, n_nc = int(charge.sum()), int((~charge).sum())
    if n_c == 0 or n_nc == 0:
        return (math.nan, True) if return_flag else math.nan
    num = n_nc * np.sum(marginals.probs[charge] / p[charge])
    den = n_c * np.sum(marginals.probs[~charge] / p[~charge])
    low = den == 0
    if low:
        value = math.inf if num > 0 else math.nan
    else:
        value = float(num / den)
    return (value, bool(low)) if return_flag else value


def evidence_bayes_factor(log_z_by_model, k1, k2, prior: PriorSpec | None = None) -> float:
    """``exp(log Z_k1 - log Z_k2)`` from per-model evidence estimates.

    ``k1`` and ``k2`` are flat indices, or :class:`ModelIndex` with ``prior``.
    """
    lz = np.asarray(log_z_by_model, dtype=float)
    if isinstance(k1, ModelIndex):
        k1, k2 = k1.flat(prior), k2.flat(prior)
    a, b = lz[k1], lz[k2]
    if not (np.isfinite(a) and np.isfinite(b)):
        raise ValueError("evidence not available for both models")
    return float(math.exp(a - b))


# --------------------------------------------------------------------------
# depth summaries


@dataclass
class DepthGrid:
    """Per-depth histograms of log10 conductivity and chargeability.

    Rows are depths (1 m spacing by default), columns bins over the prior
    range; every row sums to 1.
    """

    depths: np.ndarray
    cond_edges: np.ndarray
    charge_edges: np.ndarray
    cond_density: np.ndarray
    charge_density: np.ndarray
    mean_cond: np.ndarray
    mean_charge: np.ndarray
    doi_cond: float = math.nan
    doi_charge: float = math.nan


def _values_at_depths(depths, interfaces, values):
    """Property at each depth for each particle; interfaces are NaN padded."""
    z = np.where(np.isnan(interfaces), np.inf, interfaces)
    # layer index: interfaces at or above the depth
    idx = (z[:, None, :] <= depths[None, :, None]).sum(axis=2)
    return np.take_along_axis(values, idx, axis=1)


def _hist_rows(vals, weights, lo, hi, n_bins):
    b = np.clip(((vals - lo) / (hi - lo) * n_bins).astype(int), 0, n_bins - 1)
    n_d = vals.shape[1]
    out = np.zeros((n_d, n_bins))
    rows = np.broadcast_to(np.arange(n_d)[None, :], b.shape)
    np.add.at(out, (rows.ravel(), b.ravel()), np.broadcast_to(weights[:, None], b.shape).ravel())
    return out / out.sum(axis=1, keepdims=True)


def depth_marginal_grid(cloud, prior: PriorSpec | None = None, *, dz: float = 1.0,
                        n_bins: int = N_BINS, weights=None) -> DepthGrid:
    """Model-averaged property histograms on a regular depth grid from 0 to ``z_max``.

    ``cloud`` may be a :class:`~ipdetect.rjsmc.ParticleCloud` or a
    :class:`ParticleArray`; particles count equally unless ``weights`` is
    given. DOI depths are filled in with the default threshold.
    """
    if isinstance(cloud, ParticleArray):
        batch = cloud
        if prior is None:
            raise ValueError("prior required with a ParticleArray")
    else:
        batch = cloud.particles
        prior = cloud.prior if prior is None else prior
    n = len(batch)
    w = np.full(n, 1.0 / n) if weights is None else np.asarray(weights, dtype=float) / np.sum(weights)
    depths = np.arange(0.0, prior.z_max + 0.5 * dz, dz)
    phis = np.concatenate([batch.phi_b[:, None], np.nan_to_num(batch.phi)], axis=1)
    ms = np.concatenate([np.zeros((n, 1)), np.nan_to_num(batch.m)], axis=1)
    phi_z = _values_at_depths(depths, batch.z_sigma, phis)
    m_z = _values_at_depths(depths, batch.z_m, ms)
    cond = _hist_rows(phi_z, w, *prior.phi_bounds, n_bins)
    charge = _hist_rows(m_z, w, *prior.m_bounds, n_bins)
    grid = DepthGrid(
        depths=depths,
        cond_edges=np.linspace(*prior.phi_bounds, n_bins + 1),
        charge_edges=np.linspace(*prior.m_bounds, n_bins + 1),
        cond_density=cond,
        charge_density=charge,
        mean_cond=w @ phi_z,
        mean_charge=w @ m_z,
    )
    grid.doi_cond, grid.doi_charge = depth_of_investigation(grid, prior)
    return grid


def prior_depth_marginals(depths, prior: PriorSpec, n_bins: int = N_BINS):
    """Prior histograms at each depth: ``(conductivity, chargeability)``.

    Log10 conductivity is uniform at every depth. Chargeability is the zero
    background with probability ``sum_l p(l) (1 - z/z_max)^l`` (no
    chargeable interface above ``z``), and otherwise uniform.
    """
    depths = np.asarray(depths, dtype=float)
    cond = np.full((depths.size, n_bins), 1.0 / n_bins)
    frac = np.clip(1.0 - depths / prior.z_max, 0.0, 1.0)
    lams = np.arange(prior.lambda_max + 1)
    p0 = np.mean(frac[:, None] ** lams[None, :], axis=1)
    lo, hi = prior.m_bounds
    charge = np.zeros((depths.size, n_bins))
    charge += (1.0 - p0)[:, None] / n_bins
    b0 = min(n_bins - 1, max(0, int((0.0 - lo) / (hi - lo) * n_bins)))
    charge[:, b0] += p0
    return cond, charge


def kl_divergence_rows(post, ref, eps: float = KL_EPS) -> np.ndarray:
    """Row-wise ``KL(post || ref)`` (natural log) with ``eps`` added to every bin."""
    p = np.asarray(post, dtype=float) + eps
    q = np.asarray(ref, dtype=float) + eps
    p /= p.sum(axis=1, keepdims=True)
    q /= q.sum(axis=1, keepdims=True)
    return np.sum(p * np.log(p / q), axis=1)


def _doi(depths, div, threshold):
    above = np.flatnonzero(div >= threshold)
    return float(depths[above[-1]]) if above.size else 0.0


def depth_of_investigation(grid: DepthGrid, prior: PriorSpec, threshold: float = 1.0,
                           *, return_divergence: bool = False):
    """Deepest depth whose posterior histogram still diverges from the prior.

    Divergence is ``KL(posterior || prior)`` per depth; the DOI is the depth
    below which it stays under ``threshold`` (0 when it never reaches it).
    Returns ``(doi_cond, doi_charge)``, plus the divergence rows on request.
    """
    n_bins = grid.cond_density.shape[1]
    pc, pm = prior_depth_marginals(grid.depths, prior, n_bins)
    dc = kl_divergence_rows(grid.cond_density, pc)
    dm = kl_divergence_rows(grid.charge_density, pm)
    out = (_doi(grid.depths, dc, threshold), _doi(grid.depths, dm, threshold))
    return (out, (dc, dm)) if return_divergence else out


# --------------------------------------------------------------------------
# posterior predictive


@dataclass
class PpdSummary:
    """Per-gate posterior predictive mean, sd and standardised residual of the data."""

    mean: np.ndarray
    sd: np.ndarray
    residual: np.ndarray
    n_draws: int
    n_failed: int = 0


def ppd_summary(cloud, system: AemSystem, noise: NoiseModel, y, rng: np.random.Generator,
                n_draws: int = 1000, *, operator: ForwardOperator | None = None,
                weights=None) -> PpdSummary:
    """Posterior predictive check of observed data ``y``.

    Draws ``n_draws`` particles in proportion to their weights, simulates
    noisy data for each, and standardises ``y`` by the per-gate predictive
    mean and sd. The sd is floored at the additive noise.
    """
    batch = cloud if isinstance(cloud, ParticleArray) else cloud.particles
    y = getattr(y, "y", y)
    y = np.asarray(y, dtype=float)
    n = len(batch)
    w = np.full(n, 1.0 / n) if weights is None else np.asarray(weights, dtype=float) / np.sum(weights)
    draws = rng.choice(n, size=n_draws, p=w)
    uniq, inv = np.unique(draws, return_inverse=True)
    op = operator_for(system) if operator is None else operator
    values, ok = op.response_array(batch.take(uniq))
    sim = values[inv]
    good = ok[inv]
    n_failed = int(np.sum(~good))
    if n_failed:
        log.warning("%d predictive draws skipped after forward failures", n_failed)
    sim = sim[good]
    if sim.shape[0] == 0:
        raise RuntimeError("no valid predictive draws")
    sim = sim + np.sqrt(noise_variance(sim, noise)) * rng.standard_normal(sim.shape)
    mean = sim.mean(axis=0)
    sd = sim.std(axis=0, ddof=1) if sim.shape[0] > 1 else np.zeros(sim.shape[1])
    sd = np.maximum(sd, noise.additive(sim.shape[1]))
    # a spread at roundoff level is a degenerate PPD, not information
    sd = np.where(sd > 1e-12 * np.abs(mean), sd, np.nan)
    return PpdSummary(mean, sd, (y - mean) / sd, int(sim.shape[0]), n_failed)
