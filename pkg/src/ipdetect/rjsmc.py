"""Adaptive reversible-jump SMC over the decoupled layered-model space.

One annealing step:

1. choose the next temperature by bisection on the total ESS (sum of
   per-model ESS of within-model normalised weights);
2. reweight within each model and accumulate the per-model evidence;
3. resample within each model, so particle counts per model never change
   here (they change only through birth and death moves);
4. adapt proposals from recycled, reweighted particles of recent steps;
5. estimate acceptance rates with trial moves and mutate ``R`` times.

Within-model moves are random walks along principal axes of the adapted
covariance. Birth/death moves act on one profile (conductive or
chargeable) and colour a standard-normal auxiliary with the symmetric
square root of the larger model's property covariance; models with too
few recycled records fall back to naive prior-draw proposals.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.special import logsumexp

from .forward import AemSystem, ForwardOperator, operator_for
from .likelihood import NoiseModel, Sounding, log_likelihood_array
from .model import (
    ModelIndex,
    ParticleArray,
    ParticleState,
    PriorSpec,
    log_prior_array,
    model_vector,
    sample_prior_array,
    set_model_vector,
    vector_layout,
)
from .smc import SmcError, bisect_gamma, num_mutation_steps, step_rng, systematic_resample

__all__ = [
    "RjsmcConfig",
    "ParticleCloud",
    "HistoryRecord",
    "ModelProposal",
    "ProposalSuite",
    "RjsmcResult",
    "tess",
    "model_ess",
    "next_gamma",
    "reweight_cloud",
    "within_model_resample",
    "recycling_weights",
    "adapt_proposals",
    "num_mutation_steps",
    "rj_birth",
    "rj_death",
    "mutate",
    "aem_log_likelihood",
    "sample_rjsmc",
    "run_rjsmc",
]

log = logging.getLogger(__name__)

CONDUCTIVE, CHARGEABLE = 0, 1
WITHIN, BIRTH, DEATH = 0, 1, 2
MOVE_NAMES = ("within", "birth", "death")
LOG_SQRT_2PI = 0.5 * math.log(2 * math.pi)


@dataclass(frozen=True)
class RjsmcConfig:
    """Sampler settings.

    Parameters
    ----------
    n_particles : int
    alpha_tess : float
        Target total ESS after reweighting, as a fraction of ``n_particles``.
    c_mutation : float
        Allowed probability that a particle is never moved during one
        mutation phase; sets the sweep count.
    seed : int
    max_steps : int
        Safety cap on annealing steps.
    max_mutation_steps : int
        Cap on sweeps per step (the rate clamp alone allows up to 459).
    move_probs : tuple
        Probabilities of within-model, birth and death moves.
    history_steps : int
        Archived steps used for proposal adaptation.
    trial_fraction : float
        Share of particles used in trial moves.
    tune_rounds : int
        Bisection rounds for the within-model step multiplier.
    target_acceptance : float
    """

    n_particles: int = 2000
    alpha_tess: float = 0.5
    c_mutation: float = 0.01
    seed: int = 0
    max_steps: int = 500
    max_mutation_steps: int = 100
    move_probs: tuple = (0.5, 0.25, 0.25)
    history_steps: int = 5
    trial_fraction: float = 0.1
    tune_rounds: int = 5
    target_acceptance: float = 0.44

    def __post_init__(self):
        if self.n_particles < 1:
            raise ValueError("n_particles must be positive")
        if not 0 < self.alpha_tess < 1:
            raise ValueError("alpha_tess must lie in (0, 1)")
        if not 0 < self.c_mutation < 1:
            raise ValueError("c_mutation must lie in (0, 1)")
        p = np.asarray(self.move_probs, dtype=float)
        if p.shape != (3,) or np.any(p < 0) or not np.isclose(p.sum(), 1.0):
            raise ValueError("move_probs must be three non-negative numbers summing to 1")
        if self.max_steps < 1 or self.max_mutation_steps < 1 or self.history_steps < 1:
            raise ValueError("step caps must be positive")
        if not 0 < self.trial_fraction <= 1:
            raise ValueError("trial_fraction must lie in (0, 1]")

    def to_dict(self) -> dict:
        return {
            "n_particles": self.n_particles,
            "alpha_tess": self.alpha_tess,
            "c_mutation": self.c_mutation,
            "seed": self.seed,
            "max_steps": self.max_steps,
            "max_mutation_steps": self.max_mutation_steps,
            "move_probs": list(self.move_probs),
            "history_steps": self.history_steps,
            "trial_fraction": self.trial_fraction,
            "tune_rounds": self.tune_rounds,
            "target_acceptance": self.target_acceptance,
        }

    @classmethod
    def from_dict(cls, d: dict | None) -> "RjsmcConfig":
        d = dict(d or {})
        if "move_probs" in d:
            d["move_probs"] = tuple(d["move_probs"])
        return cls(**d)


@dataclass
class HistoryRecord:
    """End-of-step (post-mutation) snapshot used for particle recycling."""

    step: int
    gamma: float
    particles: ParticleArray
    log_like: np.ndarray
    log_z: np.ndarray


@dataclass
class ParticleCloud:
    """Particles with within-model normalised log weights and per-model evidence.

    ``log_z[k]`` is the log normalising constant of the tempered target
    restricted to model ``k`` (relative to its conditional prior). A model
    that is empty at a reweight keeps its last value and is marked in
    ``log_z_complete``; models empty since initialisation hold NaN.
    """

    prior: PriorSpec
    particles: ParticleArray
    log_like: np.ndarray
    log_w: np.ndarray
    log_z: np.ndarray
    gamma: float = 0.0
    history: list = field(default_factory=list)
    log_z_complete: np.ndarray | None = None

    def __post_init__(self):
        if self.log_z_complete is None:
            self.log_z_complete = np.isfinite(np.asarray(self.log_z, dtype=float))

    @property
    def n(self) -> int:
        return len(self.particles)

    @property
    def models(self) -> np.ndarray:
        return self.particles.model_flat(self.prior)

    @property
    def n_by_model(self) -> np.ndarray:
        return np.bincount(self.models, minlength=self.prior.n_models)

    def groups(self):
        """``(flat model index, particle indices)`` for every occupied model."""
        mf = self.models
        order = np.argsort(mf, kind="stable")
        cuts = np.flatnonzero(np.diff(mf[order])) + 1
        for idx in np.split(order, cuts):
            if idx.size:
                yield int(mf[idx[0]]), idx

    def weights(self) -> np.ndarray:
        """Within-model normalised weights."""
        return np.exp(self.log_w)


def _within_normalise(log_w, models, n_models):
    """Normalise ``log_w`` within each model; returns ``(log_w, log_sums)``."""
    out = np.empty_like(log_w)
    sums = np.full(n_models, np.nan)
    order = np.argsort(models, kind="stable")
    cuts = np.flatnonzero(np.diff(models[order])) + 1
    for idx in np.split(order, cuts):
        if not idx.size:
            continue
        s = logsumexp(log_w[idx])
        sums[models[idx[0]]] = s
        out[idx] = log_w[idx] - s if np.isfinite(s) else -math.log(idx.size)
    return out, sums


def model_ess(cloud: ParticleCloud, log_w=None) -> np.ndarray:
    """Per-model ESS of within-model normalised weights (0 for empty models)."""
    log_w = cloud.log_w if log_w is None else log_w
    w2 = np.exp(2 * log_w)
    s = np.bincount(cloud.models, weights=w2, minlength=cloud.prior.n_models)
    out = np.zeros(cloud.prior.n_models)
    occ = s > 0
    out[occ] = 1.0 / s[occ]
    return out


def tess(cloud: ParticleCloud, log_w=None) -> float:
    """Total ESS: the sum over occupied models of the per-model ESS."""
    return float(model_ess(cloud, log_w).sum())


def _tempered_log_w(cloud, gamma_next):
    d = gamma_next - cloud.gamma
    inc = np.where(np.isneginf(cloud.log_like), -np.inf, d * cloud.log_like)
    return _within_normalise(cloud.log_w + inc, cloud.models, cloud.prior.n_models)


def next_gamma(cloud: ParticleCloud, config: RjsmcConfig) -> float:
    """Next temperature: TESS after reweighting is about ``alpha_tess * N``."""
    n = cloud.n
    return bisect_gamma(lambda g: tess(cloud, _tempered_log_w(cloud, g)[0]),
                        cloud.gamma, config.alpha_tess * n, 0.01 * n)


def reweight_cloud(cloud: ParticleCloud, gamma_next: float) -> np.ndarray:
    """Reweight to ``gamma_next`` within each model and update per-model evidence.

    Returns the per-model log incremental evidence (NaN for empty models,
    whose evidence is then frozen and flagged incomplete).
    """
    if not gamma_next > cloud.gamma:
        raise ValueError("gamma_next must exceed the current temperature")
    log_w, sums = _tempered_log_w(cloud, gamma_next)
    if np.isneginf(sums).any():
        bad = np.flatnonzero(np.isneginf(sums))
        log.warning("all weights vanished in models %s", bad.tolist())
    occupied = ~np.isnan(sums)
    cloud.log_z = np.where(occupied, cloud.log_z + np.nan_to_num(sums, nan=0.0), cloud.log_z)
    cloud.log_z_complete = cloud.log_z_complete & occupied & np.isfinite(cloud.log_z)
    cloud.log_w = log_w
    cloud.gamma = float(gamma_next)
    return sums


def within_model_resample(cloud: ParticleCloud, rng: np.random.Generator) -> ParticleCloud:
    """Systematic resampling inside each model; counts per model are unchanged."""
    idx_all = np.arange(cloud.n)
    for _, idx in cloud.groups():
        w = np.exp(cloud.log_w[idx])
        w /= w.sum()
        idx_all[idx] = idx[systematic_resample(w, rng)]
    cloud.particles = cloud.particles.take(idx_all)
    cloud.log_like = cloud.log_like[idx_all]
    cloud.log_w = -np.log(cloud.n_by_model[cloud.models]).astype(float)
    return cloud


# --------------------------------------------------------------------------
# recycling and adaptation


def recycling_weights(log_like, gammas, log_z, gamma_t: float, *, log: bool = True):
    """Deterministic-mixture weights of recycled records for one model.

    ``nu = L^gamma_t / ((1/S) sum_l L^gamma_l / Z_l)`` over the ``S``
    archived steps ``l`` in use, where ``Z_l`` is that model's tempered
    normalising constant. The prior cancels because every record is in the
    same model.

    Parameters
    ----------
    log_like : array, shape (n_records,)
    gammas, log_z : array, shape (S,)
        Temperatures and log normalising constants of the archived steps.
    gamma_t : float
        Current temperature.
    """
    ll = np.asarray(log_like, dtype=float)
    g = np.asarray(gammas, dtype=float)
    lz = np.asarray(log_z, dtype=float)
    if g.shape != lz.shape or g.size == 0:
        raise ValueError("need one log evidence per archived step")
    if not np.all(np.isfinite(lz)):
        raise ValueError("missing evidence for an archived step")
    with np.errstate(invalid="ignore"):
        terms = np.where(np.isneginf(ll)[:, None], -np.inf, g[None, :] * ll[:, None]) - lz[None, :]
        den = logsumexp(terms, axis=1) - math.log(g.size)
        num = np.where(np.isneginf(ll), -np.inf, gamma_t * ll)
        out = num - den
    out = np.where(np.isnan(out), -np.inf, out)
    return out if log else np.exp(out)


@dataclass
class ModelProposal:
    """Adapted proposal pieces for one model.

    ``axes`` (columns) and ``sd`` are the principal directions and standard
    deviations of the recycled covariance; ``colour_cond`` / ``colour_charge``
    are symmetric square roots of the property sub-blocks (background and
    layer log10 conductivities; layer chargeabilities). ``naive`` marks the
    prior-based fallback.
    """

    model: ModelIndex
    naive: bool
    mean: np.ndarray | None = None
    cov: np.ndarray | None = None
    axes: np.ndarray | None = None
    sd: np.ndarray | None = None
    colour_cond: np.ndarray | None = None
    colour_charge: np.ndarray | None = None
    n_eff: float = 0.0


@dataclass
class ProposalSuite:
    """Per-model proposals, the common step multiplier and the move mixture."""

    prior: PriorSpec
    models: dict
    scale: float = 2.38
    move_probs: tuple = (0.5, 0.25, 0.25)

    def get(self, k: int) -> ModelProposal:
        prop = self.models.get(int(k))
        if prop is None:
            prop = ModelProposal(ModelIndex.from_flat(k, self.prior), naive=True)
        return prop

    def model_jump(self, k: int) -> dict:
        """Distribution over the model reached by one move from flat model ``k``.

        Birth or death on either profile, split evenly; moves that would
        leave the model grid are rejected and leave the model unchanged.
        """
        mi = ModelIndex.from_flat(k, self.prior)
        pw, pb, pd = self.move_probs
        out = {k: pw}
        for dk, dl, p in ((1, 0, pb / 2), (0, 1, pb / 2), (-1, 0, pd / 2), (0, -1, pd / 2)):
            kk, ll = mi.kappa + dk, mi.lam + dl
            if 0 <= kk <= self.prior.kappa_max and 0 <= ll <= self.prior.lambda_max:
                key = ModelIndex(kk, ll).flat(self.prior)
            else:
                key = k
            out[key] = out.get(key, 0.0) + p
        return out


def _sqrtm_sym(cov):
    lam, vec = np.linalg.eigh(cov)
    lam = np.clip(lam, 0.0, None)
    return (vec * np.sqrt(lam)) @ vec.T


def _regularize(cov):
    d = cov.shape[0]
    tr = np.trace(cov)
    eps = 1e-8 * (tr / d if tr > 0 else 1.0)
    return 0.5 * (cov + cov.T) + eps * np.eye(d)


def fit_model_proposal(model: ModelIndex, x: np.ndarray, log_nu: np.ndarray) -> ModelProposal:
    """Weighted mean, covariance and colouring factors from recycled records."""
    d = x.shape[1]
    if x.shape[0] == 0:
        return ModelProposal(model, naive=True)
    w, _ = np.exp(log_nu - logsumexp(log_nu)), None
    n_eff = float(1.0 / np.sum(w**2)) if np.isfinite(w).all() else 0.0
    if n_eff < d + 2:
        return ModelProposal(model, naive=True, n_eff=n_eff)
    mean = w @ x
    r = x - mean
    cov = _regularize((w[:, None] * r).T @ r)
    lam, vec = np.linalg.eigh(cov)
    lam = np.clip(lam, 1e-300, None)
    lay = vector_layout(model)
    cc = cov[lay["phi"], lay["phi"]]
    cm = cov[lay["m"], lay["m"]]
    return ModelProposal(
        model, naive=False, mean=mean, cov=cov, axes=vec, sd=np.sqrt(lam),
        colour_cond=_sqrtm_sym(cc), colour_charge=_sqrtm_sym(cm) if cm.size else np.zeros((0, 0)),
        n_eff=n_eff,
    )


def adapt_proposals(cloud: ParticleCloud, history, gamma_t: float | None = None, *,
                    scale: float = 2.38, move_probs=(0.5, 0.25, 0.25)) -> ProposalSuite:
    """Fit per-model proposals from recycled records of the archived steps.

    Records of model ``k`` are weighted by :func:`recycling_weights`
    against the current temperature. Steps whose evidence for ``k`` is
    missing are left out of that model's mixture. Models with fewer than
    ``d + 2`` effective records get the naive fallback.
    """
    prior = cloud.prior
    gamma_t = cloud.gamma if gamma_t is None else gamma_t
    history = list(history)
    per_model = {}
    if history:
        mf = [h.particles.model_flat(prior) for h in history]
        occupied = np.unique(np.concatenate(mf))
    else:
        occupied = np.zeros(0, dtype=int)
    for k in occupied:
        model = ModelIndex.from_flat(k, prior)
        # mixture components: archived steps that hold records of this model
        steps, xs, lls = [], [], []
        for i, h in enumerate(history):
            sel = np.flatnonzero(mf[i] == k)
            if sel.size and np.isfinite(h.log_z[k]):
                steps.append(i)
                xs.append(model_vector(h.particles, sel, model))
                lls.append(h.log_like[sel])
        if not xs:
            per_model[int(k)] = ModelProposal(model, naive=True)
            continue
        x = np.concatenate(xs)
        ll = np.concatenate(lls)
        g = np.array([history[i].gamma for i in steps])
        lz = np.array([history[i].log_z[k] for i in steps])
        log_nu = recycling_weights(ll, g, lz, gamma_t)
        per_model[int(k)] = fit_model_proposal(model, x, log_nu)
    return ProposalSuite(prior, per_model, scale=scale, move_probs=tuple(move_probs))


# --------------------------------------------------------------------------
# birth and death on one profile (vectorized over particles of one model)


def _profile_arrays(batch: ParticleArray, idx, model: ModelIndex, profile: int):
    """Full property vectors (background first) and interface depths."""
    if profile == CONDUCTIVE:
        k = model.kappa
        full = np.concatenate([batch.phi_b[idx, None], batch.phi[idx, :k]], axis=1)
        depths = batch.z_sigma[idx, :k]
    else:
        l = model.lam
        full = np.concatenate([np.zeros((idx.size, 1)), batch.m[idx, :l]], axis=1)
        depths = batch.z_m[idx, :l]
    return full, depths


def _write_profile(batch: ParticleArray, idx, profile: int, full, depths):
    n_int = depths.shape[1]
    if profile == CONDUCTIVE:
        batch.kappa[idx] = n_int
        batch.phi_b[idx] = full[:, 0]
        batch.phi[idx] = np.nan
        batch.z_sigma[idx] = np.nan
        batch.phi[idx, :n_int] = full[:, 1:]
        batch.z_sigma[idx, :n_int] = depths
    else:
        batch.lam[idx] = n_int
        batch.m[idx] = np.nan
        batch.z_m[idx] = np.nan
        batch.m[idx, :n_int] = full[:, 1:]
        batch.z_m[idx, :n_int] = depths


def _full_colour(colour, profile):
    """Colouring over the full layer vector; the fixed chargeable background gets zeros."""
    if colour is None:
        return None
    if profile == CONDUCTIVE:
        return colour
    d = colour.shape[0] + 1
    out = np.zeros((d, d))
    out[1:, 1:] = colour
    return out


def _bounds(prior: PriorSpec, profile: int):
    return prior.phi_bounds if profile == CONDUCTIVE else prior.m_bounds


def _birth_core(full, depths, u_d, u_p, colour_full, bounds, z_max):
    """Insert one interface; returns new arrays and the log proposal term.

    The log term holds everything in the acceptance ratio except the
    tempered likelihood ratio and the prior ratio.
    """
    n, p = full.shape
    rows = np.arange(n)[:, None]
    pos = (depths < u_d[:, None]).sum(axis=1)
    i = pos + 1
    j = np.arange(p + 1)[None, :]
    h = np.where(j < i[:, None], j, j - 1)
    new = full[rows, h]
    k_new = depths.shape[1] + 1
    # forward: u_d density 1/z_max; reverse: pick one of k_new interfaces
    log_q = math.log(z_max) - math.log(k_new)
    if colour_full is None:
        lo, hi = bounds
        new[np.arange(n), i] = lo + (hi - lo) * u_p
        log_q += math.log(hi - lo)
        jac = np.ones(n)
    else:
        srow = colour_full[i]
        new = new + srow * u_p[:, None]
        jac = srow[np.arange(n), i] - srow[np.arange(n), i - 1]
        with np.errstate(divide="ignore"):
            log_q = log_q + 0.5 * u_p**2 + LOG_SQRT_2PI + np.log(np.abs(jac))
    zj = np.arange(k_new)[None, :]
    src = np.where(zj < pos[:, None], zj, zj - 1)
    new_depths = np.where(zj == pos[:, None], u_d[:, None], depths[rows, np.clip(src, 0, None)]
                          if depths.shape[1] else u_d[:, None])
    return new, new_depths, np.broadcast_to(log_q, (n,)).astype(float), jac


def _death_core(full, depths, q, colour_full, bounds, z_max):
    """Remove interface ``q``; inverse of :func:`_birth_core`.

    Returns the reduced arrays, the log proposal term and the reconstructed
    auxiliary ``u_p`` (the new-layer prior quantile in naive mode).
    """
    n, p1 = full.shape
    rows = np.arange(n)
    k_new = depths.shape[1]
    i = q + 1
    log_q = -math.log(z_max) + math.log(k_new)
    keep = np.arange(p1)[None, :] != i[:, None]
    if colour_full is None:
        lo, hi = bounds
        u = (full[rows, i] - lo) / (hi - lo)
        base = full
        log_q = log_q - math.log(hi - lo)
        log_q = np.full(n, log_q)
    else:
        srow = colour_full[i]
        jac = srow[rows, i] - srow[rows, i - 1]
        with np.errstate(divide="ignore", invalid="ignore"):
            u = (full[rows, i] - full[rows, i - 1]) / jac
            base = full - srow * u[:, None]
            log_q = log_q - 0.5 * u**2 - LOG_SQRT_2PI - np.log(np.abs(jac))
    old = base[keep].reshape(n, p1 - 1)
    dkeep = np.arange(k_new)[None, :] != q[:, None]
    old_depths = depths[dkeep].reshape(n, k_new - 1)
    return old, old_depths, np.asarray(log_q, dtype=float), u


def _as_batch(states, prior):
    if isinstance(states, ParticleState):
        return ParticleArray.from_states([states], prior)
    return states


def rj_birth(batch, profile: int, colour, prior: PriorSpec, rng=None, *, u_d=None, u_p=None,
             log_like=None, gamma: float = 1.0, loglike: Callable | None = None):
    """Propose one new interface on ``profile`` for every row of ``batch``.

    All rows must share one model. ``colour`` is the symmetric square root
    of the property covariance of the *larger* model (background plus
    layer log10 conductivities, or layer chargeabilities) or ``None`` for the
    naive proposal, which draws the new layer's property from its uniform
    prior and leaves the rest unchanged.

    Returns ``(proposal, log_alpha)``. ``log_alpha`` contains the prior
    ratio, proposal ratio and Jacobian; when ``loglike`` is given the
    tempered likelihood ratio ``gamma * (l' - l)`` is added. Rows that would
    exceed the maximum interface count get ``-inf``.
    """
    batch = _as_batch(batch, prior)
    rng = np.random.default_rng() if rng is None else rng
    n = len(batch)
    models = {(int(a), int(b)) for a, b in zip(batch.kappa, batch.lam)}
    if len(models) != 1:
        raise ValueError("rj_birth expects rows of a single model")
    model = ModelIndex(*models.pop())
    count = model.kappa if profile == CONDUCTIVE else model.lam
    cap = prior.kappa_max if profile == CONDUCTIVE else prior.lambda_max
    if count >= cap:
        return batch.copy(), np.full(n, -np.inf)
    u_d = rng.uniform(0.0, prior.z_max, n) if u_d is None else np.broadcast_to(u_d, (n,)).astype(float)
    if u_p is None:
        u_p = rng.random(n) if colour is None else rng.standard_normal(n)
    u_p = np.broadcast_to(u_p, (n,)).astype(float)
    idx = np.arange(n)
    full, depths = _profile_arrays(batch, idx, model, profile)
    new, nd, log_q, _ = _birth_core(full, depths, u_d, u_p, _full_colour(colour, profile),
                                     _bounds(prior, profile), prior.z_max)
    prop = batch.copy()
    _grow(prop, profile, count + 1)
    _write_profile(prop, idx, profile, new, nd)
    log_a = log_prior_array(prop, prior) - log_prior_array(batch, prior) + log_q
    if loglike is not None:
        l0 = loglike(batch) if log_like is None else log_like
        log_a = log_a + gamma * (loglike(prop) - l0)
    return prop, np.where(np.isnan(log_a), -np.inf, log_a)


def rj_death(batch, profile: int, colour, prior: PriorSpec, rng=None, *, index=None,
             log_like=None, gamma: float = 1.0, loglike: Callable | None = None):
    """Remove one uniformly chosen interface from ``profile`` (inverse of :func:`rj_birth`).

    ``colour`` belongs to the current (larger) model. ``index`` fixes the
    interface removed. Rows without an interface on ``profile`` get
    ``-inf``.
    """
    batch = _as_batch(batch, prior)
    rng = np.random.default_rng() if rng is None else rng
    n = len(batch)
    models = {(int(a), int(b)) for a, b in zip(batch.kappa, batch.lam)}
    if len(models) != 1:
        raise ValueError("rj_death expects rows of a single model")
    model = ModelIndex(*models.pop())
    count = model.kappa if profile == CONDUCTIVE else model.lam
    if count == 0:
        return batch.copy(), np.full(n, -np.inf)
    q = rng.integers(0, count, n) if index is None else np.broadcast_to(index, (n,)).astype(int)
    idx = np.arange(n)
    full, depths = _profile_arrays(batch, idx, model, profile)
    old, od, log_q, _ = _death_core(full, depths, q, _full_colour(colour, profile),
                                    _bounds(prior, profile), prior.z_max)
    prop = batch.copy()
    _write_profile(prop, idx, profile, old, od)
    log_a = log_prior_array(prop, prior) - log_prior_array(batch, prior) + log_q
    if loglike is not None:
        l0 = loglike(batch) if log_like is None else log_like
        log_a = log_a + gamma * (loglike(prop) - l0)
    return prop, np.where(np.isnan(log_a), -np.inf, log_a)


def _grow(batch: ParticleArray, profile: int, width: int):
    """Widen padded arrays in place if ``width`` exceeds their capacity."""
    if profile == CONDUCTIVE and batch.phi.shape[1] < width:
        extra = np.full((len(batch), width - batch.phi.shape[1]), np.nan)
        batch.phi = np.concatenate([batch.phi, extra], axis=1)
        batch.z_sigma = np.concatenate([batch.z_sigma, extra.copy()], axis=1)
    if profile == CHARGEABLE and batch.m.shape[1] < width:
        extra = np.full((len(batch), width - batch.m.shape[1]), np.nan)
        batch.m = np.concatenate([batch.m, extra], axis=1)
        batch.z_m = np.concatenate([batch.z_m, extra.copy()], axis=1)


# --------------------------------------------------------------------------
# mutation


def _naive_steps(model: ModelIndex, prior: PriorSpec) -> np.ndarray:
    """Random-walk step sizes of the fallback within-model proposal (10% of each range)."""
    k, l = model.kappa, model.lam
    span = np.concatenate([
        np.full(k + 1, np.diff(prior.phi_bounds)[0]),
        np.full(k, prior.z_max),
        np.full(l, np.diff(prior.m_bounds)[0]),
        np.full(l, prior.z_max),
        [np.diff(prior.tau_bounds)[0], np.diff(prior.c_bounds)[0]],
    ])
    return 0.1 * span


def _propose(cloud: ParticleCloud, suite: ProposalSuite, moves, profiles, rng, scale=None):
    """Build proposals for every particle; returns ``(proposal, log_q, possible)``.

    ``log_q`` holds the proposal ratio and Jacobian (not the prior or
    likelihood ratio); ``possible`` is False where the move leaves the
    model grid.
    """
    prior = cloud.prior
    scale = suite.scale if scale is None else scale
    cur = cloud.particles
    prop = cur.copy()
    n = cloud.n
    log_q = np.zeros(n)
    possible = np.ones(n, dtype=bool)
    for k, idx in cloud.groups():
        model = ModelIndex.from_flat(k, prior)
        mp = suite.get(k)
        # within-model: one principal axis (or one coordinate) per particle
        sel = idx[moves[idx] == WITHIN]
        if sel.size:
            x = model_vector(cur, sel, model)
            d = x.shape[1]
            axis = rng.integers(0, d, sel.size)
            z = rng.standard_normal(sel.size)
            if mp.naive:
                step = np.zeros_like(x)
                step[np.arange(sel.size), axis] = _naive_steps(model, prior)[axis] * z
            else:
                step = (scale * mp.sd[axis] * z)[:, None] * mp.axes[:, axis].T
            set_model_vector(prop, sel, model, x + step)
        for profile in (CONDUCTIVE, CHARGEABLE):
            count = model.kappa if profile == CONDUCTIVE else model.lam
            cap = prior.kappa_max if profile == CONDUCTIVE else prior.lambda_max
            # birth
            sel = idx[(moves[idx] == BIRTH) & (profiles[idx] == profile)]
            if sel.size:
                if count >= cap:
                    possible[sel] = False
                else:
                    big = ModelIndex(model.kappa + (profile == CONDUCTIVE), model.lam + (profile == CHARGEABLE))
                    bp = suite.get(big.flat(prior))
                    colour = None if bp.naive else (bp.colour_cond if profile == CONDUCTIVE else bp.colour_charge)
                    u_d = rng.uniform(0.0, prior.z_max, sel.size)
                    u_p = rng.random(sel.size) if colour is None else rng.standard_normal(sel.size)
                    full, depths = _profile_arrays(cur, sel, model, profile)
                    new, nd, lq, _ = _birth_core(full, depths, u_d, u_p, _full_colour(colour, profile),
                                                 _bounds(prior, profile), prior.z_max)
                    _write_profile(prop, sel, profile, new, nd)
                    log_q[sel] = lq
            # death
            sel = idx[(moves[idx] == DEATH) & (profiles[idx] == profile)]
            if sel.size:
                if count == 0:
                    possible[sel] = False
                else:
                    colour = None if mp.naive else (mp.colour_cond if profile == CONDUCTIVE else mp.colour_charge)
                    q = rng.integers(0, count, sel.size)
                    full, depths = _profile_arrays(cur, sel, model, profile)
                    old, od, lq, _ = _death_core(full, depths, q, _full_colour(colour, profile),
                                                 _bounds(prior, profile), prior.z_max)
                    _write_profile(prop, sel, profile, old, od)
                    log_q[sel] = lq
    return prop, log_q, possible


def _evaluate(cloud, prop, log_q, possible, loglike, gamma, lp_cur):
    """Log acceptance ratios and proposal log likelihoods."""
    lp_new = log_prior_array(prop, cloud.prior)
    live = possible & np.isfinite(lp_new) & np.isfinite(log_q)
    ll_new = np.full(cloud.n, -np.inf)
    if live.any():
        ll_new[live] = loglike(prop.take(np.flatnonzero(live)))
    ll_new = np.where(np.isnan(ll_new), -np.inf, ll_new)
    with np.errstate(invalid="ignore"):
        dl = np.where(np.isneginf(ll_new), -np.inf, gamma * (ll_new - cloud.log_like))
        log_a = dl + lp_new - lp_cur + log_q
    log_a = np.where(live & ~np.isnan(log_a), log_a, -np.inf)
    return log_a, ll_new


def _active_profiles(prior: PriorSpec) -> np.ndarray:
    """Profiles that can hold interfaces; birth/death pick uniformly among them."""
    act = [p for p, cap in ((CONDUCTIVE, prior.kappa_max), (CHARGEABLE, prior.lambda_max)) if cap > 0]
    return np.array(act or [CONDUCTIVE])


def _draw_profiles(n, prior, rng):
    act = _active_profiles(prior)
    return act[rng.integers(0, act.size, n)]


def _draw_moves(n, suite, rng):
    moves = rng.choice(3, size=n, p=np.asarray(suite.move_probs, dtype=float))
    return moves, _draw_profiles(n, suite.prior, rng)


def mutate(cloud: ParticleCloud, suite: ProposalSuite, n_sweeps: int, gamma: float,
           rng: np.random.Generator, loglike: Callable) -> dict:
    """``n_sweeps`` Metropolis-Hastings-Green sweeps on ``prior * L^gamma``.

    Each sweep gives every particle one move (within-model, birth or death
    on a random profile). Failed or impossible proposals are rejected.
    Returns acceptance counts per move type.
    """
    stats = {name: [0, 0] for name in MOVE_NAMES}
    if n_sweeps <= 0:
        return stats
    lp = log_prior_array(cloud.particles, cloud.prior)
    for _ in range(n_sweeps):
        moves, profiles = _draw_moves(cloud.n, suite, rng)
        prop, log_q, possible = _propose(cloud, suite, moves, profiles, rng)
        log_a, ll_new = _evaluate(cloud, prop, log_q, possible, loglike, gamma, lp)
        take = np.log(rng.random(cloud.n)) < log_a
        for m, name in enumerate(MOVE_NAMES):
            sel = (moves == m) & possible
            stats[name][0] += int(np.sum(take & sel))
            stats[name][1] += int(np.sum(sel))
        if take.any():
            ti = np.flatnonzero(take)
            _grow(cloud.particles, CONDUCTIVE, prop.phi.shape[1])
            _grow(cloud.particles, CHARGEABLE, prop.m.shape[1])
            cloud.particles.put(ti, prop.take(ti))
            cloud.log_like[ti] = ll_new[ti]
            lp[ti] = log_prior_array(prop.take(ti), cloud.prior)
    # within-model resampling keeps counts; moves change them, so renormalise
    cloud.log_w = -np.log(cloud.n_by_model[cloud.models]).astype(float)
    return stats


def _trial_rates(cloud: ParticleCloud, suite: ProposalSuite, gamma, rng, loglike, fraction):
    """Expected acceptance per move type on a particle subsample (states untouched)."""
    n = cloud.n
    m = max(1, int(round(fraction * n)))
    sub_idx = np.sort(rng.choice(n, size=m, replace=False))
    sub = _subcloud(cloud, sub_idx)
    lp = log_prior_array(sub.particles, sub.prior)
    rates = {}
    for move in (BIRTH, DEATH):
        moves = np.full(m, move)
        profiles = _draw_profiles(m, sub.prior, rng)
        prop, log_q, possible = _propose(sub, suite, moves, profiles, rng)
        log_a, _ = _evaluate(sub, prop, log_q, possible, loglike, gamma, lp)
        a = np.exp(np.minimum(log_a, 0.0))[possible]
        rates[MOVE_NAMES[move]] = float(a.mean()) if a.size else float("nan")
    return rates


def _subcloud(cloud, idx):
    return ParticleCloud(cloud.prior, cloud.particles.take(idx), cloud.log_like[idx].copy(),
                         cloud.log_w[idx].copy(), cloud.log_z, cloud.gamma)


def tune_scale(cloud: ParticleCloud, suite: ProposalSuite, gamma, rng, loglike, *,
               fraction=0.1, rounds=5, target=0.44, tol=0.05):
    """Bisection in log scale on trial within-model acceptance; returns ``(scale, rate)``."""
    n = cloud.n
    m = max(1, int(round(fraction * n)))
    sub = _subcloud(cloud, np.sort(rng.choice(n, size=m, replace=False)))
    lp = log_prior_array(sub.particles, sub.prior)
    lo, hi = math.log(suite.scale) - math.log(16.0), math.log(suite.scale) + math.log(16.0)
    s = suite.scale
    rate = float("nan")
    for _ in range(rounds):
        moves = np.full(m, WITHIN)
        prop, log_q, possible = _propose(sub, suite, moves, np.zeros(m, dtype=int), rng, scale=s)
        log_a, _ = _evaluate(sub, prop, log_q, possible, loglike, gamma, lp)
        rate = float(np.exp(np.minimum(log_a, 0.0)).mean())
        if abs(rate - target) <= tol:
            break
        if rate > target:
            lo = math.log(s)
        else:
            hi = math.log(s)
        s = math.exp(0.5 * (lo + hi))
    return s, rate


# --------------------------------------------------------------------------
# driver


@dataclass
class RjsmcResult:
    """Final cloud, per-model log evidence and per-step diagnostics.

    ``log_z_complete[k]`` is False when model ``k`` was empty at some
    reweighting step, so its evidence misses those increments.
    """

    cloud: ParticleCloud
    log_z: np.ndarray
    diagnostics: list
    log_z_complete: np.ndarray | None = None

    @property
    def log_evidence_by_model(self) -> dict:
        prior = self.cloud.prior
        return {ModelIndex.from_flat(k, prior): float(v) for k, v in enumerate(self.log_z)}


def aem_log_likelihood(data: Sounding, system: AemSystem, noise: NoiseModel,
                       operator: ForwardOperator | None = None) -> Callable:
    """Batched log likelihood of a sounding; forward failures give ``-inf``."""
    op = operator_for(system) if operator is None else operator
    y = data.y if isinstance(data, Sounding) else np.asarray(data, dtype=float)
    if y.size != system.n_gates:
        raise ValueError(f"sounding has {y.size} gates, system has {system.n_gates}")

    def loglike(batch: ParticleArray) -> np.ndarray:
        values, ok = op.response_array(batch)
        return log_likelihood_array(y, values, noise, ok)

    return loglike


def _record(cloud, step):
    return HistoryRecord(step, cloud.gamma, cloud.particles.copy(), cloud.log_like.copy(),
                         cloud.log_z.copy())


def sample_rjsmc(loglike: Callable, prior: PriorSpec, config: RjsmcConfig, *,
                 on_step: Callable | None = None) -> RjsmcResult:
    """Run the adaptive RJSMC sampler for any batched log likelihood.

    Parameters
    ----------
    loglike : callable
        Maps a :class:`ParticleArray` to log likelihoods (``-inf`` on failure).
    prior : PriorSpec
    config : RjsmcConfig
    on_step : callable, optional
        Called as ``on_step(record, cloud)`` after every step.

    Returns
    -------
    RjsmcResult
        Final cloud (equal weights within models), per-model log evidence
        ``log p(y | k)`` and per-step diagnostics.
    """
    n = config.n_particles
    seed = config.seed
    particles = sample_prior_array(prior, n, step_rng(seed, 0, 0))
    ll = np.asarray(loglike(particles), dtype=float)
    ll = np.where(np.isnan(ll), -np.inf, ll)
    if np.mean(~np.isfinite(ll)) > 0.5:
        raise SmcError(f"likelihood failed for {np.sum(~np.isfinite(ll))} of {n} initial particles")
    cloud = ParticleCloud(prior, particles, ll, np.zeros(n), np.zeros(prior.n_models))
    counts = cloud.n_by_model
    cloud.log_z = np.where(counts > 0, 0.0, np.nan)
    cloud.log_z_complete = counts > 0
    cloud.log_w = -np.log(counts[cloud.models]).astype(float)
    cloud.history.append(_record(cloud, 0))
    scale = 2.38
    diag = []
    for t in range(1, config.max_steps + 1):
        g = next_gamma(cloud, config)
        inc = reweight_cloud(cloud, g)
        t_ess = tess(cloud)
        m_ess = model_ess(cloud)
        within_model_resample(cloud, step_rng(seed, t, 1))
        suite = adapt_proposals(cloud, cloud.history[-config.history_steps:], g, scale=scale,
                                move_probs=config.move_probs)
        r_trial = step_rng(seed, t, 2)
        scale, rate_w = tune_scale(cloud, suite, g, r_trial, loglike, fraction=config.trial_fraction,
                                   rounds=config.tune_rounds, target=config.target_acceptance)
        suite.scale = scale
        rates = _trial_rates(cloud, suite, g, r_trial, loglike, config.trial_fraction)
        rates["within"] = rate_w
        # per-sweep chance that a particle accepts a move of each type
        per_sweep = [config.move_probs[MOVE_NAMES.index(k)] * v for k, v in rates.items()
                     if np.isfinite(v) and config.move_probs[MOVE_NAMES.index(k)] > 0]
        r_steps = min(config.max_mutation_steps,
                      num_mutation_steps(per_sweep or [0.99], config.c_mutation))
        stats = mutate(cloud, suite, r_steps, g, step_rng(seed, t, 3), loglike)
        cloud.history.append(_record(cloud, t))
        if len(cloud.history) > config.history_steps:
            cloud.history = cloud.history[-config.history_steps:]
        rec = {
            "step": t,
            "gamma": g,
            "tess": t_ess,
            "n_by_model": cloud.n_by_model.tolist(),
            "ess_by_model": m_ess.tolist(),
            "log_increment_by_model": [None if np.isnan(v) else float(v) for v in inc],
            "log_z_by_model": [None if np.isnan(v) else float(v) for v in cloud.log_z],
            "trial_acceptance": rates,
            "acceptance": {k: (a / b if b else None) for k, (a, b) in stats.items()},
            "scale": scale,
            "n_naive": int(sum(p.naive for p in suite.models.values())),
            "mutation_steps": r_steps,
        }
        diag.append(rec)
        log.info("step %d gamma=%.4g tess=%.1f R=%d", t, g, t_ess, r_steps)
        if on_step is not None:
            on_step(rec, cloud)
        if g >= 1.0:
            break
    else:
        raise SmcError(f"temperature did not reach 1 within {config.max_steps} steps")
    return RjsmcResult(cloud, cloud.log_z.copy(), diag, cloud.log_z_complete.copy())


def run_rjsmc(data: Sounding, system: AemSystem, noise: NoiseModel, prior: PriorSpec,
              config: RjsmcConfig, *, operator: ForwardOperator | None = None,
              on_step: Callable | None = None) -> RjsmcResult:
    """Invert one AEM sounding; see :func:`sample_rjsmc`."""
    return sample_rjsmc(aem_log_likelihood(data, system, noise, operator), prior, config,
                        on_step=on_step)
