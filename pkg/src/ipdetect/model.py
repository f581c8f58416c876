"""Decoupled transdimensional layered-Earth models.

A state carries two independent interface stacks: a conductive profile
(``kappa`` interfaces, log10 conductivities) and a chargeable profile
(``lam`` interfaces, intrinsic chargeabilities). Layers are numbered from the
surface down; the surface layer of each profile is the *background*. The
background conductivity is a free parameter, the background chargeability is
fixed at zero. Layer ``i`` (1-based) sits below interface ``i``.

Two representations are provided:

* :class:`ParticleState` -- one sample, used by the public single-state API.
* :class:`ParticleArray` -- ``n`` samples in padded arrays, used by the
  samplers and the batched forward model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.special import gammaln

__all__ = [
    "ModelIndex",
    "PriorSpec",
    "ParticleState",
    "ParticleArray",
    "EarthProfile",
    "sample_prior",
    "sample_prior_array",
    "log_prior_density",
    "log_prior_array",
    "merge_profiles",
    "merged_segments",
    "model_vector",
    "vector_layout",
]


@dataclass(frozen=True, order=True)
class ModelIndex:
    """Model indicator: number of conductive and chargeable interfaces."""

    kappa: int
    lam: int

    @property
    def chargeable(self) -> bool:
        return self.lam > 0

    def flat(self, prior: "PriorSpec") -> int:
        return self.kappa * (prior.lambda_max + 1) + self.lam

    @classmethod
    def from_flat(cls, k: int, prior: "PriorSpec") -> "ModelIndex":
        return cls(int(k) // (prior.lambda_max + 1), int(k) % (prior.lambda_max + 1))

    def __str__(self) -> str:
        return f"({self.kappa},{self.lam})"


@dataclass(frozen=True)
class PriorSpec:
    """Bounds of the decoupled layered-model prior.

    Defaults: at most 9 interfaces per profile (100 models), interfaces in
    (0, 400) m, log10 conductivity in [-4, 2], chargeability in [0, 1],
    time constant and frequency dependence in (0, 1].
    """

    kappa_max: int = 9
    lambda_max: int = 9
    z_max: float = 400.0
    phi_bounds: tuple[float, float] = (-4.0, 2.0)
    m_bounds: tuple[float, float] = (0.0, 1.0)
    tau_bounds: tuple[float, float] = (0.0, 1.0)
    c_bounds: tuple[float, float] = (0.0, 1.0)

    def __post_init__(self):
        if self.kappa_max < 0 or self.lambda_max < 0:
            raise ValueError("kappa_max and lambda_max must be non-negative")
        if not (self.z_max > 0 and np.isfinite(self.z_max)):
            raise ValueError("z_max must be positive and finite")
        for name in ("phi_bounds", "m_bounds", "tau_bounds", "c_bounds"):
            lo, hi = getattr(self, name)
            if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
                raise ValueError(f"{name} must be finite with low < high")
            object.__setattr__(self, name, (float(lo), float(hi)))
        if self.m_bounds[0] < 0 or self.m_bounds[1] > 1:
            raise ValueError("chargeability bounds must lie in [0, 1]")
        if self.tau_bounds[0] < 0 or self.c_bounds[0] < 0 or self.c_bounds[1] > 1:
            raise ValueError("tau must be positive and c must lie in (0, 1]")

    @property
    def n_models(self) -> int:
        return (self.kappa_max + 1) * (self.lambda_max + 1)

    def models(self) -> list[ModelIndex]:
        return [
            ModelIndex(k, l)
            for k in range(self.kappa_max + 1)
            for l in range(self.lambda_max + 1)
        ]

    def log_model_prior(self) -> float:
        """Log prior mass of any single model (uniform over the model grid)."""
        return -math.log(self.kappa_max + 1) - math.log(self.lambda_max + 1)

    def to_dict(self) -> dict:
        return {
            "kappa_max": self.kappa_max,
            "lambda_max": self.lambda_max,
            "z_max": self.z_max,
            "phi_bounds": list(self.phi_bounds),
            "m_bounds": list(self.m_bounds),
            "tau_bounds": list(self.tau_bounds),
            "c_bounds": list(self.c_bounds),
        }

    @classmethod
    def from_dict(cls, d: dict | None) -> "PriorSpec":
        d = dict(d or {})
        for key in ("phi_bounds", "m_bounds", "tau_bounds", "c_bounds"):
            if key in d:
                d[key] = tuple(d[key])
        return cls(**d)


@dataclass(frozen=True)
class ParticleState:
    """One point of the transdimensional parameter space.

    ``phi`` and ``z_sigma`` have length ``kappa``; ``m`` and ``z_m`` have
    length ``lam``. ``tau`` and ``c`` are always carried and are inert when
    ``lam == 0``.
    """

    phi_b: float
    phi: np.ndarray = field(default_factory=lambda: np.zeros(0))
    z_sigma: np.ndarray = field(default_factory=lambda: np.zeros(0))
    m: np.ndarray = field(default_factory=lambda: np.zeros(0))
    z_m: np.ndarray = field(default_factory=lambda: np.zeros(0))
    tau: float = 1e-3
    c: float = 1.0

    def __post_init__(self):
        for name in ("phi", "z_sigma", "m", "z_m"):
            object.__setattr__(
                self, name, np.atleast_1d(np.asarray(getattr(self, name), dtype=float))
            )
        if self.phi.size != self.z_sigma.size:
            raise ValueError("phi and z_sigma must have equal length")
        if self.m.size != self.z_m.size:
            raise ValueError("m and z_m must have equal length")

    @property
    def model(self) -> ModelIndex:
        return ModelIndex(self.phi.size, self.m.size)

    def replace(self, **changes) -> "ParticleState":
        return replace(self, **changes)


@dataclass(frozen=True)
class EarthProfile:
    """Merged piecewise-constant Earth.

    ``interfaces`` has ``n`` ascending depths; the per-segment arrays have
    ``n + 1`` entries, the last segment extending to infinite depth.
    """

    interfaces: np.ndarray
    sigma_inf: np.ndarray
    m_seg: np.ndarray
    tau: float
    c: float

    @property
    def thickness(self) -> np.ndarray:
        """Thickness of every segment but the bottom half-space."""
        return np.diff(np.concatenate([[0.0], self.interfaces]))

    @property
    def n_segments(self) -> int:
        return self.sigma_inf.size


# --------------------------------------------------------------------------
# single-state API


def sample_prior(prior: PriorSpec, rng: np.random.Generator) -> ParticleState:
    """Draw one state from the joint prior of models and parameters."""
    return sample_prior_array(prior, 1, rng).state(0)


def log_prior_density(state: ParticleState, prior: PriorSpec) -> float:
    """Joint log prior density, ``-inf`` outside the support."""
    return float(log_prior_array(ParticleArray.from_states([state], prior), prior)[0])


def merge_profiles(state: ParticleState) -> EarthProfile:
    """Direct sum of the conductive and chargeable profiles.

    Duplicate interface depths are collapsed so no segment has zero
    thickness.
    """
    zs = np.asarray(state.z_sigma, dtype=float)
    zm = np.asarray(state.z_m, dtype=float)
    interfaces = np.unique(np.concatenate([zs, zm]))
    tops = np.concatenate([[0.0], interfaces])
    # layer index = number of interfaces at or above the segment top
    i_cond = np.searchsorted(zs, tops, side="right")
    i_charge = np.searchsorted(zm, tops, side="right")
    phis = np.concatenate([[state.phi_b], state.phi])
    ms = np.concatenate([[0.0], state.m])
    return EarthProfile(
        interfaces=interfaces,
        sigma_inf=10.0 ** phis[i_cond],
        m_seg=ms[i_charge],
        tau=float(state.tau),
        c=float(state.c),
    )


# --------------------------------------------------------------------------
# batched representation


@dataclass
class ParticleArray:
    """``n`` states in padded arrays.

    Entries past ``kappa[i]`` (resp. ``lam[i]``) are NaN. Rows are mutable;
    the samplers update them in place.
    """

    kappa: np.ndarray
    lam: np.ndarray
    phi_b: np.ndarray
    phi: np.ndarray
    z_sigma: np.ndarray
    m: np.ndarray
    z_m: np.ndarray
    tau: np.ndarray
    c: np.ndarray

    def __len__(self) -> int:
        return self.kappa.size

    @property
    def kappa_max(self) -> int:
        return self.phi.shape[1]

    @property
    def lambda_max(self) -> int:
        return self.m.shape[1]

    @classmethod
    def empty(cls, n: int, kappa_max: int, lambda_max: int) -> "ParticleArray":
        return cls(
            kappa=np.zeros(n, dtype=np.int64),
            lam=np.zeros(n, dtype=np.int64),
            phi_b=np.zeros(n),
            phi=np.full((n, kappa_max), np.nan),
            z_sigma=np.full((n, kappa_max), np.nan),
            m=np.full((n, lambda_max), np.nan),
            z_m=np.full((n, lambda_max), np.nan),
            tau=np.zeros(n),
            c=np.zeros(n),
        )

    @classmethod
    def from_states(cls, states, prior: PriorSpec) -> "ParticleArray":
        states = list(states)
        kmax = max([prior.kappa_max] + [s.phi.size for s in states])
        lmax = max([prior.lambda_max] + [s.m.size for s in states])
        out = cls.empty(len(states), kmax, lmax)
        for i, s in enumerate(states):
            k, l = s.phi.size, s.m.size
            out.kappa[i], out.lam[i] = k, l
            out.phi_b[i], out.tau[i], out.c[i] = s.phi_b, s.tau, s.c
            out.phi[i, :k], out.z_sigma[i, :k] = s.phi, s.z_sigma
            out.m[i, :l], out.z_m[i, :l] = s.m, s.z_m
        return out

    def state(self, i: int) -> ParticleState:
        k, l = int(self.kappa[i]), int(self.lam[i])
        return ParticleState(
            phi_b=float(self.phi_b[i]),
            phi=self.phi[i, :k].copy(),
            z_sigma=self.z_sigma[i, :k].copy(),
            m=self.m[i, :l].copy(),
            z_m=self.z_m[i, :l].copy(),
            tau=float(self.tau[i]),
            c=float(self.c[i]),
        )

    def take(self, idx) -> "ParticleArray":
        idx = np.asarray(idx)
        return ParticleArray(**{f: getattr(self, f)[idx].copy() for f in _FIELDS})

    def put(self, idx, other: "ParticleArray") -> None:
        """Overwrite rows ``idx`` with the rows of ``other``."""
        for f in _FIELDS:
            getattr(self, f)[idx] = getattr(other, f)

    def copy(self) -> "ParticleArray":
        return ParticleArray(**{f: getattr(self, f).copy() for f in _FIELDS})

    def model_flat(self, prior: PriorSpec) -> np.ndarray:
        return self.kappa * (prior.lambda_max + 1) + self.lam

    @staticmethod
    def concatenate(parts) -> "ParticleArray":
        parts = list(parts)
        return ParticleArray(
            **{f: np.concatenate([getattr(p, f) for p in parts]) for f in _FIELDS}
        )


_FIELDS = ("kappa", "lam", "phi_b", "phi", "z_sigma", "m", "z_m", "tau", "c")


def _sorted_uniform_depths(n, width, count, z_max, rng):
    """Rows of ``count[i]`` sorted U(0, z_max) depths, NaN padded to ``width``."""
    z = rng.uniform(0.0, z_max, size=(n, width))
    z[np.arange(width)[None, :] >= count[:, None]] = np.inf
    z.sort(axis=1)
    z[~np.isfinite(z)] = np.nan
    return z


def sample_prior_array(prior: PriorSpec, n: int, rng: np.random.Generator) -> ParticleArray:
    """Draw ``n`` independent states from the joint prior."""
    out = ParticleArray.empty(n, prior.kappa_max, prior.lambda_max)
    out.kappa[:] = rng.integers(0, prior.kappa_max + 1, size=n)
    out.lam[:] = rng.integers(0, prior.lambda_max + 1, size=n)
    out.phi_b[:] = rng.uniform(*prior.phi_bounds, size=n)
    kmask = np.arange(prior.kappa_max)[None, :] < out.kappa[:, None]
    lmask = np.arange(prior.lambda_max)[None, :] < out.lam[:, None]
    phi = rng.uniform(*prior.phi_bounds, size=(n, prior.kappa_max))
    out.phi[:] = np.where(kmask, phi, np.nan)
    m = rng.uniform(*prior.m_bounds, size=(n, prior.lambda_max))
    out.m[:] = np.where(lmask, m, np.nan)
    out.z_sigma[:] = _sorted_uniform_depths(n, prior.kappa_max, out.kappa, prior.z_max, rng)
    out.z_m[:] = _sorted_uniform_depths(n, prior.lambda_max, out.lam, prior.z_max, rng)
    # open lower bound: (lo, hi]
    out.tau[:] = prior.tau_bounds[1] - rng.uniform(0, 1, n) * np.diff(prior.tau_bounds)[0]
    out.c[:] = prior.c_bounds[1] - rng.uniform(0, 1, n) * np.diff(prior.c_bounds)[0]
    return out


def _depths_ok(z, count, z_max):
    width = z.shape[1]
    valid = np.arange(width)[None, :] < count[:, None]
    inside = np.where(valid, (z > 0) & (z < z_max), True)
    if width > 1:
        asc = np.where(valid[:, 1:], np.diff(z, axis=1) > 0, True)
        ok = inside.all(axis=1) & asc.all(axis=1)
    else:
        ok = inside.all(axis=1)
    return ok


def log_prior_array(batch: ParticleArray, prior: PriorSpec) -> np.ndarray:
    """Vectorized joint log prior density of every row of ``batch``."""
    k, l = batch.kappa, batch.lam
    lo, hi = prior.phi_bounds
    mlo, mhi = prior.m_bounds
    kmask = np.arange(batch.kappa_max)[None, :] < k[:, None]
    lmask = np.arange(batch.lambda_max)[None, :] < l[:, None]
    ok = (k >= 0) & (k <= prior.kappa_max) & (l >= 0) & (l <= prior.lambda_max)
    ok &= (batch.phi_b >= lo) & (batch.phi_b <= hi)
    with np.errstate(invalid="ignore"):
        ok &= np.where(kmask, (batch.phi >= lo) & (batch.phi <= hi), True).all(axis=1)
        ok &= np.where(lmask, (batch.m >= mlo) & (batch.m <= mhi), True).all(axis=1)
        ok &= _depths_ok(batch.z_sigma, k, prior.z_max)
        ok &= _depths_ok(batch.z_m, l, prior.z_max)
    ok &= (batch.tau > prior.tau_bounds[0]) & (batch.tau <= prior.tau_bounds[1])
    ok &= (batch.c > prior.c_bounds[0]) & (batch.c <= prior.c_bounds[1])
    logz = math.log(prior.z_max)
    lp = (
        prior.log_model_prior()
        + gammaln(k + 1) - k * logz
        + gammaln(l + 1) - l * logz
        - (k + 1) * math.log(hi - lo)
        - l * math.log(mhi - mlo)
        - math.log(np.diff(prior.tau_bounds)[0])
        - math.log(np.diff(prior.c_bounds)[0])
    )
    return np.where(ok, lp, -np.inf)


def merged_segments(batch: ParticleArray):
    """Padded merged profiles for the batched forward model.

    Returns ``(thickness, sigma_inf, m_seg, n_seg)`` where ``thickness`` has
    shape ``(n, S - 1)`` and the per-segment arrays shape ``(n, S)`` with
    ``S = kappa_max + lambda_max + 1``. Duplicate interfaces are kept as
    zero-thickness segments, which leave the layered response unchanged.
    Padding segments repeat the bottom half-space.
    """
    n = len(batch)
    zs = np.where(np.isnan(batch.z_sigma), np.inf, batch.z_sigma)
    zm = np.where(np.isnan(batch.z_m), np.inf, batch.z_m)
    inter = np.sort(np.concatenate([zs, zm], axis=1), axis=1)
    tops = np.concatenate([np.zeros((n, 1)), inter], axis=1)
    i_cond = (zs[:, None, :] <= tops[:, :, None]).sum(axis=2)
    i_charge = (zm[:, None, :] <= tops[:, :, None]).sum(axis=2)
    phis = np.concatenate([batch.phi_b[:, None], batch.phi], axis=1)
    ms = np.concatenate([np.zeros((n, 1)), batch.m], axis=1)
    rows = np.arange(n)[:, None]
    sigma = 10.0 ** phis[rows, i_cond]
    mseg = ms[rows, i_charge]
    n_seg = batch.kappa + batch.lam + 1
    # padding segments (top = inf) copy the deepest real segment
    last = n_seg - 1
    pad = np.arange(tops.shape[1])[None, :] > last[:, None]
    sigma = np.where(pad, sigma[np.arange(n), last][:, None], sigma)
    mseg = np.where(pad, mseg[np.arange(n), last][:, None], mseg)
    with np.errstate(invalid="ignore"):
        thick = np.diff(tops, axis=1)
    thick = np.where(np.isfinite(thick), thick, 0.0)
    return thick, sigma, mseg, n_seg


# --------------------------------------------------------------------------
# flat parameter vectors per model


def vector_layout(model: ModelIndex) -> dict[str, slice]:
    """Slices of the flat parameter vector of ``model``.

    Order: background log10 conductivity, layer log10 conductivities,
    conductive depths, chargeabilities, chargeable depths, tau, c.
    """
    k, l = model.kappa, model.lam
    return {
        "phi": slice(0, k + 1),
        "z_sigma": slice(k + 1, 2 * k + 1),
        "m": slice(2 * k + 1, 2 * k + 1 + l),
        "z_m": slice(2 * k + 1 + l, 2 * k + 1 + 2 * l),
        "tau": slice(2 * k + 1 + 2 * l, 2 * k + 2 + 2 * l),
        "c": slice(2 * k + 2 + 2 * l, 2 * k + 3 + 2 * l),
    }


def model_vector(batch: ParticleArray, idx, model: ModelIndex) -> np.ndarray:
    """Flat parameter vectors, shape ``(len(idx), 2k + 2l + 3)``."""
    idx = np.asarray(idx)
    k, l = model.kappa, model.lam
    return np.concatenate(
        [
            batch.phi_b[idx, None],
            batch.phi[idx, :k],
            batch.z_sigma[idx, :k],
            batch.m[idx, :l],
            batch.z_m[idx, :l],
            batch.tau[idx, None],
            batch.c[idx, None],
        ],
        axis=1,
    )


def set_model_vector(batch: ParticleArray, idx, model: ModelIndex, x: np.ndarray) -> None:
    """Write flat vectors back into rows ``idx`` (all of model ``model``)."""
    idx = np.asarray(idx)
    lay = vector_layout(model)
    k, l = model.kappa, model.lam
    batch.kappa[idx], batch.lam[idx] = k, l
    phis = x[:, lay["phi"]]
    batch.phi_b[idx] = phis[:, 0]
    batch.phi[idx, :k] = phis[:, 1:]
    batch.phi[idx, k:] = np.nan
    batch.z_sigma[idx, :k] = x[:, lay["z_sigma"]]
    batch.z_sigma[idx, k:] = np.nan
    batch.m[idx, :l] = x[:, lay["m"]]
    batch.m[idx, l:] = np.nan
    batch.z_m[idx, :l] = x[:, lay["z_m"]]
    batch.z_m[idx, l:] = np.nan
    batch.tau[idx] = x[:, lay["tau"]][:, 0]
    batch.c[idx] = x[:, lay["c"]][:, 0]
