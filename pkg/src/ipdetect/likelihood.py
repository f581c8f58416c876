"""Diagonal Gaussian likelihood under the additive plus multiplicative noise model."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .forward import AemSystem, ForwardOperator, forward
from .model import ParticleState

__all__ = [
    "EPS_AN_FLOOR",
    "NoiseModel",
    "Sounding",
    "noise_variance",
    "log_likelihood",
    "log_likelihood_array",
    "simulate_sounding",
]

# smallest additive noise accepted in a NoiseModel (pT/s)
EPS_AN_FLOOR = 1e-3


@dataclass(frozen=True)
class NoiseModel:
    """Per-gate additive noise ``eps_an`` (pT/s) and multiplicative fraction ``eps_mn``.

    ``eps_an`` may be a scalar, broadcast to every gate when used. Values
    below :data:`EPS_AN_FLOOR` are rejected unless ``enforce_floor=False``,
    which exists for zero-noise tests.
    """

    eps_an: np.ndarray | float = EPS_AN_FLOOR
    eps_mn: float = 0.05
    enforce_floor: bool = field(default=True, repr=False)

    def __post_init__(self):
        an = np.asarray(self.eps_an, dtype=float)
        if an.ndim > 1:
            raise ValueError("eps_an must be a scalar or a 1-d per-gate array")
        if not np.all(np.isfinite(an)) or np.any(an < 0):
            raise ValueError("eps_an must be finite and non-negative")
        if self.enforce_floor and np.any(an < EPS_AN_FLOOR):
            raise ValueError(f"eps_an must be >= {EPS_AN_FLOOR} pT/s")
        if not np.isfinite(self.eps_mn) or self.eps_mn < 0:
            raise ValueError("eps_mn must be finite and >= 0")
        object.__setattr__(self, "eps_an", an)

    def additive(self, n_gates: int) -> np.ndarray:
        an = self.eps_an
        if an.ndim == 0:
            return np.full(n_gates, float(an))
        if an.size != n_gates:
            raise ValueError(f"eps_an has {an.size} entries, expected {n_gates}")
        return an

    def to_dict(self) -> dict:
        an = self.eps_an
        return {"eps_an": float(an) if an.ndim == 0 else an.tolist(), "eps_mn": float(self.eps_mn)}

    @classmethod
    def from_dict(cls, d: dict | None) -> "NoiseModel":
        d = dict(d or {})
        return cls(eps_an=d.get("eps_an", EPS_AN_FLOOR), eps_mn=d.get("eps_mn", 0.05))


@dataclass(frozen=True)
class Sounding:
    """Observed per-gate dB/dt (pT/s) with location and identifiers.

    ``eps_an`` optionally carries per-gate additive noise measured for this
    sounding; it replaces the configured additive noise when inverting.
    """

    y: np.ndarray
    location: tuple[float, float, float] = (0.0, 0.0, 0.0)
    line_id: str = ""
    fiducial: float = 0.0
    eps_an: np.ndarray | None = None

    def __post_init__(self):
        y = np.asarray(self.y, dtype=float)
        if y.ndim != 1 or y.size == 0:
            raise ValueError("sounding data must be a non-empty 1-d array")
        if not np.all(np.isfinite(y)):
            raise ValueError("sounding data must be finite")
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "location", tuple(float(v) for v in self.location))
        if self.eps_an is not None:
            an = np.asarray(self.eps_an, dtype=float)
            if an.shape != y.shape:
                raise ValueError("eps_an must have one entry per gate")
            object.__setattr__(self, "eps_an", an)

    def noise(self, default: NoiseModel) -> NoiseModel:
        """``default`` with this sounding's additive noise, when it has one."""
        if self.eps_an is None:
            return default
        return NoiseModel(eps_an=self.eps_an, eps_mn=default.eps_mn)

    def __len__(self) -> int:
        return self.y.size


def noise_variance(y_theta, noise: NoiseModel) -> np.ndarray:
    """Diagonal of the data covariance: ``eps_an**2 + (eps_mn * y_theta)**2``.

    Broadcasts over leading axes of ``y_theta``; the last axis is gates.
    """
    y_theta = np.asarray(y_theta, dtype=float)
    an = noise.additive(y_theta.shape[-1])
    return an**2 + (noise.eps_mn * y_theta) ** 2


def log_likelihood(y, y_theta, noise: NoiseModel) -> float:
    """Gaussian log density of ``y`` given the predicted response ``y_theta``.

    The covariance depends on ``y_theta``, so the normalisation term is kept.
    """
    y = y.y if isinstance(y, Sounding) else np.asarray(y, dtype=float)
    y_theta = np.asarray(y_theta, dtype=float)
    if y.shape != y_theta.shape:
        raise ValueError(f"length mismatch: {y.shape} vs {y_theta.shape}")
    var = noise_variance(y_theta, noise)
    return float(-0.5 * np.sum((y - y_theta) ** 2 / var + np.log(2 * np.pi * var)))


def log_likelihood_array(y, y_theta: np.ndarray, noise: NoiseModel, ok=None) -> np.ndarray:
    """Row-wise :func:`log_likelihood` for ``y_theta`` of shape ``(n, n_gates)``.

    Rows flagged ``ok = False`` (forward failures) get ``-inf``.
    """
    y = y.y if isinstance(y, Sounding) else np.asarray(y, dtype=float)
    y_theta = np.asarray(y_theta, dtype=float)
    if y_theta.shape[-1] != y.size:
        raise ValueError(f"length mismatch: {y.size} vs {y_theta.shape[-1]}")
    var = noise_variance(y_theta, noise)
    with np.errstate(invalid="ignore"):
        ll = -0.5 * np.sum((y - y_theta) ** 2 / var + np.log(2 * np.pi * var), axis=-1)
    if ok is not None:
        ll = np.where(ok, ll, -np.inf)
    return np.where(np.isfinite(ll), ll, -np.inf)


def simulate_sounding(state: ParticleState, system: AemSystem, noise: NoiseModel,
                      rng: np.random.Generator, *, operator: ForwardOperator | None = None,
                      **meta) -> Sounding:
    """Forward response of ``state`` plus Gaussian noise drawn from ``noise``."""
    clean = forward(state, system, operator)
    sd = np.sqrt(noise_variance(clean, noise))
    return Sounding(clean + sd * rng.standard_normal(clean.size), **meta)
