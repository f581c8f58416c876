"""Off-time dB/dt of a concentric-loop airborne TEM system over a layered Earth.

The chain is quasi-static except for the Cole-Cole complex conductivity:

    merged profile -> TE reflection coefficient (recursive, bottom-up)
    -> J1 Hankel transform at the loop radius (201-pt digital filter)
    -> frequency response on a log grid
    -> sine / cosine digital filter to the step-off transient
    -> waveform convolution -> mean over each gate (8-pt Gauss-Legendre).

Everything after the reflection coefficient is linear in the real part of the
frequency response, taken relative to its Earth-independent inductive limit
(``r_TE -> -1``), so it is folded once per system into a dense matrix
(:attr:`ForwardOperator.time_matrix`). Only the layered kernel is evaluated
per particle, in a numba loop.

Sign convention: ``exp(+i omega t)`` time dependence; reported values are the
negative time derivative of the vertical secondary field (along the primary
field direction) in pT/s, so a conductive, non-chargeable Earth gives
positive, decaying data and induced polarisation can drive them negative.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from functools import cached_property

import numba
import numpy as np
from scipy.interpolate import CubicSpline

from . import _filters

# the bundled TBB is often too old; workqueue needs no external library
if "NUMBA_THREADING_LAYER" not in os.environ:
    numba.config.THREADING_LAYER = "workqueue"
from .model import EarthProfile, ParticleArray, ParticleState, merged_segments

__all__ = [
    "MU0",
    "AemSystem",
    "FrequencyGrid",
    "ForwardError",
    "ForwardOperator",
    "default_gates",
    "cole_cole",
    "layered_kernel",
    "hankel_transform",
    "frequency_to_time",
    "forward",
    "forward_array",
    "filter_tables",
]

log = logging.getLogger(__name__)

MU0 = 4e-7 * np.pi
PICO = 1e12


class ForwardError(RuntimeError):
    """Raised when the forward model produces non-finite output."""


def default_gates(n: int = 30, t_first: float = 5e-6, t_last: float = 1.5e-2) -> np.ndarray:
    """Exponentially spaced, contiguous off-time gates as ``(start, end)`` rows."""
    edges = np.geomspace(t_first, t_last, n + 1)
    return np.column_stack([edges[:-1], edges[1:]])


@dataclass
class AemSystem:
    """Concentric-loop airborne TEM system.

    Parameters
    ----------
    tx_height : float
        Transmitter loop height above ground (m).
    tx_radius : float
        Transmitter loop radius (m).
    tx_moment : float
        Transmitter dipole moment (A m^2); the loop current is
        ``tx_moment / (pi * tx_radius**2)``.
    rx_offset : float
        Vertical receiver offset above the loop centre (m).
    waveform : array_like or None
        Piecewise-linear transmitter current as ``(time, current)`` rows with
        the last row at ``t = 0`` and zero current; current is normalised by
        its peak. ``None`` is an ideal step turn-off.
    base_frequency : float
        Waveform repetition frequency (Hz).
    n_periods : int
        Number of preceding half-periods of opposite polarity to include for
        a bipolar waveform; 0 models a single pulse.
    gates : array_like
        Off-time gate windows ``(start, end)`` in seconds.
    """

    tx_height: float = 30.0
    tx_radius: float = 13.0
    tx_moment: float = 100.0
    rx_offset: float = 0.0
    waveform: np.ndarray | None = None
    base_frequency: float = 25.0
    n_periods: int = 0
    gates: np.ndarray = field(default_factory=default_gates)

    def __post_init__(self):
        self.gates = np.atleast_2d(np.asarray(self.gates, dtype=float))
        g = self.gates
        if g.shape[1] != 2 or np.any(g[:, 0] <= 0) or np.any(g[:, 1] <= g[:, 0]):
            raise ValueError("gates must be (start, end) rows with 0 < start < end")
        if np.any(g[1:, 0] < g[:-1, 1]):
            raise ValueError("gates must be ascending and non-overlapping")
        if self.tx_radius <= 0 or self.tx_height < 0 or self.tx_moment <= 0:
            raise ValueError("invalid loop geometry")
        if self.waveform is not None:
            w = np.atleast_2d(np.asarray(self.waveform, dtype=float))
            if w.shape[1] != 2 or np.any(np.diff(w[:, 0]) <= 0):
                raise ValueError("waveform must be (time, current) rows, ascending time")
            if w[-1, 0] != 0.0 or w[-1, 1] != 0.0:
                raise ValueError("waveform must end at t = 0 with zero current")
            self.waveform = w
        elif self.n_periods:
            raise ValueError("periodic repetition requires an explicit waveform")

    @property
    def n_gates(self) -> int:
        return self.gates.shape[0]

    @property
    def gate_centres(self) -> np.ndarray:
        return np.sqrt(self.gates[:, 0] * self.gates[:, 1])

    @property
    def current(self) -> float:
        return self.tx_moment / (np.pi * self.tx_radius**2)

    def to_dict(self) -> dict:
        return {
            "tx_height": self.tx_height,
            "tx_radius": self.tx_radius,
            "tx_moment": self.tx_moment,
            "rx_offset": self.rx_offset,
            "waveform": None if self.waveform is None else self.waveform.tolist(),
            "base_frequency": self.base_frequency,
            "n_periods": self.n_periods,
            "gates": self.gates.tolist(),
        }

    @classmethod
    def from_dict(cls, d: dict | None) -> "AemSystem":
        d = dict(d or {})
        if "n_gates" in d or "gate_range" in d:
            n = d.pop("n_gates", 30)
            lo, hi = d.pop("gate_range", (5e-6, 1.5e-2))
            d["gates"] = default_gates(n, lo, hi)
        return cls(**d)


@dataclass(frozen=True)
class FrequencyGrid:
    """Log-spaced angular frequencies (rad/s)."""

    omegas: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.omegas, dtype=float)
        if w.ndim != 1 or w.size < 4 or np.any(w <= 0) or np.any(np.diff(w) <= 0):
            raise ValueError("omegas must be strictly ascending, positive, >= 4 points")
        object.__setattr__(self, "omegas", w)

    @classmethod
    def covering(cls, w_min: float, w_max: float, per_decade: float) -> "FrequencyGrid":
        lo, hi = np.floor(np.log10(w_min) * per_decade), np.ceil(np.log10(w_max) * per_decade)
        return cls(10.0 ** (np.arange(lo, hi + 1) / per_decade))


# --------------------------------------------------------------------------
# physics primitives


def cole_cole(sigma_inf, m, tau, c, omega):
    """Cole-Cole complex conductivity ``sigma_inf * (1 - m / (1 + (i omega tau)^c))``.

    Broadcasts over all arguments; the principal branch is used for the
    fractional power.
    """
    sigma_inf, m, tau, c, omega = np.broadcast_arrays(
        *(np.asarray(a, dtype=float) for a in (sigma_inf, m, tau, c, omega))
    )
    if np.any(sigma_inf <= 0) or np.any((m < 0) | (m > 1)):
        raise ValueError("cole_cole requires sigma_inf > 0 and 0 <= m <= 1")
    if np.any(tau <= 0) or np.any((c <= 0) | (c > 1)):
        raise ValueError("cole_cole requires tau > 0 and 0 < c <= 1")
    iwt = (1j * omega * tau) ** c
    return sigma_inf * (1.0 - m / (1.0 + iwt))


# one-way attenuation (nepers) beyond which deeper structure is invisible:
# the reflected field from below is scaled by exp(-2 * 20) < 1e-17
_ATTENUATION_CUTOFF = 20.0


@numba.njit(cache=True, fastmath=False)
def _rte(lam, ks, thick, nseg, us):
    """TE reflection coefficient at the surface for one (omega, lambda).

    ``ks[n] = i omega mu0 sigma_n`` per segment, ``thick[n]`` for the top
    ``nseg - 1`` segments and ``us`` is scratch of length ``nseg``.
    Zero-thickness segments are skipped exactly; the recursion starts at
    the first segment whose overburden attenuates the field below double
    precision, which is then treated as the basement.
    """
    lam2 = lam * lam
    last = nseg - 1
    att = 0.0
    for n in range(nseg):
        us[n] = np.sqrt(lam2 + ks[n])
        if n == nseg - 1:
            break
        att += us[n].real * thick[n]
        if att > _ATTENUATION_CUTOFF:
            last = n
            break
    uh = us[last]
    for n in range(last - 1, -1, -1):
        d = thick[n]
        if d <= 0.0:
            continue
        u = us[n]
        e = np.exp(-2.0 * u * d)
        th = (1.0 - e) / (1.0 + e)
        uh = u * (uh + u * th) / (u + uh * th)
    return (lam - uh) / (lam + uh)


@numba.njit(cache=True, fastmath=False, parallel=True)
def _batch_response(omegas, lams, weights, thick, sigma, mseg, tau, c, nseg, out):
    """Real part of the Hankel-weighted reflection sum per particle and frequency.

    Particles are independent, so the threaded loop gives results identical
    to a serial run.
    """
    npart = thick.shape[0]
    nf = omegas.size
    nl = lams.size
    smax = sigma.shape[1]
    for p in numba.prange(npart):
        ks = np.empty(smax, dtype=np.complex128)
        us = np.empty(smax, dtype=np.complex128)
        ns = nseg[p]
        for f in range(nf):
            w = omegas[f]
            iwt = (1j * w * tau[p]) ** c[p]
            for n in range(ns):
                sh = sigma[p, n] * (1.0 - mseg[p, n] / (1.0 + iwt))
                ks[n] = 1j * w * 4e-7 * np.pi * sh
            acc = 0.0
            for j in range(nl):
                r = _rte(lams[j], ks, thick[p], ns, us)
                acc += weights[j] * r.real
            out[p, f] = acc


def layered_kernel(profile: EarthProfile, omega, lambda_h) -> np.ndarray:
    """TE reflection coefficient ``r_TE(omega, lambda)`` of a merged profile.

    Broadcasts ``omega`` against ``lambda_h``; displacement currents are
    neglected, so the air wavenumber is ``lambda`` itself.
    """
    omega = np.asarray(omega, dtype=float)
    lambda_h = np.asarray(lambda_h, dtype=float)
    w, lam = np.broadcast_arrays(omega, lambda_h)
    thick = np.ascontiguousarray(profile.thickness, dtype=float)
    nseg = profile.n_segments
    out = np.empty(w.shape, dtype=complex)
    for idx in np.ndindex(w.shape):
        sh = cole_cole(profile.sigma_inf, profile.m_seg, profile.tau, profile.c, w[idx])
        ks = 1j * w[idx] * MU0 * np.asarray(sh, dtype=complex)
        out[idx] = _rte(float(lam[idx]), ks, thick, nseg, np.empty(nseg, dtype=complex))
    return out


def hankel_transform(kernel, r: float, order: int = 0, n_points: int = 401) -> complex | float:
    """``int_0^inf kernel(lambda) J_order(lambda r) d lambda`` by a Key filter.

    ``kernel`` is a vectorized callable of the horizontal wavenumber.
    ``n_points`` picks the 401-point (default, about 1e-8 relative on smooth
    kernels) or the 201-point filter used inside the forward operator.
    """
    if r <= 0:
        raise ValueError("r must be positive")
    if order not in (0, 1):
        raise ValueError("order must be 0 or 1")
    if n_points not in (201, 401):
        raise ValueError("n_points must be 201 or 401")
    base = getattr(_filters, f"HANKEL_{n_points}_BASE")
    w = getattr(_filters, f"HANKEL_{n_points}_J{order}")
    lam = base / r
    return np.dot(np.asarray(kernel(lam)), w) / r


def _sincos_filter(name: str):
    if name == "key_81":
        return _filters.SINCOS_81_BASE, _filters.SINCOS_81_SIN, _filters.SINCOS_81_COS
    if name == "key_201":
        return _filters.SINCOS_201_BASE, _filters.SINCOS_201_SIN, _filters.SINCOS_201_COS
    raise ValueError(f"unknown sine/cosine filter {name!r}")


def _interp_matrix(grid: np.ndarray, points: np.ndarray, method: str,
                   extrapolate: bool = False) -> np.ndarray:
    """Matrix mapping values on ``grid`` to values at ``points`` (log-omega axis).

    With ``extrapolate`` the value is held constant below the grid and decays
    as ``omega**-0.5`` above it, the low- and high-frequency behaviour of
    ``Re H - Re H_inf`` over a conductive top layer.
    """
    x = np.log(grid)
    xp = np.log(points)
    if extrapolate:
        lo = xp < x[0]
        hi = xp > x[-1]
        mid = ~(lo | hi)
        mat = np.zeros((xp.size, x.size))
        mat[mid] = _interp_matrix(grid, points[mid], method)
        mat[lo, 0] = 1.0
        mat[hi, -1] = np.sqrt(grid[-1] / points[hi])
        return mat
    if np.any(xp < x[0] * (1 + 1e-12) - 1e-12) or np.any(xp > x[-1] + 1e-12):
        raise ValueError(
            "frequency grid does not cover the band required by the time filter "
            f"([{points.min():.3g}, {points.max():.3g}] rad/s vs "
            f"[{grid[0]:.3g}, {grid[-1]:.3g}])"
        )
    xp = np.clip(xp, x[0], x[-1])
    if method == "cubic":
        return CubicSpline(x, np.eye(x.size), bc_type="not-a-knot")(xp)
    if method == "linear":
        j = np.clip(np.searchsorted(x, xp) - 1, 0, x.size - 2)
        f = (xp - x[j]) / (x[j + 1] - x[j])
        mat = np.zeros((xp.size, x.size))
        mat[np.arange(xp.size), j] = 1 - f
        mat[np.arange(xp.size), j + 1] += f
        return mat
    raise ValueError(f"unknown interpolation {method!r}")


def frequency_to_time(freq_response, grid: FrequencyGrid, t, *, limit=None, filt="key_201",
                      interp="cubic", kind="dstep"):
    """Transform a causal frequency response on ``grid`` to the time domain.

    Uses the real part relative to its high-frequency (inductive) limit
    ``limit``, which defaults to the value at the top of the grid:

    * ``kind="dstep"``: d/dt of the step-off response,
      ``-(2/pi) int (Re H - Re H_inf) cos(w t) dw``;
    * ``kind="step"``: the step-off response less its value at ``t = 0+``,
      ``-(2/pi) int (Re H - Re H_inf) / w sin(w t) dw``.

    Raises ``ValueError`` if the filter needs frequencies outside the grid.
    """
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(t <= 0):
        raise ValueError("times must be positive")
    re = np.real(np.asarray(freq_response))
    if limit is None:
        limit = re[..., -1:]
    mat = _time_rows(grid.omegas, t, filt, interp, kind)
    return (re - np.real(limit)) @ mat.T


def _time_rows(omegas, t, filt, interp, kind, extrapolate=False):
    base, sin, cos = _sincos_filter(filt)
    pts = base[None, :] / t[:, None]
    P = _interp_matrix(omegas, pts.ravel(), interp, extrapolate).reshape(t.size, base.size, omegas.size)
    if kind == "dstep":
        coef = -(2.0 / np.pi) * cos[None, :] / t[:, None]
    elif kind == "step":
        coef = -(2.0 / np.pi) * np.broadcast_to(sin / base, (t.size, base.size))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return np.einsum("tj,tjf->tf", coef, P)


def _gauss_legendre_nodes(gates, n):
    x, w = np.polynomial.legendre.leggauss(n)
    a, b = gates[:, :1], gates[:, 1:]
    nodes = 0.5 * (b - a) * x[None, :] + 0.5 * (a + b)
    return nodes, np.broadcast_to(0.5 * w, nodes.shape)  # weights average, sum to 1


# --------------------------------------------------------------------------
# assembled operator


class ForwardOperator:
    """Precomputed, system-specific forward model.

    Parameters
    ----------
    system : AemSystem
    per_decade : float
        Frequency grid density.
    hankel_tol : float
        High-wavenumber filter points whose weight bound
        ``|w_j| lambda_j exp(-lambda_j h)`` is below ``hankel_tol`` times the
        largest are dropped; ``|r_TE| <= 1`` makes this a bound on the
        neglected contribution.
    sincos : {"key_81", "key_201"}
        Sine/cosine filter.
    interp : {"cubic", "linear"}
        Interpolation of the frequency response in log-omega.
    n_gauss : int
        Gauss-Legendre points per gate.
    """

    def __init__(self, system: AemSystem, *, per_decade: float = 12, hankel_tol: float = 1e-9,
                 sincos: str = "key_201", interp: str = "cubic", n_gauss: int = 8,
                 grid: FrequencyGrid | None = None, omega_band: tuple | None = (1e-2, 1e9)):
        self.system = system
        self.per_decade = per_decade
        self.hankel_tol = hankel_tol
        self.sincos = sincos
        self.interp = interp
        self.n_gauss = n_gauss
        times = self._required_times()
        base = _sincos_filter(sincos)[0]
        self.omega_band = omega_band
        if grid is None:
            lo, hi = base[0] / times.max(), base[-1] / times.min()
            if omega_band is not None:
                lo, hi = max(lo, omega_band[0]), min(hi, omega_band[1])
            grid = FrequencyGrid.covering(lo, hi, per_decade)
        self.grid = grid
        self._grid_given = grid

    # -- geometry -----------------------------------------------------------
    @cached_property
    def hankel_points(self):
        """``(lambdas, weights)``: pruned J1 filter with the loop prefactor folded in."""
        s = self.system
        a = s.tx_radius
        h = 2 * s.tx_height + s.rx_offset
        lam = _filters.HANKEL_201_BASE / a
        # H_z = (I a / 2) int r_TE e^{-lam h} lam J1(lam a) dlam  (filter: 1/a sum)
        w = 0.5 * s.current * _filters.HANKEL_201_J1 * lam * np.exp(-lam * h)
        # only the decaying high-wavenumber tail is dropped; the low end carries
        # the late-time signal, which can be many decades below the peak
        bound = np.abs(w)
        keep = (bound > self.hankel_tol * bound.max()) | (lam <= lam[np.argmax(bound)])
        return np.ascontiguousarray(lam[keep]), np.ascontiguousarray(w[keep])

    def _required_times(self):
        s = self.system
        nodes, _ = _gauss_legendre_nodes(s.gates, self.n_gauss)
        times = nodes.ravel()
        if s.waveform is None and s.n_periods == 0:
            return times
        shifts = self._pulse_segments()[0]
        out = (times[:, None] - shifts[None, :]).ravel()
        return out[out > 0]

    def _pulse_segments(self):
        """Ramp segments ``(start, end, slope)`` of the periodic waveform, and
        all their breakpoints."""
        s = self.system
        wf = s.waveform / np.abs(s.waveform[:, 1]).max()
        half = 0.5 / s.base_frequency
        segs = []
        for n in range(s.n_periods + 1):
            sign = (-1.0) ** n
            for (t0, i0), (t1, i1) in zip(wf[:-1], wf[1:]):
                if i1 == i0:
                    continue
                segs.append((t0 - n * half, t1 - n * half, sign * (i1 - i0) / (t1 - t0)))
        pts = np.array([p for a, b, _ in segs for p in (a, b)])
        return pts, segs

    @property
    def _extrapolate(self) -> bool:
        return self.omega_band is not None

    @cached_property
    def time_matrix(self) -> np.ndarray:
        """``(n_gates, n_freq)`` map from ``Re H - Re H_inf`` on the grid to gate
        values (pT/s)."""
        s = self.system
        nodes, wts = _gauss_legendre_nodes(s.gates, self.n_gauss)
        t = nodes.ravel()
        omegas = self.grid.omegas
        if s.waveform is None and s.n_periods == 0:
            rows = _time_rows(omegas, t, self.sincos, self.interp, "dstep", self._extrapolate)
        else:
            rows = np.zeros((t.size, omegas.size))
            _, segs = self._pulse_segments()
            # d/dt y(t) = -sum_k slope_k [h_off(t - a_k) - h_off(t - b_k)]
            for a, b, slope in segs:
                for tt, sgn in ((t - a, 1.0), (t - b, -1.0)):
                    r = _time_rows(omegas, tt, self.sincos, self.interp, "step", self._extrapolate)
                    rows -= slope * sgn * r
        rows = rows.reshape(s.n_gates, self.n_gauss, omegas.size)
        gate = np.einsum("gq,gqf->gf", wts, rows)
        # reported: -dB/dt = -mu0 dH/dt, in pT/s
        return -MU0 * PICO * gate

    # -- evaluation ---------------------------------------------------------
    @cached_property
    def inductive_limit(self) -> float:
        """``Re H`` as ``omega -> inf`` (perfect-conductor image), Earth independent."""
        return -float(np.sum(self.hankel_points[1]))

    def real_response(self, thick, sigma, mseg, tau, c, nseg) -> np.ndarray:
        """``Re H - Re H_inf`` on the frequency grid, shape ``(n, n_freq)``."""
        lams, wts = self.hankel_points
        out = np.empty((thick.shape[0], self.grid.omegas.size))
        _batch_response(self.grid.omegas, lams, wts,
                        np.ascontiguousarray(thick, dtype=float),
                        np.ascontiguousarray(sigma, dtype=float),
                        np.ascontiguousarray(mseg, dtype=float),
                        np.ascontiguousarray(tau, dtype=float),
                        np.ascontiguousarray(c, dtype=float),
                        np.ascontiguousarray(nseg, dtype=np.int64), out)
        return out - self.inductive_limit

    def response_array(self, batch: ParticleArray, *, raise_on_failure=False):
        """Gate responses for every row; returns ``(values, ok)``.

        Rows whose response is not finite are flagged ``ok = False`` (and
        filled with NaN) unless ``raise_on_failure``.
        """
        thick, sigma, mseg, nseg = merged_segments(batch)
        re = self.real_response(thick, sigma, mseg, batch.tau, batch.c, nseg)
        values = re @ self.time_matrix.T
        ok = np.isfinite(values).all(axis=1)
        if not ok.all():
            if raise_on_failure:
                raise ForwardError(f"non-finite forward response for {np.sum(~ok)} states")
            values[~ok] = np.nan
        return values, ok

    def response_profile(self, profile: EarthProfile) -> np.ndarray:
        thick = np.concatenate([profile.thickness, [0.0]])[None, :]
        out = self.real_response(thick, profile.sigma_inf[None, :], profile.m_seg[None, :],
                                 np.array([profile.tau]), np.array([profile.c]),
                                 np.array([profile.n_segments]))
        values = (out @ self.time_matrix.T)[0]
        if not np.isfinite(values).all():
            raise ForwardError("non-finite forward response")
        return values


_OPERATORS: dict[int, tuple[AemSystem, ForwardOperator]] = {}


def operator_for(system: AemSystem) -> ForwardOperator:
    """Cached default :class:`ForwardOperator` for ``system``."""
    key = id(system)
    hit = _OPERATORS.get(key)
    if hit is None or hit[0] is not system:
        hit = (system, ForwardOperator(system))
        _OPERATORS[key] = hit
    return hit[1]


def forward(state: ParticleState, system: AemSystem, operator: ForwardOperator | None = None) -> np.ndarray:
    """Per-gate response (pT/s) of one state; raises :class:`ForwardError` on failure."""
    from .model import merge_profiles

    op = operator or operator_for(system)
    return op.response_profile(merge_profiles(state))


def forward_array(batch: ParticleArray, system: AemSystem, operator: ForwardOperator | None = None):
    """Batched :func:`forward`; returns ``(values, ok)``."""
    op = operator or operator_for(system)
    return op.response_array(batch)


def filter_tables() -> dict[str, np.ndarray]:
    """All compiled-in filter tables, for audit."""
    return {
        name.lower(): getattr(_filters, name)
        for name in dir(_filters)
        if name.isupper()
    }
