"""Run configuration and the columnar text formats used by the command line.

All tables are comma-separated with one header row. Floats are written with
``repr``, the shortest string that parses back to the same double, so every
table round-trips losslessly and identical inputs give identical bytes.
"""

from __future__ import annotations

import csv
import json
import math
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import yaml

from .forward import AemSystem
from .likelihood import NoiseModel, Sounding
from .model import ParticleArray, PriorSpec
from .rjsmc import RjsmcConfig

__all__ = [
    "ConfigError",
    "WORKERS_ENV",
    "DEFAULT_PARTICLES",
    "RunConfig",
    "StudySpec",
    "LineDataset",
    "load_config",
    "fmt",
    "write_table",
    "read_table",
    "write_soundings",
    "read_soundings",
    "write_cloud",
    "read_cloud",
    "write_json",
]

WORKERS_ENV = "IPDETECT_WORKERS"
DEFAULT_PARTICLES = 9600


class ConfigError(ValueError):
    """Invalid configuration or input files."""


def fmt(x) -> str:
    """Lossless text form of a number (``nan``/``inf`` included)."""
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    if x is None:
        return "nan"
    return repr(float(x))


def write_table(path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([v if isinstance(v, str) else fmt(v) for v in row])


def read_table(path) -> tuple[list[str], list[list[str]]]:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise ConfigError(f"{path}: empty table")
    return rows[0], rows[1:]


def write_json(path, obj) -> None:
    def clean(v):
        if isinstance(v, dict):
            return {str(k): clean(x) for k, x in v.items()}
        if isinstance(v, (list, tuple)):
            return [clean(x) for x in v]
        if isinstance(v, np.ndarray):
            return clean(v.tolist())
        if isinstance(v, (np.integer,)):
            return int(v)
        if isinstance(v, (float, np.floating)):
            v = float(v)
            return v if math.isfinite(v) else str(v)
        return v

    with open(path, "w") as fh:
        json.dump(clean(obj), fh, indent=2, sort_keys=True)
        fh.write("\n")


# --------------------------------------------------------------------------
# configuration


@dataclass(frozen=True)
class StudySpec:
    """Grid of three-layer synthetic cases.

    Every case has a top layer, a chargeable second layer of fixed thickness
    whose top lies at one of ``depths``, and a basement. Chargeability of
    the second layer runs over ``m``.
    """

    basement: tuple[float, ...] = (0.001, 0.01, 0.032, 0.1)
    layer_sigma: tuple[float, float] = (0.01, 0.1)
    thickness: float = 20.0
    depths: tuple[float, ...] = (10.0, 20.0, 40.0, 60.0, 80.0, 100.0)
    m: tuple[float, ...] = (0.0, 0.2, 0.4, 0.6, 0.8, 1.0)
    tau: float = 4.07e-4
    c: float = 1.0

    def __post_init__(self):
        for name in ("basement", "depths", "m"):
            object.__setattr__(self, name, tuple(float(v) for v in getattr(self, name)))
        object.__setattr__(self, "layer_sigma", tuple(float(v) for v in self.layer_sigma))
        if len(self.layer_sigma) != 2 or min(self.layer_sigma + self.basement) <= 0:
            raise ConfigError("study conductivities must be positive, two upper layers")
        if self.thickness <= 0 or min(self.depths) <= 0:
            raise ConfigError("study depths and thickness must be positive")
        if min(self.m) < 0 or max(self.m) > 1:
            raise ConfigError("study chargeabilities must lie in [0, 1]")

    def cases(self):
        """``(basement, depth, m)`` for every case, basement-major."""
        return [(b, d, m) for b in self.basement for d in self.depths for m in self.m]

    def state(self, basement: float, depth: float, m: float):
        from .model import ParticleState

        s1, s2 = self.layer_sigma
        z = [depth, depth + self.thickness]
        return ParticleState(
            phi_b=math.log10(s1),
            phi=np.log10([s2, basement]),
            z_sigma=z,
            m=[m, 0.0],
            z_m=z,
            tau=self.tau,
            c=self.c,
        )

    def to_dict(self) -> dict:
        return {k: list(v) if isinstance(v, tuple) else v for k, v in self.__dict__.items()}


@dataclass
class RunConfig:
    """Everything a command needs besides its input files.

    ``workers`` of ``None`` resolves to ``$IPDETECT_WORKERS`` or 1.
    """

    prior: PriorSpec = field(default_factory=PriorSpec)
    system: AemSystem = field(default_factory=AemSystem)
    noise: NoiseModel = field(default_factory=NoiseModel)
    sampler: RjsmcConfig = field(default_factory=lambda: RjsmcConfig(n_particles=DEFAULT_PARTICLES))
    workers: int | None = None
    ppd_draws: int = 1000
    depth_step: float = 1.0
    n_bins: int = 64
    spacing: float = 30.0
    study: StudySpec = field(default_factory=StudySpec)

    def resolved_workers(self) -> int:
        if self.workers is not None:
            n = self.workers
        else:
            env = os.environ.get(WORKERS_ENV, "").strip()
            try:
                n = int(env) if env else 1
            except ValueError:
                raise ConfigError(f"{WORKERS_ENV} must be an integer, got {env!r}") from None
        if n < 1:
            raise ConfigError("worker count must be >= 1")
        return n

    def to_dict(self) -> dict:
        return {
            "prior": self.prior.to_dict(),
            "system": self.system.to_dict(),
            "noise": self.noise.to_dict(),
            "sampler": self.sampler.to_dict(),
            "workers": self.workers,
            "output": {"ppd_draws": self.ppd_draws, "depth_step": self.depth_step,
                       "n_bins": self.n_bins},
            "line": {"spacing": self.spacing},
            "study": self.study.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict | None) -> "RunConfig":
        d = dict(d or {})
        known = {"prior", "system", "noise", "sampler", "workers", "output", "line", "study"}
        extra = set(d) - known
        if extra:
            raise ConfigError(f"unknown config sections: {sorted(extra)}")
        try:
            sampler = {"n_particles": DEFAULT_PARTICLES, **(d.get("sampler") or {})}
            out = d.get("output") or {}
            bad = set(out) - {"ppd_draws", "depth_step", "n_bins"}
            if bad:
                raise ConfigError(f"unknown output keys: {sorted(bad)}")
            line = d.get("line") or {}
            if set(line) - {"spacing"}:
                raise ConfigError(f"unknown line keys: {sorted(set(line) - {'spacing'})}")
            cfg = cls(
                prior=PriorSpec.from_dict(d.get("prior")),
                system=AemSystem.from_dict(d.get("system")),
                noise=NoiseModel.from_dict(d.get("noise")),
                sampler=RjsmcConfig.from_dict(sampler),
                workers=d.get("workers"),
                ppd_draws=int(out.get("ppd_draws", 1000)),
                depth_step=float(out.get("depth_step", 1.0)),
                n_bins=int(out.get("n_bins", 64)),
                spacing=float(line.get("spacing", 30.0)),
                study=StudySpec(**(d.get("study") or {})),
            )
        except ConfigError:
            raise
        except (TypeError, ValueError) as exc:
            raise ConfigError(str(exc)) from exc
        if cfg.workers is not None and (not isinstance(cfg.workers, int) or cfg.workers < 1):
            raise ConfigError("workers must be an integer >= 1")
        if cfg.ppd_draws < 2 or cfg.depth_step <= 0 or cfg.n_bins < 2 or cfg.spacing < 0:
            raise ConfigError("invalid output or line settings")
        cfg.noise.additive(cfg.system.n_gates)  # length check for per-gate noise
        return cfg


def load_config(path=None) -> RunConfig:
    """Read a YAML run configuration; ``None`` gives the defaults."""
    if path is None:
        return RunConfig()
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"config file not found: {p}")
    try:
        d = yaml.safe_load(p.read_text())
    except yaml.YAMLError as exc:
        raise ConfigError(f"{p}: {exc}") from exc
    if d is not None and not isinstance(d, dict):
        raise ConfigError(f"{p}: top level must be a mapping")
    try:
        return RunConfig.from_dict(d)
    except ValueError as exc:
        raise ConfigError(f"{p}: {exc}") from exc


# --------------------------------------------------------------------------
# soundings


META_COLUMNS = ("line_id", "fiducial", "easting", "northing", "elevation")


def _gate_path(path) -> Path:
    p = Path(path)
    return p.with_name(p.name + ".gates")


@dataclass
class LineDataset:
    """Soundings ordered along a flight line sharing one gate schedule."""

    soundings: list
    gates: np.ndarray
    spacing: float = 30.0

    def __post_init__(self):
        self.gates = np.atleast_2d(np.asarray(self.gates, dtype=float))
        if not self.soundings:
            raise ConfigError("line has no soundings")
        n = self.gates.shape[0]
        if any(len(s) != n for s in self.soundings):
            raise ConfigError(f"every sounding must have {n} gates")
        fid = np.array([s.fiducial for s in self.soundings])
        if np.any(np.diff(fid) <= 0):
            raise ConfigError("soundings must be in ascending fiducial order")

    def __len__(self) -> int:
        return len(self.soundings)

    def distance(self) -> np.ndarray:
        """Cumulative horizontal distance along the line (m)."""
        xy = np.array([s.location[:2] for s in self.soundings])
        step = np.hypot(*np.diff(xy, axis=0).T) if len(xy) > 1 else np.zeros(0)
        return np.concatenate([[0.0], np.cumsum(step)])

    def decimate(self, spacing: float | None = None) -> np.ndarray:
        """Indices of the soundings nearest to every ``spacing`` metres along the line.

        A spacing of 0 keeps everything.
        """
        spacing = self.spacing if spacing is None else spacing
        d = self.distance()
        if spacing <= 0 or len(d) == 1:
            return np.arange(len(d))
        targets = np.arange(0.0, d[-1] + 0.5 * spacing, spacing)
        idx = np.clip(np.searchsorted(d, targets), 1, len(d) - 1)
        nearer_left = (targets - d[idx - 1]) <= (d[idx] - targets)
        idx = np.where(nearer_left, idx - 1, idx)
        return np.unique(idx)


def write_soundings(path, soundings, gates) -> None:
    """One row per sounding, plus the gate schedule in ``<path>.gates``.

    Per-gate additive noise goes into ``e00..`` columns when any sounding
    carries it (all must then).
    """
    gates = np.atleast_2d(np.asarray(gates, dtype=float))
    n = gates.shape[0]
    soundings = list(soundings)
    with_noise = any(s.eps_an is not None for s in soundings)
    header = list(META_COLUMNS) + [f"g{i:02d}" for i in range(n)]
    if with_noise:
        header += [f"e{i:02d}" for i in range(n)]
    rows = []
    for s in soundings:
        if len(s) != n:
            raise ValueError(f"sounding has {len(s)} gates, schedule has {n}")
        row = [str(s.line_id), s.fiducial, *s.location, *s.y]
        if with_noise:
            if s.eps_an is None:
                raise ValueError("either every sounding carries eps_an or none does")
            row += list(s.eps_an)
        rows.append(row)
    write_table(path, header, rows)
    write_table(_gate_path(path), ["gate", "t_start", "t_end"],
                [[i, a, b] for i, (a, b) in enumerate(gates)])


def read_soundings(path, spacing: float = 30.0) -> LineDataset:
    """Inverse of :func:`write_soundings`."""
    p = Path(path)
    gp = _gate_path(p)
    for f in (p, gp):
        if not f.is_file():
            raise ConfigError(f"missing data file: {f}")
    gh, grows = read_table(gp)
    if gh != ["gate", "t_start", "t_end"]:
        raise ConfigError(f"{gp}: unexpected header {gh}")
    try:
        gates = np.array([[float(r[1]), float(r[2])] for r in grows])
        header, rows = read_table(p)
        n = len(gates)
        expect = list(META_COLUMNS) + [f"g{i:02d}" for i in range(n)]
        with_noise = len(header) == 5 + 2 * n
        if with_noise:
            expect += [f"e{i:02d}" for i in range(n)]
        if header != expect:
            raise ConfigError(f"{p}: header does not match {n} gates")
        soundings = [
            Sounding(
                y=np.array([float(v) for v in r[5:5 + n]]),
                location=(float(r[2]), float(r[3]), float(r[4])),
                line_id=r[0],
                fiducial=float(r[1]),
                eps_an=np.array([float(v) for v in r[5 + n:]]) if with_noise else None,
            )
            for r in rows
        ]
    except (ValueError, IndexError) as exc:
        raise ConfigError(f"{p}: {exc}") from exc
    return LineDataset(soundings, gates, spacing)


# --------------------------------------------------------------------------
# particle clouds


def cloud_header(kappa_max: int, lambda_max: int) -> list[str]:
    return (
        ["kappa", "lam", "phi_b"]
        + [f"phi_{i}" for i in range(1, kappa_max + 1)]
        + [f"z_sigma_{i}" for i in range(1, kappa_max + 1)]
        + [f"m_{i}" for i in range(1, lambda_max + 1)]
        + [f"z_m_{i}" for i in range(1, lambda_max + 1)]
        + ["tau", "c", "log_like", "log_weight"]
    )


def write_cloud(path, particles: ParticleArray, log_like, log_weight) -> None:
    """One row per particle; inactive padded slots are ``nan``."""
    b = particles
    rows = (
        [int(b.kappa[i]), int(b.lam[i]), b.phi_b[i], *b.phi[i], *b.z_sigma[i], *b.m[i], *b.z_m[i],
         b.tau[i], b.c[i], log_like[i], log_weight[i]]
        for i in range(len(b))
    )
    write_table(path, cloud_header(b.kappa_max, b.lambda_max), rows)


def read_cloud(path):
    """Inverse of :func:`write_cloud`: ``(particles, log_like, log_weight)``."""
    header, rows = read_table(path)
    kmax = sum(h.startswith("phi_") and h != "phi_b" for h in header)
    lmax = sum(h.startswith("m_") for h in header)
    if header != cloud_header(kmax, lmax):
        raise ConfigError(f"{path}: not a particle cloud table")
    a = np.array([[float(v) for v in r] for r in rows]).reshape(len(rows), len(header))
    n = a.shape[0]
    b = ParticleArray.empty(n, kmax, lmax)
    b.kappa[:] = a[:, 0].astype(np.int64)
    b.lam[:] = a[:, 1].astype(np.int64)
    b.phi_b[:] = a[:, 2]
    j = 3
    for name, width in (("phi", kmax), ("z_sigma", kmax), ("m", lmax), ("z_m", lmax)):
        getattr(b, name)[:] = a[:, j:j + width]
        j += width
    b.tau[:] = a[:, j]
    b.c[:] = a[:, j + 1]
    return b, a[:, j + 2], a[:, j + 3]
