"""Command-line front end: ``python -m ipdetect <command>``.

Commands
--------
simulate      noisy soundings for every case of a synthetic study grid
invert        invert one sounding (or a built-in analytic target)
detect-line   invert every decimated sounding of a line, in parallel
summarize     text and CSV report of an ``invert`` artifact directory
dump-filters  write the compiled-in digital filter tables

Exit codes: 0 success, 1 configuration or input error, 2 sampler failure,
3 some soundings of a line failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np
import yaml

from . import detect
from .forward import ForwardError, filter_tables, operator_for
from .io import (
    ConfigError,
    LineDataset,
    RunConfig,
    StudySpec,
    load_config,
    read_soundings,
    read_table,
    write_cloud,
    write_json,
    write_soundings,
    write_table,
)
from .likelihood import Sounding, simulate_sounding
from .model import ModelIndex, PriorSpec
from .rjsmc import RjsmcResult, aem_log_likelihood, sample_rjsmc
from .smc import GaussianToyTarget, SmcError, run_static_smc
from .toys import TOY_TARGETS, NestedGaussianToy, flat_log_likelihood

__all__ = [
    "main",
    "build_parser",
    "Inversion",
    "invert_sounding",
    "write_inversion",
    "simulate_study",
    "synthetic_line",
    "derive_seed",
    "REQUIRED_ARTIFACTS",
]

log = logging.getLogger("ipdetect")

EXIT_OK, EXIT_CONFIG, EXIT_SAMPLER, EXIT_PARTIAL = 0, 1, 2, 3
REQUIRED_ARTIFACTS = ("summary.json", "evidence.csv", "ppd.csv", "depth_conductivity.csv",
                      "depth_chargeability.csv")
# independent random streams derived from the master seed
_PPD_STREAM, _SIM_STREAM, _LINE_STREAM = 101, 202, 303


def derive_seed(seed: int, *keys: int) -> int:
    """Child seed for ``(seed, *keys)``; independent of how work is scheduled."""
    return int(np.random.SeedSequence([int(seed), *map(int, keys)]).generate_state(1)[0])


# --------------------------------------------------------------------------
# inversion pipeline


@dataclass
class Inversion:
    """Everything ``invert`` writes, in memory."""

    result: RjsmcResult
    marginals: detect.ModelMarginals
    bfipd: float
    bfipd_low_confidence: bool
    grid: detect.DepthGrid
    divergence: tuple
    ppd: detect.PpdSummary | None
    sounding: Sounding | None

    @property
    def log_bfipd(self) -> float:
        b = self.bfipd
        if math.isnan(b):
            return math.nan
        return math.log(b) if b > 0 else -math.inf

    def summary(self) -> dict:
        r = self.result
        return {
            "bfipd": self.bfipd,
            "log_bfipd": self.log_bfipd,
            "bfipd_defined": not math.isnan(self.bfipd),
            "bfipd_low_confidence": self.bfipd_low_confidence,
            "chargeable": bool(self.log_bfipd > 0),
            "doi_conductivity": self.grid.doi_cond,
            "doi_chargeability": self.grid.doi_charge,
            "n_particles": int(r.cloud.n),
            "n_steps": len(r.diagnostics),
            "ppd_draws": None if self.ppd is None else self.ppd.n_draws,
            "ppd_failed_draws": None if self.ppd is None else self.ppd.n_failed,
        }


def _summaries(result: RjsmcResult, prior: PriorSpec, cfg: RunConfig, loglike_data, seed):
    cloud = result.cloud
    marg = detect.model_marginals(cloud)
    b, low = detect.bfipd(marg, prior, return_flag=True)
    grid = detect.depth_marginal_grid(cloud, dz=cfg.depth_step, n_bins=cfg.n_bins)
    _, div = detect.depth_of_investigation(grid, prior, return_divergence=True)
    ppd = None
    if loglike_data is not None:
        rng = np.random.default_rng(derive_seed(seed, _PPD_STREAM))
        ppd = detect.ppd_summary(cloud, cfg.system, cfg.noise, loglike_data, rng, cfg.ppd_draws)
    return marg, b, low, grid, div, ppd


def invert_sounding(sounding: Sounding, cfg: RunConfig, on_step=None) -> Inversion:
    """Run the sampler on one sounding and compute every posterior summary."""
    op = operator_for(cfg.system)
    noise = sounding.noise(cfg.noise)
    loglike = aem_log_likelihood(sounding, cfg.system, noise, op)
    result = sample_rjsmc(loglike, cfg.prior, cfg.sampler, on_step=on_step)
    marg, b, low, grid, div, ppd = _summaries(result, cfg.prior, replace(cfg, noise=noise), sounding,
                                              cfg.sampler.seed)
    return Inversion(result, marg, b, low, grid, div, ppd, sounding)


def _toy_inversion(name: str, cfg: RunConfig, on_step=None):
    """Analytic targets; returns ``(Inversion or None, summary fields, diagnostics)``.

    The conjugate target runs the single-model sampler, so it has no cloud.
    """
    seed = cfg.sampler.seed
    if name == "conjugate":
        target = GaussianToyTarget()
        res = run_static_smc(target, cfg.sampler.n_particles, cfg.sampler.alpha_tess, seed=seed,
                             c_mutation=cfg.sampler.c_mutation)
        exact = target.log_evidence()
        return None, {
            "toy_target": name,
            "log_evidence": res.log_evidence,
            "log_evidence_exact": exact,
            "log_evidence_error": res.log_evidence - exact,
            "posterior_mean": float(res.particles.mean()),
            "posterior_mean_exact": target.posterior_mean(),
            "n_particles": cfg.sampler.n_particles,
            "n_steps": len(res.diagnostics),
        }, res.diagnostics
    if name == "nested":
        toy = NestedGaussianToy()
        prior, loglike = toy.prior, toy
    elif name == "flat":
        prior, loglike = cfg.prior, flat_log_likelihood
    else:
        raise ConfigError(f"unknown toy target {name!r}; choose from {TOY_TARGETS}")
    result = sample_rjsmc(loglike, prior, cfg.sampler, on_step=on_step)
    tcfg = replace(cfg, prior=prior)
    marg, b, low, grid, div, _ = _summaries(result, prior, tcfg, None, seed)
    inv = Inversion(result, marg, b, low, grid, div, None, None)
    extra = {"toy_target": name}
    if name == "nested":
        k0, k1 = ModelIndex(0, 0), ModelIndex(1, 0)
        lz = toy.log_evidence()
        extra.update({
            "bayes_factor_exact": toy.bayes_factor(),
            "bayes_factor_counts": detect.bayes_factor(marg, prior, k1, k0) if marg[k0] > 0 else math.inf,
            "bayes_factor_evidence": _safe_ebf(result.log_z, k1, k0, prior),
            "log_evidence_exact": {str(k): v for k, v in lz.items()},
        })
    return inv, extra, result.diagnostics


def _safe_ebf(log_z, k1, k2, prior):
    try:
        return detect.evidence_bayes_factor(log_z, k1, k2, prior)
    except ValueError:
        return math.nan


def write_inversion(out: Path, inv: Inversion, cfg: RunConfig, extra: dict | None = None) -> None:
    """Write every artifact of one inversion into ``out``."""
    out.mkdir(parents=True, exist_ok=True)
    cloud = inv.result.cloud
    prior = cloud.prior
    n = cloud.n
    write_cloud(out / "cloud.csv", cloud.particles, cloud.log_like, np.full(n, -math.log(n)))
    counts = cloud.n_by_model
    write_table(
        out / "evidence.csv",
        ["kappa", "lam", "count", "probability", "log_evidence", "evidence_complete"],
        [[m.kappa, m.lam, int(counts[i]), inv.marginals.probs[i], inv.result.log_z[i],
          int(inv.result.log_z_complete[i])]
         for i, m in enumerate(prior.models())],
    )
    g = inv.grid
    dc, dm = inv.divergence
    for name, dens, mean, div, edges in (
        ("conductivity", g.cond_density, g.mean_cond, dc, g.cond_edges),
        ("chargeability", g.charge_density, g.mean_charge, dm, g.charge_edges),
    ):
        nb = dens.shape[1]
        write_table(
            out / f"depth_{name}.csv",
            ["depth", "mean", "divergence"] + [f"p{j:02d}" for j in range(nb)],
            [[g.depths[i], mean[i], div[i], *dens[i]] for i in range(g.depths.size)],
        )
        write_table(out / f"bins_{name}.csv", ["bin", "lower", "upper"],
                    [[j, edges[j], edges[j + 1]] for j in range(nb)])
    if inv.ppd is not None:
        p = inv.ppd
        gates = cfg.system.gates
        write_table(
            out / "ppd.csv",
            ["gate", "t_start", "t_end", "observed", "mean", "sd", "residual"],
            [[i, gates[i, 0], gates[i, 1], inv.sounding.y[i], p.mean[i], p.sd[i], p.residual[i]]
             for i in range(gates.shape[0])],
        )
    summary = inv.summary()
    summary.update(extra or {})
    write_json(out / "summary.json", summary)
    _write_diagnostics(out / "diagnostics.jsonl", inv.result.diagnostics)
    _write_config(out / "config.yaml", cfg)


def _write_diagnostics(path, records) -> None:
    def clean(v):
        if isinstance(v, dict):
            return {str(k): clean(x) for k, x in v.items()}
        if isinstance(v, (list, tuple)):
            return [clean(x) for x in v]
        if isinstance(v, (np.floating, float)):
            v = float(v)
            return v if math.isfinite(v) else None
        if isinstance(v, np.integer):
            return int(v)
        return v

    with open(path, "w") as fh:
        for rec in records:
            fh.write(json.dumps(clean(rec), sort_keys=True) + "\n")


def _write_config(path, cfg: RunConfig) -> None:
    with open(path, "w") as fh:
        yaml.safe_dump(cfg.to_dict(), fh, sort_keys=True, default_flow_style=None)


# --------------------------------------------------------------------------
# synthetic data


def simulate_study(cfg: RunConfig, study: StudySpec, seed: int):
    """Noisy soundings for every study case, as ``[(case, basement, depth, m, sounding)]``."""
    op = operator_for(cfg.system)
    out = []
    for i, (b, d, m) in enumerate(study.cases()):
        rng = np.random.default_rng(derive_seed(seed, _SIM_STREAM, i))
        s = simulate_sounding(study.state(b, d, m), cfg.system, cfg.noise, rng, operator=op,
                              line_id=f"case{i:03d}", fiducial=float(i))
        out.append((i, b, d, m, s))
    return out


def synthetic_line(cfg: RunConfig, states, seed: int, *, spacing: float = 10.0,
                   line_id: str = "L1") -> LineDataset:
    """A straight east-west line with one noisy sounding per state, ``spacing`` m apart."""
    op = operator_for(cfg.system)
    soundings = []
    for i, st in enumerate(states):
        rng = np.random.default_rng(derive_seed(seed, _SIM_STREAM, i))
        soundings.append(simulate_sounding(st, cfg.system, cfg.noise, rng, operator=op,
                                           location=(i * spacing, 0.0, 0.0), line_id=line_id,
                                           fiducial=float(i)))
    return LineDataset(soundings, cfg.system.gates, cfg.spacing)


# --------------------------------------------------------------------------
# commands


def _config(args) -> RunConfig:
    cfg = load_config(args.config)
    s = cfg.sampler
    if args.seed is not None:
        s = replace(s, seed=args.seed)
    if args.particles is not None:
        if args.particles < 1:
            raise ConfigError("--particles must be >= 1")
        s = replace(s, n_particles=args.particles)
    cfg.sampler = s
    if args.workers is not None:
        if args.workers < 1:
            raise ConfigError("--workers must be >= 1")
        cfg.workers = args.workers
    cfg.resolved_workers()
    return cfg


def _set_threads(n: int) -> None:
    import numba

    numba.set_num_threads(max(1, min(n, numba.config.NUMBA_NUM_THREADS)))


def cmd_simulate(args) -> int:
    cfg = _config(args)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    _set_threads(cfg.resolved_workers())
    rows = []
    for i, b, d, m, s in simulate_study(cfg, cfg.study, cfg.sampler.seed):
        name = f"case_{i:03d}.csv"
        write_soundings(out / name, [s], cfg.system.gates)
        rows.append([i, b, d, m, int(np.sum(s.y < 0)), name])
    write_table(out / "cases.csv", ["case", "basement", "depth", "m", "n_negative", "file"], rows)
    _write_config(out / "config.yaml", cfg)
    print(f"wrote {len(rows)} soundings to {out}")
    return EXIT_OK


def _pick_sounding(path, index):
    data = read_soundings(path)
    if index is None:
        if len(data) != 1:
            raise ConfigError(f"{path} holds {len(data)} soundings; choose one with --index")
        index = 0
    if not 0 <= index < len(data):
        raise ConfigError(f"--index {index} out of range for {len(data)} soundings")
    return data, data.soundings[index]


def cmd_invert(args) -> int:
    cfg = _config(args)
    out = Path(args.out_dir)
    _set_threads(cfg.resolved_workers())
    if args.toy_target:
        inv, extra, diag = _toy_inversion(args.toy_target, cfg)
        if inv is None:
            out.mkdir(parents=True, exist_ok=True)
            write_json(out / "summary.json", extra)
            _write_diagnostics(out / "diagnostics.jsonl", diag)
            _write_config(out / "config.yaml", cfg)
            print(f"log evidence {extra['log_evidence']:.4f} (exact {extra['log_evidence_exact']:.4f})")
            return EXIT_OK
        write_inversion(out, inv, cfg, extra)
        print(f"toy target {args.toy_target}: artifacts in {out}")
        return EXIT_OK
    if not args.data:
        raise ConfigError("invert needs a sounding file or --toy-target")
    data, sounding = _pick_sounding(args.data, args.index)
    if not np.allclose(data.gates, cfg.system.gates, rtol=1e-9, atol=0):
        raise ConfigError("sounding gate schedule differs from the configured system")
    inv = invert_sounding(sounding, cfg)
    write_inversion(out, inv, cfg)
    print(f"log BFIPD {inv.log_bfipd:.4f}; artifacts in {out}")
    return EXIT_OK


def _line_worker(payload):
    """Invert one sounding of a line; never raises."""
    k, sounding, cfg_dict, seed, threads = payload
    _set_threads(threads)
    cfg = RunConfig.from_dict(cfg_dict)
    cfg.sampler = replace(cfg.sampler, seed=seed)
    try:
        inv = invert_sounding(sounding, cfg)
    except (SmcError, ForwardError, FloatingPointError, RuntimeError, ValueError) as exc:
        return k, None, f"{type(exc).__name__}: {exc}"
    return k, {
        "log_bfipd": inv.log_bfipd,
        "doi_cond": inv.grid.doi_cond,
        "doi_charge": inv.grid.doi_charge,
        "depths": inv.grid.depths,
        "mean_cond": inv.grid.mean_cond,
        "mean_charge": inv.grid.mean_charge,
        "residual": inv.ppd.residual,
    }, ""


def run_line(data: LineDataset, cfg: RunConfig, workers: int, seed: int):
    """Invert the decimated soundings; returns ``(kept indices, {k: result}, {k: error})``."""
    keep = data.decimate(cfg.spacing)
    n_proc = max(1, min(workers, len(keep)))
    threads = max(1, workers // n_proc)
    cd = cfg.to_dict()
    jobs = [(int(k), data.soundings[k], cd, derive_seed(seed, _LINE_STREAM, int(k)), threads)
            for k in keep]
    if n_proc == 1:
        outs = [_line_worker(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=n_proc) as ex:
            outs = list(ex.map(_line_worker, jobs))
    results = {k: r for k, r, _ in outs if r is not None}
    errors = {k: e for k, r, e in outs if r is None}
    return keep, results, errors


def write_line(out: Path, data: LineDataset, keep, results, errors) -> None:
    out.mkdir(parents=True, exist_ok=True)
    dist = data.distance()
    n_g = data.gates.shape[0]
    rows, depth_rows = [], []
    for k in keep:
        s = data.soundings[k]
        r = results.get(k)
        base = [int(k), s.line_id, s.fiducial, s.location[0], s.location[1], dist[k]]
        if r is None:
            rows.append(base + ["failed", errors[k], math.nan, math.nan, math.nan] + [math.nan] * n_g)
            continue
        rows.append(base + ["ok", "", r["log_bfipd"], r["doi_cond"], r["doi_charge"], *r["residual"]])
        for z, mc, mm in zip(r["depths"], r["mean_cond"], r["mean_charge"]):
            depth_rows.append([int(k), dist[k], z, mc, mm])
    write_table(
        out / "line_summary.csv",
        ["sounding", "line_id", "fiducial", "easting", "northing", "distance", "status", "error",
         "log_bfipd", "doi_conductivity", "doi_chargeability"] + [f"r{i:02d}" for i in range(n_g)],
        rows,
    )
    write_table(out / "line_depth.csv",
                ["sounding", "distance", "depth", "mean_log10_conductivity", "mean_chargeability"],
                depth_rows)


def cmd_detect_line(args) -> int:
    cfg = _config(args)
    data = read_soundings(args.data, cfg.spacing)
    if not np.allclose(data.gates, cfg.system.gates, rtol=1e-9, atol=0):
        raise ConfigError("line gate schedule differs from the configured system")
    keep, results, errors = run_line(data, cfg, cfg.resolved_workers(), cfg.sampler.seed)
    out = Path(args.out_dir)
    write_line(out, data, keep, results, errors)
    _write_config(out / "config.yaml", cfg)
    for k, e in errors.items():
        log.error("sounding %d failed: %s", k, e)
    print(f"{len(results)} of {len(keep)} soundings inverted; table in {out}")
    if errors:
        return EXIT_PARTIAL if results else EXIT_SAMPLER
    return EXIT_OK


def summarize(art: Path) -> tuple[str, list[list]]:
    """Report text and CSV rows for an ``invert`` artifact directory."""
    missing = [f for f in REQUIRED_ARTIFACTS if not (art / f).is_file()]
    if missing:
        raise ConfigError(f"{art}: missing artifacts: {', '.join(missing)}")
    summary = json.loads((art / "summary.json").read_text())
    _, ev = read_table(art / "evidence.csv")
    _, ppd = read_table(art / "ppd.csv")
    lines, rows = [], []
    lines.append("model marginals (kappa, lam, count, probability, log evidence)")
    for kappa, lam, count, prob, lz, _ in ev:
        if int(count) > 0:
            lines.append(f"  ({kappa},{lam})  {count:>6}  {float(prob):.4f}  {float(lz):.4f}")
            rows.append(["model", f"({kappa},{lam})", prob])
    b = summary["bfipd"]
    lb = float(summary["log_bfipd"]) if summary["bfipd_defined"] else math.nan
    if not summary["bfipd_defined"]:
        verdict = "BFIPD undefined (no chargeable or no non-chargeable models)"
    else:
        verdict = ("chargeable more likely" if lb > 0 else "no detectable chargeability")
        if summary["bfipd_low_confidence"]:
            verdict += " (low confidence: a model group holds no particles)"
    lines.append(f"BFIPD {b}  log BFIPD {summary['log_bfipd']}: {verdict}")
    rows.append(["bfipd", "bfipd", str(b)])
    rows.append(["bfipd", "log_bfipd", str(summary["log_bfipd"])])
    rows.append(["bfipd", "verdict", verdict])
    lines.append(f"DOI conductivity {summary['doi_conductivity']} m, "
                 f"chargeability {summary['doi_chargeability']} m")
    rows.append(["doi", "conductivity", str(summary["doi_conductivity"])])
    rows.append(["doi", "chargeability", str(summary["doi_chargeability"])])
    lines.append("PPD check per gate (pass when |residual| <= 2)")
    n_pass = 0
    for gate, _, _, _, _, _, res in ppd:
        ok = abs(float(res)) <= 2.0
        n_pass += ok
        lines.append(f"  gate {gate:>3}  residual {float(res):+.3f}  {'pass' if ok else 'FAIL'}")
        rows.append(["ppd", f"gate{int(gate):02d}", "pass" if ok else "fail"])
    lines.append(f"{n_pass} of {len(ppd)} gates pass")
    return "\n".join(lines) + "\n", rows


def cmd_summarize(args) -> int:
    art = Path(args.artifacts)
    text, rows = summarize(art)
    out = Path(args.out_dir) if args.out_dir else art
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.txt").write_text(text)
    write_table(out / "report.csv", ["section", "key", "value"], rows)
    sys.stdout.write(text)
    return EXIT_OK


def cmd_dump_filters(args) -> int:
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    tables = filter_tables()
    for name, arr in sorted(tables.items()):
        write_table(out / f"{name}.csv", ["index", "value"], [[i, v] for i, v in enumerate(arr)])
    print(f"wrote {len(tables)} filter tables to {out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ipdetect", description=__doc__.split("\n")[0])
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, out_default="."):
        sp.add_argument("--config", help="YAML run configuration")
        sp.add_argument("--seed", type=int, help="master seed (overrides the config)")
        sp.add_argument("--particles", type=int, help="particle count (overrides the config)")
        sp.add_argument("--workers", type=int,
                        help="parallel workers (default: config, then $IPDETECT_WORKERS, then 1)")
        sp.add_argument("--out-dir", default=out_default)

    sp = sub.add_parser("simulate", help="synthetic study soundings")
    common(sp)
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("invert", help="invert one sounding")
    sp.add_argument("data", nargs="?", help="sounding file")
    sp.add_argument("--index", type=int, help="row of a multi-sounding file")
    sp.add_argument("--toy-target", choices=TOY_TARGETS, help="analytic target instead of data")
    common(sp)
    sp.set_defaults(func=cmd_invert)

    sp = sub.add_parser("detect-line", help="invert every sounding of a line")
    sp.add_argument("data", help="line file")
    common(sp)
    sp.set_defaults(func=cmd_detect_line)

    sp = sub.add_parser("summarize", help="report on invert artifacts")
    sp.add_argument("artifacts", help="artifact directory")
    sp.add_argument("--out-dir", default=None, help="report location (default: artifact dir)")
    sp.set_defaults(func=cmd_summarize)

    sp = sub.add_parser("dump-filters", help="write filter tables")
    sp.add_argument("--out-dir", default=".")
    sp.set_defaults(func=cmd_dump_filters)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (SmcError, ForwardError, FloatingPointError) as exc:
        print(f"sampler failure: {exc}", file=sys.stderr)
        return EXIT_SAMPLER
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
