"""Acceptance criteria, one test each, at the stated tolerances.

Every test prints a ``criterion N: PASS|FAIL|XFAIL`` line to the terminal.
"""

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

import numpy as np
import pytest
from scipy import stats

from ipdetect.cli import derive_seed, invert_sounding, main, simulate_study
from ipdetect.detect import bayes_factor, evidence_bayes_factor, model_marginals
from ipdetect.forward import MU0, AemSystem, ForwardOperator, forward
from ipdetect.io import RunConfig, StudySpec
from ipdetect.likelihood import simulate_sounding
from ipdetect.model import (
    EarthProfile,
    ModelIndex,
    ParticleArray,
    ParticleState,
    PriorSpec,
    sample_prior_array,
)
from ipdetect.rjsmc import (
    CHARGEABLE,
    CONDUCTIVE,
    HistoryRecord,
    ParticleCloud,
    RjsmcConfig,
    adapt_proposals,
    mutate,
    rj_birth,
    rj_death,
    sample_rjsmc,
    tess,
    within_model_resample,
)
from ipdetect.smc import GaussianToyTarget, num_mutation_steps, run_static_smc
from ipdetect.toys import NestedGaussianToy, flat_log_likelihood


@pytest.fixture
def report(capsys):
    def _report(n, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail

    return _report


# --- 1 -------------------------------------------------------------------------


def test_criterion_1_conjugate_evidence(report):
    t = GaussianToyTarget()
    exact = -0.5 * math.log(2 * math.pi * 2) - 0.5 * 1.0**2 / 2  # log N(1; 0, 2)
    assert t.log_evidence() == pytest.approx(exact, abs=1e-12)
    t0 = time.perf_counter()
    lz = np.array([run_static_smc(t, 2000, seed=s).log_evidence for s in range(20)])
    elapsed = time.perf_counter() - t0
    worst = np.max(np.abs(lz - exact))
    ok = abs(lz.mean() - exact) <= 0.05 and worst <= 0.15 and elapsed < 10
    report(1, ok, f"mean error {lz.mean() - exact:+.4f} (<= 0.05), worst seed {worst:.4f} (<= 0.15), "
                  f"{elapsed:.1f} s (< 10 s)")


# --- 2 -------------------------------------------------------------------------


def test_criterion_2_model_selection(report):
    toy = NestedGaussianToy()
    k0, k1 = ModelIndex(0, 0), ModelIndex(1, 0)
    exact = toy.bayes_factor()
    t0 = time.perf_counter()
    counts, evid = [], []
    for s in range(20):
        res = sample_rjsmc(toy, toy.prior, RjsmcConfig(n_particles=4000, seed=s))
        counts.append(bayes_factor(model_marginals(res.cloud), toy.prior, k1, k0))
        evid.append(evidence_bayes_factor(res.log_z, k1, k0, toy.prior))
    elapsed = time.perf_counter() - t0
    bc, be = float(np.mean(counts)), float(np.mean(evid))
    rel = abs(bc / exact - 1)
    agree = abs(bc / be - 1)
    ok = rel <= 0.20 and agree <= 0.30 and elapsed < 60
    report(2, ok, f"exact BF {exact:.4f}, counts {bc:.4f} ({100 * rel:.1f}% <= 20%), evidence {be:.4f} "
                  f"(counts/evidence off by {100 * agree:.1f}% <= 30%), {elapsed:.1f} s (< 60 s)")


# --- 3 -------------------------------------------------------------------------


def random_cloud(rng, prior, n):
    b = sample_prior_array(prior, n, rng)
    models = b.model_flat(prior)
    w = rng.random(n) + 1e-6
    for k in np.unique(models):
        w[models == k] /= w[models == k].sum()
    counts = np.bincount(models, minlength=prior.n_models)
    return ParticleCloud(prior, b, np.zeros(n), np.log(w), np.where(counts > 0, 0.0, np.nan)), models, w


def test_criterion_3_combinatorics(report):
    table = [((0.44,), 0.01, 8), ((0.2,), 0.01, 21), ((0.5,), 0.01, 7), ((0.99,), 0.01, 1),
             ((0.1,), 0.05, 29), ((0.3,), 0.001, 20), ((0.44, 0.2), 0.01, 21)]
    got = [num_mutation_steps(list(p), c) for p, c, _ in table]
    # least integer r with (1 - p)^r <= c
    oracle = [math.ceil(math.log(c) / math.log(1 - min(p))) for p, c, _ in table]
    table_ok = got == [e for _, _, e in table] == oracle
    rng = np.random.default_rng(0)
    prior = PriorSpec(kappa_max=3, lambda_max=3)
    worst = 0.0
    for _ in range(200):
        cloud, models, w = random_cloud(rng, prior, int(rng.integers(5, 300)))
        expected = sum(1 / np.sum(w[models == k] ** 2) for k in np.unique(models))
        worst = max(worst, abs(tess(cloud) - expected) / expected)
    ok = table_ok and worst <= 1e-12
    report(3, ok, f"mutation-step table {got} ({'matches' if table_ok else 'differs'}); "
                  f"TESS vs summed ESS worst relative error {worst:.1e} on 200 clouds")


# --- 4 -------------------------------------------------------------------------

P4 = PriorSpec(kappa_max=3, lambda_max=3)


def prior_state(rng, kappa, lam):
    b = sample_prior_array(P4, 3000, rng)
    return b.state(int(np.flatnonzero((b.kappa == kappa) & (b.lam == lam))[0]))


def colour(rng, d, scale):
    a = rng.standard_normal((d, d))
    w, v = np.linalg.eigh(a @ a.T / d + 0.1 * np.eye(d))
    return (v * np.sqrt(w)) @ v.T * scale


def birth_vector(full, u, u_d, S, depths, profile):
    if profile == CONDUCTIVE:
        s = ParticleState(phi_b=full[0], phi=full[1:], z_sigma=depths, tau=0.5, c=0.5)
    else:
        s = ParticleState(phi_b=-1.0, m=full, z_m=depths, tau=0.5, c=0.5)
    new, _ = rj_birth(s, profile, S, P4, u_d=np.array([u_d]), u_p=np.array([u]))
    k = depths.size
    return np.concatenate([new.phi_b, new.phi[0, :k + 1]]) if profile == CONDUCTIVE else new.m[0, :k + 1]


def test_criterion_4_rj_kernel(report):
    rng = np.random.default_rng(44)
    # antisymmetry of birth and the death that undoes it
    worst_anti, n_anti = 0.0, 0
    like = lambda b: -((b.phi_b + 1.0) ** 2) - np.nansum(np.nan_to_num(b.m), axis=1)  # noqa: E731
    while n_anti < 100:
        profile = CONDUCTIVE if n_anti % 2 == 0 else CHARGEABLE
        k = int(rng.integers(0, 3))
        s = prior_state(rng, k if profile == CONDUCTIVE else 1, k if profile == CHARGEABLE else 1)
        S = colour(rng, k + 2 if profile == CONDUCTIVE else k + 1, 0.05)
        new, la_b = rj_birth(s, profile, S, P4, rng, loglike=like, gamma=0.7)
        if not np.isfinite(la_b[0]):
            continue
        old_depths = s.z_sigma if profile == CONDUCTIVE else s.z_m
        ns = new.state(0)
        new_depths = ns.z_sigma if profile == CONDUCTIVE else ns.z_m
        q = [j for j, z in enumerate(new_depths) if z not in old_depths][0]
        _, la_d = rj_death(new, profile, S, P4, index=q, loglike=like, gamma=0.7)
        worst_anti = max(worst_anti, abs(la_b[0] + la_d[0]))
        n_anti += 1
    # closed-form Jacobian against a central-difference determinant
    worst_jac = 0.0
    for case in range(100):
        profile = CONDUCTIVE if case % 2 == 0 else CHARGEABLE
        k = int(rng.integers(0, 3))
        depths = np.sort(rng.uniform(0, 400, k))
        if profile == CONDUCTIVE:
            full, S = rng.uniform(-3, 1, k + 1), colour(rng, k + 2, 0.1)
        else:
            full, S = rng.uniform(0.2, 0.8, k), colour(rng, k + 1, 0.05)
        u, u_d = rng.standard_normal(), rng.uniform(0, 400)
        x0 = np.concatenate([full, [u]])
        jac = np.empty((x0.size, x0.size))
        for j in range(x0.size):
            e = np.zeros(x0.size)
            e[j] = 1e-6
            jac[:, j] = (birth_vector(x0[:-1] + e[:-1], u + e[-1], u_d, S, depths, profile)
                         - birth_vector(x0[:-1] - e[:-1], u - e[-1], u_d, S, depths, profile)) / 2e-6
        i = int(np.sum(depths < u_d)) + 1
        Sf = S if profile == CONDUCTIVE else np.pad(S, ((1, 0), (1, 0)))
        closed = abs(Sf[i, i] - Sf[i, i - 1])
        worst_jac = max(worst_jac, abs(abs(np.linalg.det(jac)) / closed - 1))
    # naive proposals: the acceptance is the tempered likelihood ratio
    worst_naive = 0.0
    for case in range(50):
        profile = CONDUCTIVE if case % 2 == 0 else CHARGEABLE
        s = prior_state(rng, 1, 1)
        new, la = rj_birth(s, profile, None, P4, rng, loglike=like, gamma=0.3)
        base = ParticleArray.from_states([s], P4)
        worst_naive = max(worst_naive, abs(la[0] - 0.3 * (like(new)[0] - like(base)[0])))
        back, la = rj_death(new, profile, None, P4, index=0, loglike=like, gamma=0.3)
        worst_naive = max(worst_naive, abs(la[0] - 0.3 * (like(back)[0] - like(new)[0])))
    ok = worst_anti <= 1e-10 and worst_jac <= 1e-6 and worst_naive <= 1e-10
    report(4, ok, f"antisymmetry worst {worst_anti:.1e} (<= 1e-10) on 100 pairs; Jacobian worst relative "
                  f"{worst_jac:.1e} (<= 1e-6) on 100 cases; naive acceptance minus likelihood ratio "
                  f"worst {worst_naive:.1e}")


# --- 5 -------------------------------------------------------------------------


def test_criterion_5_half_space(report):
    from scipy.special import erf

    system = AemSystem(tx_height=0.0)
    a, current = system.tx_radius, system.current

    def exact(t, sigma):
        x = np.sqrt(MU0 * sigma / (4 * t)) * a
        core = 3 * erf(x) - 2 / np.sqrt(np.pi) * x * (3 + 2 * x**2) * np.exp(-x**2)
        return current / (sigma * a**3) * core * 1e12

    nodes, weights = np.polynomial.legendre.leggauss(32)
    g0, g1 = system.gates[:, :1], system.gates[:, 1:]
    tq = 0.5 * (g1 - g0) * nodes + 0.5 * (g1 + g0)
    t0 = time.perf_counter()
    op = ForwardOperator(system)
    errs, slopes = [], []
    for sigma in (0.001, 0.01, 0.1):
        y = op.response_profile(EarthProfile(np.zeros(0), np.array([sigma]), np.zeros(1), 1e-3, 1.0))
        ref = (exact(tq, sigma) * weights / 2).sum(axis=1)
        errs.append(float(np.max(np.abs(y / ref - 1))))
        slopes.append(float(np.polyfit(np.log(system.gate_centres[-5:]), np.log(y[-5:]), 1)[0]))
    elapsed = time.perf_counter() - t0
    ok = max(errs) < 0.02 and all(abs(s + 2.5) <= 0.05 for s in slopes) and elapsed < 5
    report(5, ok, "max gate error " + ", ".join(f"{100 * e:.2f}%" for e in errs) + " (< 2%); slopes "
                  + ", ".join(f"{s:+.3f}" for s in slopes) + f" (-2.5 +- 0.05); {elapsed:.2f} s (< 5 s)")


# --- 6 -------------------------------------------------------------------------


def test_criterion_6_ip_signature(report):
    system = AemSystem()
    study = StudySpec()
    y8 = forward(study.state(0.001, 20.0, 0.8), system)
    y0 = forward(study.state(0.001, 20.0, 0.0), system)
    late = slice(system.n_gates // 2, None)
    ok = bool(np.any(y8[late] < 0)) and bool(np.all(y0 > 0))
    report(6, ok, f"m = 0.8: {int(np.sum(y8[late] < 0))} negative late gates (>= 1); "
                  f"m = 0: {int(np.sum(y0 < 0))} negative gates (0)")


# --- 7 -------------------------------------------------------------------------

C7_DEPTHS = (10.0, 40.0, 80.0)
C7_M = (0.0, 0.4, 0.8)
C7_BASEMENT = (0.001, 0.1)
C7_SEEDS = 3
C7_N = 2000
C7_WORKERS = 8
C7_BUDGET_S = 2 * 3600.0


def _c7_job(payload):
    case, seed, sounding = payload
    cfg = RunConfig(sampler=RjsmcConfig(n_particles=C7_N, seed=seed), ppd_draws=200)
    return case, seed, invert_sounding(sounding, cfg).log_bfipd


def _c7_trends(lb):
    """Majority-vote trend checks on ``lb[basement, depth, m, seed]``."""
    votes = {"a": [], "b": [], "c": [], "d": []}
    for s in range(lb.shape[-1]):
        x = lb[..., s]
        votes["a"].append(x[0, 0, -1] > 0)
        votes["b"].append(all(np.all(np.diff(x[bi, :, mi]) <= 0)
                              for bi in range(x.shape[0]) for mi in range(1, x.shape[2])))
        votes["c"].append(all(np.all(np.diff(x[bi, di, :]) >= 0)
                              for bi in range(x.shape[0]) for di in range(x.shape[1])))
        votes["d"].append(bool(np.all(x[1, :, 1:] < x[0, :, 1:])))
    return {k: sum(v) * 2 > len(v) for k, v in votes.items()}


def test_criterion_7_detectability_trends(report, capsys):
    # live projection: forward cost per particle on the default prior, times a
    # lower bound on particle evaluations (10 annealing steps of 20 sweeps)
    batch = sample_prior_array(PriorSpec(), 200, np.random.default_rng(7))
    op = ForwardOperator(AemSystem())
    op.response_array(batch.take(np.arange(2)))
    t0 = time.perf_counter()
    op.response_array(batch)
    per_particle = (time.perf_counter() - t0) / 200
    n_inversions = len(C7_DEPTHS) * len(C7_M) * len(C7_BASEMENT) * C7_SEEDS
    lower = per_particle * C7_N * 10 * 21 * n_inversions
    cores = os.cpu_count() or 1
    workers = min(cores, C7_WORKERS)
    projected = lower / workers
    if projected > C7_BUDGET_S:
        msg = (f"criterion 7: XFAIL - {n_inversions} inversions at N = {C7_N} need at least "
               f"{lower / 3600:.1f} CPU hours ({1e3 * per_particle:.1f} ms per forward, >= 210 sweeps of "
               f"N per inversion); {cores} core(s) here gives >= {projected / 3600:.1f} h against the "
               f"2 h budget")
        with capsys.disabled():
            print("\n" + msg)
        pytest.xfail(msg)
    study = StudySpec(basement=C7_BASEMENT, depths=C7_DEPTHS, m=C7_M)
    cfg = RunConfig()
    cases = simulate_study(cfg, study, seed=7)
    jobs = [(i, derive_seed(7, i, s), snd) for i, _, _, _, snd in cases for s in range(C7_SEEDS)]
    t0 = time.perf_counter()
    with ProcessPoolExecutor(max_workers=workers) as ex:
        out = list(ex.map(_c7_job, jobs))
    elapsed = time.perf_counter() - t0
    lb = np.empty((len(C7_BASEMENT), len(C7_DEPTHS), len(C7_M), C7_SEEDS))
    seed_pos = {}
    for case, seed, v in out:
        s = seed_pos.setdefault(case, []).__len__()
        seed_pos[case].append(seed)
        bi, rest = divmod(case, len(C7_DEPTHS) * len(C7_M))
        di, mi = divmod(rest, len(C7_M))
        lb[bi, di, mi, s] = v
    trends = _c7_trends(lb)
    ok = all(trends.values()) and elapsed < C7_BUDGET_S
    report(7, ok, f"trends {trends}, {elapsed / 3600:.2f} h on {workers} workers")


# --- 8 -------------------------------------------------------------------------


def test_criterion_8_sampler_invariance(report):
    rng = np.random.default_rng(8)
    prior = PriorSpec(kappa_max=2, lambda_max=1)
    # within-model resampling keeps every model count
    cloud, _, _ = random_cloud(rng, prior, 500)
    before = cloud.n_by_model.copy()
    within_model_resample(cloud, rng)
    counts_kept = bool(np.array_equal(before, cloud.n_by_model))

    def gaussian_bg(b):
        return -0.5 * ((b.phi_b + 1.0) / 0.3) ** 2

    # particle total at every step of a run
    totals = []
    sharp = lambda b: -0.5 * ((b.phi_b + 1.0) / 0.01) ** 2  # noqa: E731
    sample_rjsmc(sharp, prior, RjsmcConfig(n_particles=600, seed=8),
                 on_step=lambda rec, cl: totals.append(int(np.sum(rec["n_by_model"]))))
    totals_ok = all(t == 600 for t in totals)
    # flat likelihood: uniform model marginals within 3 sigma
    n = 1800
    res = sample_rjsmc(flat_log_likelihood, prior, RjsmcConfig(n_particles=n, seed=9))
    p = 1 / prior.n_models
    z = np.abs(res.cloud.n_by_model - n * p) / math.sqrt(n * p * (1 - p))
    flat_ok = bool(np.all(z <= 3))
    # within-model kernel started in stationarity on a Gaussian target
    p0 = PriorSpec(kappa_max=0, lambda_max=0)
    m = 2000
    b = sample_prior_array(p0, m, rng)
    b.phi_b[:] = -1.0 + 0.3 * rng.standard_normal(m)
    cl = ParticleCloud(p0, b, gaussian_bg(b), np.full(m, -math.log(m)), np.zeros(1), gamma=1.0)
    hist = [HistoryRecord(0, 1.0, b.copy(), cl.log_like.copy(), np.zeros(1))]
    suite = adapt_proposals(cl, hist, 1.0, move_probs=(1.0, 0.0, 0.0))
    mutate(cl, suite, 50, 1.0, np.random.default_rng(10), gaussian_bg)
    pval = stats.kstest(cl.particles.phi_b, stats.norm(-1, 0.3).cdf).pvalue
    ok = counts_kept and totals_ok and flat_ok and pval > 0.01
    report(8, ok, f"resampling keeps counts: {counts_kept}; sum N = N at all {len(totals)} steps: {totals_ok}; "
                  f"flat marginals max |z| {z.max():.2f} (<= 3); KS p {pval:.3f} (> 0.01)")


# --- 9 -------------------------------------------------------------------------

C9_TRUTH = ParticleState(phi_b=-2.0, phi=[-1.0], z_sigma=[40.0], tau=0.5, c=0.5)


@pytest.mark.slow
def test_criterion_9_ppd_calibration(report):
    cfg = RunConfig(prior=PriorSpec(kappa_max=2, lambda_max=2),
                    sampler=RjsmcConfig(n_particles=200, max_mutation_steps=30), ppd_draws=500)
    inside, per_rep = [], []
    t0 = time.perf_counter()
    for rep in range(10):
        rng = np.random.default_rng(derive_seed(9, rep))
        s = simulate_sounding(C9_TRUTH, cfg.system, cfg.noise, rng)
        inv = invert_sounding(s, replace(cfg, sampler=replace(cfg.sampler, seed=derive_seed(90, rep))))
        r = np.abs(inv.ppd.residual) <= 2
        inside.append(r)
        per_rep.append(f"{r.mean():.2f}")
    frac = float(np.mean(inside))
    report(9, frac >= 0.9, f"{100 * frac:.1f}% of {np.size(inside)} residuals in [-2, 2] (>= 90%); "
                           f"per replicate {per_rep}; {time.perf_counter() - t0:.0f} s")


# --- 10 ------------------------------------------------------------------------


def test_criterion_10_determinism(report, tmp_path):
    cfg = tmp_path / "c.yaml"
    cfg.write_text("prior: {kappa_max: 1, lambda_max: 1}\n"
                   "sampler: {n_particles: 60, max_mutation_steps: 3}\n"
                   "output: {ppd_draws: 50}\n"
                   "study: {basement: [0.001], depths: [20.0], m: [0.8]}\n")
    dirs = []
    for run in ("a", "b"):
        sim, out = tmp_path / f"sim_{run}", tmp_path / f"inv_{run}"
        assert main(["simulate", "--config", str(cfg), "--seed", "11", "--out-dir", str(sim)]) == 0
        assert main(["invert", str(sim / "case_000.csv"), "--config", str(cfg), "--seed", "11",
                     "--out-dir", str(out)]) == 0
        dirs.append((sim, out))
    diffs, n_files = [], 0
    for (sa, oa), (sb, ob) in [(dirs[0], dirs[1])]:
        for da, db in ((sa, sb), (oa, ob)):
            for f in sorted(p.name for p in da.iterdir()):
                n_files += 1
                if (da / f).read_bytes() != (db / f).read_bytes():
                    diffs.append(f)
    report(10, not diffs and n_files > 5, f"{n_files} artifacts compared, {len(diffs)} differ {diffs}")
