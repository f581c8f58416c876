import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import stats

from ipdetect.model import (
    ModelIndex,
    ParticleArray,
    ParticleState,
    PriorSpec,
    log_prior_array,
    sample_prior_array,
)
from ipdetect.rjsmc import (
    CHARGEABLE,
    CONDUCTIVE,
    HistoryRecord,
    ParticleCloud,
    ProposalSuite,
    RjsmcConfig,
    adapt_proposals,
    fit_model_proposal,
    model_ess,
    mutate,
    next_gamma,
    recycling_weights,
    reweight_cloud,
    rj_birth,
    rj_death,
    sample_rjsmc,
    tess,
    within_model_resample,
)
from ipdetect.smc import run_static_smc
from ipdetect.toys import flat_log_likelihood

SMALL = PriorSpec(kappa_max=2, lambda_max=1)


def cloud_with_models(flat_models, prior=SMALL, log_w=None, log_like=None, seed=0):
    """Cloud whose particle ``i`` is a prior draw from model ``flat_models[i]``."""
    flat_models = np.asarray(flat_models)
    n = flat_models.size
    rng = np.random.default_rng(seed)
    big = sample_prior_array(prior, 50 * n * prior.n_models, rng)
    mf = big.model_flat(prior)
    idx = [np.flatnonzero(mf == k)[j] for j, k in enumerate(flat_models)]
    batch = big.take(np.array(idx))
    ll = np.zeros(n) if log_like is None else np.asarray(log_like, dtype=float)
    counts = np.bincount(flat_models, minlength=prior.n_models)
    lw = -np.log(counts[flat_models]).astype(float) if log_w is None else np.asarray(log_w, dtype=float)
    lz = np.where(counts > 0, 0.0, np.nan)
    return ParticleCloud(prior, batch, ll, lw, lz)


# --- TESS -----------------------------------------------------------------------


def test_tess_uniform_is_n():
    c = cloud_with_models([0, 0, 1, 1, 1, 4])
    assert tess(c) == pytest.approx(6)


def test_tess_sums_model_ess():
    # model 0: 40 equal weights; model 1: weights giving ESS 25 (25 equal, rest zero)
    lw = np.concatenate([np.full(40, -math.log(40)), np.full(25, -math.log(25)), np.full(15, -np.inf)])
    c = cloud_with_models([0] * 40 + [1] * 40, log_w=lw)
    e = model_ess(c)
    assert e[0] == pytest.approx(40) and e[1] == pytest.approx(25)
    assert tess(c) == pytest.approx(65)


def test_tess_single_model():
    w = np.random.default_rng(0).random(30)
    w /= w.sum()
    c = cloud_with_models([3] * 30, log_w=np.log(w))
    assert tess(c) == pytest.approx(1 / np.sum(w**2), rel=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=1, max_size=40), st.integers(0, 2**32 - 1))
def test_tess_identity(models, seed):
    models = np.array(models)
    rng = np.random.default_rng(seed)
    w = rng.random(models.size) + 1e-3
    for k in np.unique(models):
        w[models == k] /= w[models == k].sum()
    c = cloud_with_models(models, log_w=np.log(w))
    expected = sum(1 / np.sum(w[models == k] ** 2) for k in np.unique(models))
    assert tess(c) == pytest.approx(expected, rel=1e-12)


# --- temperature and reweighting -----------------------------------------------


def test_next_gamma_flat_likelihood():
    c = cloud_with_models(np.arange(100) % 6)
    assert next_gamma(c, RjsmcConfig()) == 1.0


def test_next_gamma_at_one_rejected():
    c = cloud_with_models([0, 1])
    c.gamma = 1.0
    with pytest.raises(ValueError):
        next_gamma(c, RjsmcConfig())


def test_next_gamma_peaked():
    models = np.arange(600) % 6
    ll = np.random.default_rng(1).normal(0, 500, 600)
    c = cloud_with_models(models, log_like=ll)
    cfg = RjsmcConfig(n_particles=600)
    g = next_gamma(c, cfg)
    assert 0 < g < 1
    reweight_cloud(c, g)
    assert abs(tess(c) - 0.5 * 600) <= 0.01 * 600


def test_reweight_cloud_evidence_per_model():
    ll = np.log([1.0, 3.0, 2.0, 2.0])
    c = cloud_with_models([0, 0, 1, 1], log_like=ll)
    inc = reweight_cloud(c, 1.0)
    assert inc[0] == pytest.approx(math.log(2.0)) and inc[1] == pytest.approx(math.log(2.0))
    assert np.isnan(inc[2])
    np.testing.assert_allclose(np.exp(c.log_w), [0.25, 0.75, 0.5, 0.5])
    assert c.log_z_complete[0] and not c.log_z_complete[2]


def test_reweight_freezes_emptied_model():
    c = cloud_with_models([0, 0, 1, 1])
    reweight_cloud(c, 0.2)
    # model 1 empties (particles jumped away), its evidence stays finite
    c.particles.kappa[2:] = 0
    c.particles.lam[2:] = 0
    c.log_w = np.full(4, -math.log(4))
    before = c.log_z[1]
    reweight_cloud(c, 0.5)
    assert c.log_z[1] == before and np.isfinite(c.log_z[1])
    assert not c.log_z_complete[1] and c.log_z_complete[0]


def test_within_resample_preserves_counts():
    rng = np.random.default_rng(2)
    models = rng.integers(0, 6, 200)
    w = rng.random(200)
    for k in np.unique(models):
        w[models == k] /= w[models == k].sum()
    c = cloud_with_models(models, log_w=np.log(w))
    before = c.n_by_model.copy()
    within_model_resample(c, rng)
    np.testing.assert_array_equal(c.n_by_model, before)
    np.testing.assert_allclose(np.exp(c.log_w), 1 / before[c.models])


def test_within_resample_singleton_and_uniform():
    c = cloud_with_models([0, 1, 1, 1])
    states = [c.particles.state(i) for i in range(4)]
    within_model_resample(c, np.random.default_rng(3))
    assert c.particles.state(0).phi_b == states[0].phi_b
    assert sorted(c.particles.phi_b[1:]) == sorted(s.phi_b for s in states[1:])


def test_within_resample_unbiased():
    rng = np.random.default_rng(4)
    base = cloud_with_models([0, 0, 1, 1], log_w=np.log([0.9, 0.1, 0.5, 0.5]))
    first = base.particles.phi_b[0]
    counts = []
    for _ in range(10_000):
        c = ParticleCloud(base.prior, base.particles.copy(), base.log_like.copy(),
                          base.log_w.copy(), base.log_z.copy())
        within_model_resample(c, rng)
        counts.append(np.sum(c.particles.phi_b[:2] == first))
    assert np.mean(counts) == pytest.approx(1.8, abs=0.02)


# --- recycling ----------------------------------------------------------------


def test_recycling_one_term():
    ll = np.array([-1.0, -3.0])
    got = recycling_weights(ll, [0.0], [0.0], 0.4)
    np.testing.assert_allclose(got, 0.4 * ll, rtol=1e-14)


def test_recycling_equal_schedule_is_evidence():
    ll = np.array([-1.0, -3.0, 0.5])
    got = recycling_weights(ll, [0.3, 0.3, 0.3], [-2.0, -2.0, -2.0], 0.3, log=False)
    np.testing.assert_allclose(got, math.exp(-2.0), rtol=1e-12)


def test_recycling_three_step_hand_value():
    # likelihoods 1, 2, 4; archived temperatures 0, 0.5, 1 with Z 1, 1.2, 1.9
    lik = np.array([1.0, 2.0, 4.0])
    gam = np.array([0.0, 0.5, 1.0])
    z = np.array([1.0, 1.2, 1.9])
    g_t = 1.0
    expected = [L**g_t / (sum(L**g / zz for g, zz in zip(gam, z)) / 3) for L in lik]
    got = recycling_weights(np.log(lik), gam, np.log(z), g_t, log=False)
    np.testing.assert_allclose(got, expected, rtol=1e-12)


def test_recycling_requires_evidence():
    with pytest.raises(ValueError):
        recycling_weights([0.0], [0.0, 0.5], [0.0, np.nan], 0.5)


# --- proposal adaptation --------------------------------------------------------


def test_fit_isotropic_gaussian():
    x = np.random.default_rng(5).standard_normal((20_000, 3))
    p = fit_model_proposal(ModelIndex(0, 0), x, np.zeros(x.shape[0]))
    assert not p.naive
    np.testing.assert_allclose(p.axes.T @ p.axes, np.eye(3), atol=1e-12)
    np.testing.assert_allclose(p.sd, 1.0, atol=0.05)
    np.testing.assert_allclose(p.colour_cond @ p.colour_cond, p.cov[:1, :1], rtol=1e-10)


def test_fit_rank_deficient():
    z = np.random.default_rng(6).standard_normal((500, 1))
    x = np.hstack([z, z, 2 * z])
    p = fit_model_proposal(ModelIndex(0, 0), x, np.zeros(500))
    raw = np.cov(x, rowvar=False, bias=True)
    assert not p.naive
    np.testing.assert_allclose(p.cov - raw, 1e-8 * np.trace(raw) / 3 * np.eye(3), atol=1e-12)
    assert np.all(p.sd > 0)
    np.testing.assert_allclose((p.axes * p.sd**2) @ p.axes.T, p.cov, atol=1e-10)


def test_fit_impoverished_is_naive():
    x = np.random.default_rng(7).standard_normal((4, 3))
    assert fit_model_proposal(ModelIndex(0, 0), x, np.zeros(4)).naive


def test_adapt_empty_model_is_naive():
    c = cloud_with_models(np.zeros(200, dtype=int))
    hist = [HistoryRecord(0, 0.0, c.particles.copy(), c.log_like.copy(), c.log_z.copy())]
    suite = adapt_proposals(c, hist, 0.0)
    assert not suite.get(0).naive
    assert suite.get(3).naive


def test_model_jump_rows_sum_to_one():
    suite = ProposalSuite(SMALL, {})
    for k in range(SMALL.n_models):
        row = suite.model_jump(k)
        assert sum(row.values()) == pytest.approx(1.0)


# --- birth and death ------------------------------------------------------------

PRIOR = PriorSpec(kappa_max=3, lambda_max=3)


def state_k(k, l, seed=0):
    b = sample_prior_array(PRIOR, 2000, np.random.default_rng(seed))
    i = np.flatnonzero((b.kappa == k) & (b.lam == l))[0]
    return b.state(i)


@pytest.mark.parametrize("profile", [CONDUCTIVE, CHARGEABLE])
def test_naive_birth_flat_accepts(profile):
    s = state_k(1, 1)
    for seed in range(5):
        _, la = rj_birth(s, profile, None, PRIOR, np.random.default_rng(seed))
        assert la[0] == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("profile", [CONDUCTIVE, CHARGEABLE])
def test_naive_death_flat_accepts(profile):
    s = state_k(2, 2)
    for q in range(2):
        _, la = rj_death(s, profile, None, PRIOR, index=q)
        assert la[0] == pytest.approx(0.0, abs=1e-12)


def test_boundaries_rejected():
    _, la = rj_birth(state_k(3, 0), CONDUCTIVE, None, PRIOR, np.random.default_rng(0))
    assert la[0] == -np.inf
    _, la = rj_birth(state_k(0, 3), CHARGEABLE, None, PRIOR, np.random.default_rng(0))
    assert la[0] == -np.inf
    _, la = rj_death(state_k(0, 2), CONDUCTIVE, None, PRIOR)
    assert la[0] == -np.inf
    _, la = rj_death(state_k(2, 0), CHARGEABLE, None, PRIOR)
    assert la[0] == -np.inf


def random_colour(d, rng):
    a = rng.standard_normal((d, d))
    cov = a @ a.T / d + 0.1 * np.eye(d)
    w, v = np.linalg.eigh(cov)
    return (v * np.sqrt(w)) @ v.T


def test_two_parameter_jacobian_by_hand():
    # half-space (phi_b) -> one conductive layer; property vector (phi_b, phi_1)
    S = np.array([[0.5, 0.2], [0.2, 0.3]])
    s = ParticleState(phi_b=-1.0, tau=0.5, c=0.5)
    p0 = PriorSpec(kappa_max=1, lambda_max=0)
    u = 0.7
    new, la = rj_birth(s, CONDUCTIVE, S, p0, u_d=np.array([100.0]), u_p=np.array([u]))
    det = S[1, 1] - S[1, 0]
    assert new.phi_b[0] == pytest.approx(-1.0 + S[1, 0] * u, abs=1e-15)
    assert new.phi[0, 0] == pytest.approx(-1.0 + S[1, 1] * u, abs=1e-15)
    lp = log_prior_array(new, p0)[0] - log_prior_array(ParticleArray.from_states([s], p0), p0)[0]
    expected = lp + math.log(p0.z_max) - math.log(1) + 0.5 * u**2 + 0.5 * math.log(2 * math.pi) \
        + math.log(abs(det))
    assert la[0] == pytest.approx(expected, abs=1e-12)


def birth_map(full, u, u_d, colour, depths, profile):
    """Property vector after a coloured birth, as a function of (old vector, u)."""
    k = depths.size
    if profile == CONDUCTIVE:
        s = ParticleState(phi_b=full[0], phi=full[1:], z_sigma=depths, tau=0.5, c=0.5)
    else:
        s = ParticleState(phi_b=-1.0, m=full, z_m=depths, tau=0.5, c=0.5)
    new, _ = rj_birth(s, profile, colour, PRIOR, u_d=np.array([u_d]), u_p=np.array([u]))
    if profile == CONDUCTIVE:
        return np.concatenate([new.phi_b, new.phi[0, : k + 1]])
    return new.m[0, : k + 1]


@pytest.mark.parametrize("case", range(100))
def test_jacobian_matches_finite_difference(case):
    rng = np.random.default_rng(1000 + case)
    profile = CONDUCTIVE if case % 2 == 0 else CHARGEABLE
    k = int(rng.integers(0, 3))
    depths = np.sort(rng.uniform(0, 400, k))
    if profile == CONDUCTIVE:
        full = rng.uniform(-3, 1, k + 1)
        colour = random_colour(k + 2, rng) * 0.1
    else:
        full = rng.uniform(0.2, 0.8, k)
        colour = random_colour(k + 1, rng) * 0.05
    u, u_d = rng.standard_normal(), rng.uniform(0, 400)
    x0 = np.concatenate([full, [u]])
    f = lambda x: birth_map(x[:-1], x[-1], u_d, colour, depths, profile)  # noqa: E731
    h = 1e-6
    jac = np.empty((x0.size, x0.size))
    for j in range(x0.size):
        e = np.zeros(x0.size)
        e[j] = h
        jac[:, j] = (f(x0 + e) - f(x0 - e)) / (2 * h)
    i = int(np.sum(depths < u_d)) + 1
    S = colour if profile == CONDUCTIVE else np.pad(colour, ((1, 0), (1, 0)))
    closed = abs(S[i, i] - S[i, i - 1])
    assert abs(np.linalg.det(jac)) == pytest.approx(closed, rel=1e-6)


@pytest.mark.parametrize("case", range(30))
def test_birth_death_antisymmetry(case):
    rng = np.random.default_rng(case)
    profile = CONDUCTIVE if case % 2 == 0 else CHARGEABLE
    k = int(rng.integers(0, 3))
    s = state_k(k if profile == CONDUCTIVE else 1, k if profile == CHARGEABLE else 1, seed=case)
    naive = case % 3 == 0
    if naive:
        colour = None
    else:
        colour = random_colour(k + 2 if profile == CONDUCTIVE else k + 1, rng) * 0.05
    new, la_b = rj_birth(s, profile, colour, PRIOR, rng)
    if not np.isfinite(la_b[0]):
        pytest.skip("proposal left the prior support")
    depths = new.z_sigma[0] if profile == CONDUCTIVE else new.z_m[0]
    born = [j for j, z in enumerate(depths[~np.isnan(depths)])
            if z not in (s.z_sigma if profile == CONDUCTIVE else s.z_m)]
    back, la_d = rj_death(new, profile, colour, PRIOR, index=born[0])
    assert la_d[0] == pytest.approx(-la_b[0], abs=1e-10)
    a, b = back.state(0), s
    np.testing.assert_allclose(a.phi_b, b.phi_b, atol=1e-12)
    np.testing.assert_allclose(a.phi, b.phi, atol=1e-12)
    np.testing.assert_allclose(a.m, b.m, atol=1e-12)


def test_likelihood_ratio_added():
    s = state_k(1, 0)
    ll = lambda b: -b.phi_b * 3.0  # noqa: E731
    new, la_prior = rj_birth(s, CONDUCTIVE, None, PRIOR, np.random.default_rng(0))
    _, la = rj_birth(s, CONDUCTIVE, None, PRIOR, np.random.default_rng(0), loglike=ll, gamma=0.5)
    base = ParticleArray.from_states([s], PRIOR)
    assert la[0] == pytest.approx(la_prior[0] + 0.5 * (ll(new)[0] - ll(base)[0]))


# --- mutation ------------------------------------------------------------------


def test_mutate_zero_sweeps():
    c = cloud_with_models(np.arange(30) % 6)
    before = c.particles.copy()
    suite = adapt_proposals(c, [], 0.0)
    mutate(c, suite, 0, 1.0, np.random.default_rng(0), flat_log_likelihood)
    np.testing.assert_array_equal(c.particles.phi_b, before.phi_b)


def test_mutate_all_rejected():
    c = cloud_with_models(np.arange(60) % 6)
    hist = [HistoryRecord(0, 0.0, c.particles.copy(), c.log_like.copy(), c.log_z.copy())]
    suite = adapt_proposals(c, hist, 0.0, scale=1e12, move_probs=(1.0, 0.0, 0.0))
    before = c.particles.copy()
    counts = c.n_by_model.copy()
    for k in range(SMALL.n_models):
        suite.models.pop(k, None)
    suite.models.update({k: _huge(k) for k in range(SMALL.n_models)})
    stats_ = mutate(c, suite, 3, 1.0, np.random.default_rng(1), flat_log_likelihood)
    assert stats_["within"][0] == 0
    np.testing.assert_array_equal(c.particles.phi_b, before.phi_b)
    np.testing.assert_array_equal(c.n_by_model, counts)


def _huge(k):
    from ipdetect.rjsmc import ModelProposal

    model = ModelIndex.from_flat(k, SMALL)
    d = 2 * model.kappa + 2 * model.lam + 3
    return ModelProposal(model, naive=False, mean=np.zeros(d), cov=np.eye(d), axes=np.eye(d),
                         sd=np.full(d, 1e12), colour_cond=np.eye(model.kappa + 1),
                         colour_charge=np.eye(model.lam))


class GaussianOnBackground:
    """Likelihood N(phi_b; -1, 0.3^2) on a half-space prior: the target is a
    (negligibly truncated) Gaussian in phi_b and uniform in tau and c."""

    def __call__(self, batch):
        return -0.5 * ((batch.phi_b + 1.0) / 0.3) ** 2


@pytest.mark.parametrize("adaptive", [True, False])
def test_within_model_kernel_stationary(adaptive):
    prior = PriorSpec(kappa_max=0, lambda_max=0)
    n = 2000
    rng = np.random.default_rng(11)
    batch = sample_prior_array(prior, n, rng)
    batch.phi_b[:] = -1.0 + 0.3 * rng.standard_normal(n)
    like = GaussianOnBackground()
    c = ParticleCloud(prior, batch, like(batch), np.full(n, -math.log(n)), np.zeros(1), gamma=1.0)
    if adaptive:
        hist = [HistoryRecord(0, 1.0, batch.copy(), c.log_like.copy(), np.zeros(1))]
        suite = adapt_proposals(c, hist, 1.0, move_probs=(1.0, 0.0, 0.0))
        assert not suite.get(0).naive
    else:
        suite = ProposalSuite(prior, {}, move_probs=(1.0, 0.0, 0.0))
    st_ = mutate(c, suite, 50, 1.0, np.random.default_rng(12), like)
    assert st_["within"][0] > 0
    # 2000 chains x 50 sweeps = 1e5 transitions started in stationarity
    assert stats.kstest(c.particles.phi_b, stats.norm(-1, 0.3).cdf).pvalue > 0.01
    assert stats.kstest(c.particles.tau, stats.uniform(0, 1).cdf).pvalue > 0.01


# --- full runs ------------------------------------------------------------------


def test_flat_run_uniform_marginals():
    n = 1200
    seen = []
    res = sample_rjsmc(flat_log_likelihood, SMALL, RjsmcConfig(n_particles=n, seed=3),
                       on_step=lambda rec, cl: seen.append(sum(rec["n_by_model"])))
    counts = res.cloud.n_by_model
    p = 1 / SMALL.n_models
    assert np.all(np.abs(counts - n * p) <= 3 * math.sqrt(n * p * (1 - p)))
    np.testing.assert_array_equal(res.log_z, 0.0)
    assert seen == [n] * len(seen)
    assert res.log_z_complete.all()


def test_invariants_every_step():
    like = GaussianOnBackground()
    records = []

    def check(rec, cl):
        records.append(rec)
        assert sum(rec["n_by_model"]) == cl.n
        for _, idx in cl.groups():
            assert np.exp(cl.log_w[idx]).sum() == pytest.approx(1.0)
        assert np.all(np.isfinite(cl.log_z[cl.n_by_model > 0]))

    sample_rjsmc(like, SMALL, RjsmcConfig(n_particles=400, seed=5), on_step=check)
    assert records[-1]["gamma"] == 1.0
    assert all(r["mutation_steps"] <= 100 for r in records)


def test_seeded_runs_identical():
    like = GaussianOnBackground()
    cfg = RjsmcConfig(n_particles=200, seed=8)
    a, b = sample_rjsmc(like, SMALL, cfg), sample_rjsmc(like, SMALL, cfg)
    np.testing.assert_array_equal(a.cloud.particles.phi_b, b.cloud.particles.phi_b)
    np.testing.assert_array_equal(a.log_z, b.log_z)


class StaticHalfSpace:
    """The same half-space problem seen by the fixed-dimension sampler."""

    dim = 1

    def sample_prior(self, n, rng):
        return rng.uniform(-4, 2, (n, 1))

    def log_prior(self, x):
        inside = (x[:, 0] >= -4) & (x[:, 0] <= 2)
        return np.where(inside, -math.log(6), -np.inf)

    def log_like(self, x):
        return -0.5 * ((x[:, 0] + 1.0) / 0.3) ** 2


def test_single_model_evidence_matches_static():
    prior = PriorSpec(kappa_max=0, lambda_max=0)
    like = GaussianOnBackground()
    rj = [sample_rjsmc(like, prior, RjsmcConfig(n_particles=500, seed=s)).log_z[0] for s in range(20)]
    st_ = [run_static_smc(StaticHalfSpace(), 500, seed=100 + s).log_evidence for s in range(20)]
    assert stats.ks_2samp(rj, st_).pvalue > 0.01
    exact = math.log(0.3 * math.sqrt(2 * math.pi) / 6)
    assert abs(np.mean(rj) - exact) < 0.05 and abs(np.mean(st_) - exact) < 0.05
