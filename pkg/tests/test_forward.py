import time

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import erf

from ipdetect.forward import (
    MU0,
    AemSystem,
    ForwardOperator,
    FrequencyGrid,
    cole_cole,
    default_gates,
    filter_tables,
    forward,
    hankel_transform,
    layered_kernel,
)
from ipdetect.io import StudySpec
from ipdetect.model import EarthProfile, ParticleState, PriorSpec, sample_prior_array

SURFACE = AemSystem(tx_height=0.0)


def half_space(sigma, tau=1e-3, c=1.0):
    return EarthProfile(np.zeros(0), np.array([sigma]), np.zeros(1), tau, c)


def central_loop_dbdt(t, sigma, radius, current):
    """Closed-form -dBz/dt (pT/s) at the centre of a loop on a half-space."""
    x = np.sqrt(MU0 * sigma / (4 * t)) * radius
    core = 3 * erf(x) - 2 / np.sqrt(np.pi) * x * (3 + 2 * x**2) * np.exp(-x**2)
    return current / (sigma * radius**3) * core * 1e12


def gate_average(fn, gates, n=32):
    x, w = np.polynomial.legendre.leggauss(n)
    a, b = gates[:, :1], gates[:, 1:]
    nodes = 0.5 * (b - a) * x + 0.5 * (a + b)
    return (fn(nodes) * w / 2).sum(axis=1)


# --- Cole-Cole --------------------------------------------------------------


def test_cole_cole_no_chargeability():
    w = np.logspace(-2, 8, 11)
    np.testing.assert_array_equal(cole_cole(0.05, 0.0, 1e-3, 0.5, w), 0.05)


def test_cole_cole_dc_limit():
    assert cole_cole(0.1, 0.3, 1e-3, 0.7, 1e-12) == pytest.approx(0.1 * 0.7, rel=1e-6)


def test_cole_cole_hand_value():
    v = cole_cole(0.1, 0.5, 1.0, 1.0, 1.0)
    assert v == pytest.approx(0.075 + 0.025j, abs=1e-15)


@pytest.mark.parametrize("args", [(0.0, 0.1, 1e-3, 1, 1), (0.1, 1.5, 1e-3, 1, 1),
                                  (0.1, 0.1, 0.0, 1, 1), (0.1, 0.1, 1e-3, 1.5, 1)])
def test_cole_cole_rejects_invalid(args):
    with pytest.raises(ValueError):
        cole_cole(*args)


# --- kernel -------------------------------------------------------------------


def test_kernel_half_space_closed_form():
    sigma = 0.02
    w = np.array([1e1, 1e3, 1e5])[:, None]
    lam = np.logspace(-4, 0, 9)[None, :]
    got = layered_kernel(half_space(sigma), w, lam)
    u1 = np.sqrt(lam**2 + 1j * w * MU0 * sigma)
    np.testing.assert_allclose(got, (lam - u1) / (lam + u1), rtol=1e-12)


def test_kernel_identical_adjacent_segments_merge():
    split = EarthProfile(np.array([10.0, 30.0]), np.array([0.01, 0.05, 0.05]), np.zeros(3), 1e-3, 1.0)
    merged = EarthProfile(np.array([10.0]), np.array([0.01, 0.05]), np.zeros(2), 1e-3, 1.0)
    w, lam = 1e3, np.logspace(-4, -1, 7)
    np.testing.assert_allclose(layered_kernel(split, w, lam), layered_kernel(merged, w, lam), rtol=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.floats(-3, 1), st.floats(-3, 1), st.floats(1, 80), st.floats(0, 1),
       st.floats(1, 79))
def test_kernel_null_interface(phi1, phi2, z, m, frac):
    base = EarthProfile(np.array([z]), 10.0 ** np.array([phi1, phi2]), np.array([0.0, m]), 1e-3, 0.8)
    cut = z * frac / 80
    extra = EarthProfile(np.array([cut, z]), 10.0 ** np.array([phi1, phi1, phi2]),
                         np.array([0.0, 0.0, m]), 1e-3, 0.8)
    w, lam = np.array([1e2, 1e5])[:, None], np.logspace(-4, -1, 5)[None, :]
    np.testing.assert_allclose(layered_kernel(extra, w, lam), layered_kernel(base, w, lam),
                               rtol=1e-12, atol=1e-15)


# --- Hankel -----------------------------------------------------------------


def test_hankel_order0_pair():
    a, r = 10.0, 30.0
    got = hankel_transform(lambda lam: np.exp(-a * lam), r, 0)
    assert got == pytest.approx(0.0316228, rel=1e-5)
    assert got == pytest.approx(1 / np.sqrt(a**2 + r**2), rel=1e-6)


@pytest.mark.parametrize("a,r", [(10.0, 30.0), (60.0, 13.0), (5.0, 100.0)])
def test_hankel_order1_pair(a, r):
    got = hankel_transform(lambda lam: lam * np.exp(-a * lam), r, 1)
    assert got == pytest.approx(r / (a**2 + r**2) ** 1.5, rel=1e-6)


def test_hankel_short_filter_close():
    got = hankel_transform(lambda lam: np.exp(-10.0 * lam), 30.0, 0, n_points=201)
    assert got == pytest.approx(1 / np.sqrt(1000.0), rel=1e-3)


def test_hankel_zero_kernel():
    assert hankel_transform(lambda lam: np.zeros_like(lam), 13.0, 1) == 0.0


# --- transient --------------------------------------------------------------


@pytest.mark.parametrize("sigma", [0.001, 0.01, 0.1])
def test_half_space_transient(sigma):
    y = ForwardOperator(SURFACE).response_profile(half_space(sigma))
    ref = gate_average(lambda t: central_loop_dbdt(t, sigma, SURFACE.tx_radius, SURFACE.current),
                       SURFACE.gates)
    assert np.max(np.abs(y / ref - 1)) < 0.02


@pytest.mark.parametrize("sigma", [0.001, 0.01, 0.1])
def test_late_time_slope(sigma):
    y = ForwardOperator(SURFACE).response_profile(half_space(sigma))
    slope = np.polyfit(np.log(SURFACE.gate_centres[-5:]), np.log(y[-5:]), 1)[0]
    assert slope == pytest.approx(-2.5, abs=0.05)


@pytest.mark.parametrize("sigma", [0.001, 0.01, 0.1])
def test_frequency_grid_convergence(sigma):
    a = ForwardOperator(SURFACE).response_profile(half_space(sigma))
    b = ForwardOperator(SURFACE, per_decade=24).response_profile(half_space(sigma))
    assert np.max(np.abs(b / a - 1)) < 1e-3


def test_gate_quadrature_convergence():
    batch = sample_prior_array(PriorSpec(kappa_max=3, lambda_max=3), 20, np.random.default_rng(0))
    sys_ = AemSystem()
    y1, _ = ForwardOperator(sys_).response_array(batch)
    y4, _ = ForwardOperator(sys_, n_gauss=32).response_array(batch)
    scale = np.abs(y4).max(axis=1, keepdims=True)
    assert np.max(np.abs(y1 - y4) / scale) < 1e-3
    hs = half_space(0.01)
    a = ForwardOperator(sys_).response_profile(hs)
    b = ForwardOperator(sys_, n_gauss=32).response_profile(hs)
    assert np.max(np.abs(a / b - 1)) < 1e-3


def test_frequency_grid_validation():
    with pytest.raises(ValueError):
        FrequencyGrid(np.array([1.0, 2.0, 2.0, 3.0]))
    g = FrequencyGrid.covering(1e-1, 1e3, 4)
    assert g.omegas[0] <= 1e-1 and g.omegas[-1] >= 1e3


# --- full forward -----------------------------------------------------------


def test_default_gates():
    g = default_gates()
    assert g.shape == (30, 2)
    assert g[0, 0] >= 5e-6 and g[-1, 1] <= 1.5e-2 * (1 + 1e-12)
    assert np.all(g[1:, 0] >= g[:-1, 1]) and np.all(g[:, 1] > g[:, 0])


def test_gate_validation():
    with pytest.raises(ValueError):
        AemSystem(gates=[[1e-4, 2e-4], [1.5e-4, 3e-4]])


def fig1_state(m):
    return StudySpec().state(0.001, 20.0, m)


def test_no_chargeability_all_positive():
    y = forward(fig1_state(0.0), AemSystem())
    assert np.all(y > 0)
    assert np.all(np.diff(y) < 0)


def test_high_chargeability_negative_late_gate():
    y = forward(fig1_state(0.8), AemSystem())
    assert np.any(y[15:] < 0)


def test_same_merged_profile_same_response():
    a = ParticleState(phi_b=-2, phi=[-1], z_sigma=[20.0], m=[0.5], z_m=[20.0], tau=1e-3, c=0.6)
    # a conductive interface with no contrast does not change the merged Earth
    b = ParticleState(phi_b=-2, phi=[-2, -1], z_sigma=[10.0, 20.0], m=[0.5], z_m=[20.0],
                      tau=1e-3, c=0.6)
    sys_ = AemSystem()
    ya, yb = forward(a, sys_), forward(b, sys_)
    np.testing.assert_allclose(ya, yb, rtol=1e-10, atol=1e-12 * np.abs(ya).max())


@settings(max_examples=15, deadline=None)
@given(st.floats(1e-4, 1.0), st.floats(0.05, 1.0))
def test_zero_chargeability_ignores_cole_cole(tau, c):
    base = ParticleState(phi_b=-2, phi=[-1], z_sigma=[30.0], tau=1e-3, c=1.0)
    other = base.replace(tau=tau, c=c)
    sys_ = AemSystem()
    np.testing.assert_allclose(forward(other, sys_), forward(base, sys_), rtol=1e-10)


def test_batched_matches_single():
    p = PriorSpec(kappa_max=3, lambda_max=3)
    batch = sample_prior_array(p, 8, np.random.default_rng(1))
    sys_ = AemSystem()
    op = ForwardOperator(sys_)
    values, ok = op.response_array(batch)
    assert ok.all()
    for i in range(8):
        single = forward(batch.state(i), sys_, op)
        np.testing.assert_allclose(values[i], single, rtol=1e-12, atol=1e-12 * np.abs(single).max())


def test_waveform_converges_to_step():
    # a very short linear turn-off ramp is close to the ideal step-off
    sys_ramp = AemSystem(waveform=[[-1e-3, 1.0], [-2e-7, 1.0], [0.0, 0.0]])
    y_step = ForwardOperator(AemSystem()).response_profile(half_space(0.01))
    y_ramp = ForwardOperator(sys_ramp).response_profile(half_space(0.01))
    assert np.max(np.abs(y_ramp / y_step - 1)[5:]) < 0.01


def test_forward_speed():
    batch = sample_prior_array(PriorSpec(), 200, np.random.default_rng(2))
    op = ForwardOperator(AemSystem())
    op.response_array(batch.take(np.arange(2)))
    t0 = time.perf_counter()
    op.response_array(batch)
    assert time.perf_counter() - t0 < 5.0


def test_filter_tables_exported():
    t = filter_tables()
    assert t["hankel_201_j1"].shape == (201,)
    assert t["sincos_201_base"].shape == (201,)
