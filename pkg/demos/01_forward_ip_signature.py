"""
Forward modelling and the IP signature
======================================

A chargeable layer can turn late off-time dB/dt negative, something no
purely conductive 1D Earth can do. This script checks the forward model
against the closed-form half-space transient, then sweeps the chargeability
of a buried layer and counts negative gates.

Run: ``python demos/01_forward_ip_signature.py``
"""

import numpy as np
from scipy.special import erf

from ipdetect.forward import MU0, AemSystem, ForwardOperator, forward
from ipdetect.io import StudySpec
from ipdetect.model import EarthProfile

# %%
# Half-space check
# ----------------
# With the loop on the ground the centre-of-loop step-off response has a
# closed form. Gate averages of it should match the digital-filter result
# to within a couple of percent.

surface = AemSystem(tx_height=0.0)
op = ForwardOperator(surface)
a, current = surface.tx_radius, surface.current


def exact(t, sigma):
    x = np.sqrt(MU0 * sigma / (4 * t)) * a
    return current / (sigma * a**3) * (3 * erf(x) - 2 / np.sqrt(np.pi) * x * (3 + 2 * x**2) * np.exp(-x**2)) * 1e12


nodes, weights = np.polynomial.legendre.leggauss(32)
g0, g1 = surface.gates[:, :1], surface.gates[:, 1:]
tq = 0.5 * (g1 - g0) * nodes + 0.5 * (g1 + g0)

for sigma in (0.001, 0.01, 0.1):
    y = op.response_profile(EarthProfile(np.zeros(0), np.array([sigma]), np.zeros(1), 1e-3, 1.0))
    ref = (exact(tq, sigma) * weights / 2).sum(axis=1)
    slope = np.polyfit(np.log(surface.gate_centres[-5:]), np.log(y[-5:]), 1)[0]
    print(f"sigma {sigma:6.3f} S/m   max gate error {100 * np.max(np.abs(y / ref - 1)):.2f}%   "
          f"late slope {slope:+.3f}")

# %%
# Chargeability sweep
# -------------------
# Three layers (0.01 / 0.1 / 0.001 S/m) with the 20 m second layer at 20 m
# depth; only that layer is chargeable.

system = AemSystem()
study = StudySpec()
print("\n   m   negative gates   first negative gate (ms)")
for m in (0.0, 0.2, 0.4, 0.6, 0.8, 1.0):
    y = forward(study.state(0.001, 20.0, m), system)
    neg = np.flatnonzero(y < 0)
    first = f"{1e3 * system.gate_centres[neg[0]]:.3f}" if neg.size else "-"
    print(f"{m:4.1f}   {neg.size:14d}   {first}")
