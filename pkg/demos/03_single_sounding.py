"""
One sounding, end to end
========================

Simulate a noisy sounding over a two-layer conductive Earth, invert it with
a small particle cloud, and look at what comes out: model probabilities,
the chargeability Bayes factor, depth of investigation and a posterior
predictive check.

Run: ``python demos/03_single_sounding.py`` (a few minutes on one core).
"""

import numpy as np

from ipdetect.cli import invert_sounding
from ipdetect.io import RunConfig
from ipdetect.likelihood import simulate_sounding
from ipdetect.model import ParticleState, PriorSpec
from ipdetect.rjsmc import RjsmcConfig

cfg = RunConfig(prior=PriorSpec(kappa_max=2, lambda_max=2),
                sampler=RjsmcConfig(n_particles=200, max_mutation_steps=30, seed=1),
                ppd_draws=500)

# 0.01 S/m over 0.1 S/m below 40 m; no chargeability
truth = ParticleState(phi_b=-2.0, phi=[-1.0], z_sigma=[40.0], tau=0.5, c=0.5)
sounding = simulate_sounding(truth, cfg.system, cfg.noise, np.random.default_rng(3))


def progress(rec, cloud):
    print(f"step {rec['step']:3d}  gamma {rec['gamma']:.5f}  sweeps {rec['mutation_steps']:3d}")


inv = invert_sounding(sounding, cfg, on_step=progress)

# %%
print("\nmodel      probability")
for m, p in inv.marginals.as_dict().items():
    if p > 0:
        print(f"({m.kappa},{m.lam})      {p:.3f}")
print(f"log BFIPD {inv.log_bfipd:+.3f}  (negative: no chargeability needed)")
print(f"DOI conductivity {inv.grid.doi_cond:.0f} m, chargeability {inv.grid.doi_charge:.0f} m")

# %%
# Mean log10 conductivity at a few depths, against the truth
for z in (10, 30, 50, 100):
    print(f"z {z:4d} m   mean log10 sigma {inv.grid.mean_cond[z]:+.2f}   truth {-2.0 if z < 40 else -1.0:+.2f}")

r = inv.ppd.residual
print(f"\nPPD residuals within [-2, 2]: {np.mean(np.abs(r) <= 2):.0%} of {r.size} gates")
