#!/usr/bin/env python3
"""Empirical pair correlation of roots of random degree-N polynomials.

Samples polynomials with binomially weighted Gaussian coefficients,
extracts all roots, and histograms scaled root separations against the
closed-form pair correlation kappa_11.  A short run (a few hundred
samples) already shows the quadratic repulsion hole at small r and the
slight overshoot near r ~ 2.

Runtime is dominated by companion-matrix root finding; the sample count
below keeps it to about a minute.
"""

import numpy as np

from zerocorr import kappa, pair_correlation_estimate

N = 500
samples = 300
window = 4.4
bins = np.arange(0.2, 3.0001, 0.2)

hist = pair_correlation_estimate(N, samples, window, bins, seed=42)
print(f"N = {N}, {samples} samples, {hist.total_roots} roots total")
print(f"{'bin':>9} {'pairs':>6} {'estimate':>9} {'stderr':>8} {'kappa_11':>9}")
for i, center in enumerate(hist.bin_centers):
    print(f"[{hist.bin_edges[i]:3.1f},{hist.bin_edges[i+1]:3.1f}) "
          f"{hist.counts[i]:6d} {hist.g_estimate[i]:9.4f} "
          f"{hist.stderr[i]:8.4f} {kappa(center, 1, 1):9.4f}")

print()
print("calibration on uniform (Poisson) points of the same intensity:")
cal = pair_correlation_estimate(N, 2000, window, bins, seed=7, process="poisson")
dev = (cal.g_estimate - 1.0) / cal.stderr
print("per-bin z-scores:", " ".join(f"{z:5.2f}" for z in dev))
