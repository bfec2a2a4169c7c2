#!/usr/bin/env python3
"""Pair correlation of zeros in the scaling limit, for several geometries.

Tabulates kappa_km(r) for codimension k = 1 (hypersurface zeros) and
k = 2 (simultaneous zeros of two sections) across dimensions m, together
with the short-distance series and the large-distance asymptote.  The
curves start at 0 (or diverge, for k = 2 and m > 2), dip or overshoot
around r ~ 1, and settle to 1: zeros repel at short range and decorrelate
quickly at long range.
"""

import numpy as np

from zerocorr import kappa, kappa_asymptote, kappa_series

print("codimension k = 1")
print(f"{'r':>5} " + " ".join(f"kappa_1{m}" for m in (1, 2, 3)))
for r in np.arange(0.1, 3.01, 0.1):
    row = " ".join(f"{kappa(r, m, 1):8.5f}" for m in (1, 2, 3))
    print(f"{r:5.2f} {row}")

print()
print("codimension k = 2 (point-like simultaneous zeros)")
print(f"{'r':>5} " + " ".join(f"kappa_2{m}" for m in (2, 3, 4)))
for r in np.arange(0.1, 3.01, 0.1):
    row = " ".join(f"{kappa(r, m, 2):8.4f}" for m in (2, 3, 4))
    print(f"{r:5.2f} {row}")

print()
print("branch structure for kappa_11: series below r ~ 0.32, closed form above,")
print("asymptote 1 + (r^4 - 4r^2 + 2) e^{-r^2} at large r")
print(f"{'r':>5} {'kappa':>12} {'series':>12} {'asymptote':>12}")
for r in (0.1, 0.3, 0.5, 1.0, 2.0, 3.0, 4.0):
    print(f"{r:5.2f} {kappa(r, 1, 1):12.8f} {kappa_series(r, 1, 1):12.8f} "
          f"{kappa_asymptote(r, 1, 1):12.8f}")
