"""Empirical zero statistics of degree-N random polynomials (m = 1, k = 1).

Samples polynomials with binomially weighted independent Gaussian
coefficients, extracts their roots, and estimates the scaled pair
correlation of the root process for comparison against the closed form.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

from .errors import InsufficientDegree, RootFindingFailed, WindowTooLarge

MAX_WINDOW = 5.0
LIMIT_INTENSITY = 1.0 / np.pi  # zeros per unit area in scaled coordinates


def worker_count():
    """Worker cap: ZEROCORR_THREADS if set, otherwise all cores."""
    cap = os.environ.get("ZEROCORR_THREADS")
    cores = os.cpu_count() or 1
    if cap is None:
        return cores
    return max(1, min(int(cap), cores))


def _rng(seed, stream):
    return np.random.Generator(np.random.Philox(key=[seed, stream]))


@dataclass(frozen=True)
class PolynomialSample:
    """Affine-chart coefficients of one random polynomial, lowest power first."""

    degree: int
    coeffs: np.ndarray


def sample_su2_polynomial(N, seed, stream=0):
    """Draw p(z) = sum_j sqrt(binom(N, j)) c_j z^j with standard complex c_j.

    Binomial weights are assembled in the log domain so degrees up to 2000
    stay finite.  Deterministic for a fixed (seed, stream).
    """
    if not 2 <= N <= 2000:
        raise ValueError("degree must satisfy 2 <= N <= 2000")
    j = np.arange(N + 1)
    half_log_binom = 0.5 * (gammaln(N + 1) - gammaln(j + 1) - gammaln(N - j + 1))
    rng = _rng(seed, stream)
    g = rng.normal(scale=np.sqrt(0.5), size=(N + 1, 2))
    c = g[:, 0] + 1j * g[:, 1]
    return PolynomialSample(degree=N, coeffs=np.exp(half_log_binom) * c)


def _polish(poly, roots, steps):
    """Newton-polish roots of a highest-power-first polynomial, keeping the best."""
    deriv = np.polyder(poly)
    best = roots
    best_res = np.abs(np.polyval(poly, best))
    for _ in range(steps):
        slope = np.polyval(deriv, roots)
        slope = np.where(slope == 0, 1.0, slope)
        roots = roots - np.polyval(poly, roots) / slope
        res = np.abs(np.polyval(poly, roots))
        improved = res < best_res
        best = np.where(improved, roots, best)
        best_res = np.where(improved, res, best_res)
    bound = np.polyval(np.abs(poly), np.abs(best))
    return best, best_res, bound


def polynomial_roots(sample, polish_steps=3):
    """All affine roots: companion-matrix eigenvalues plus Newton polishing.

    Vanishing leading coefficients are dropped (those roots sit at
    infinity, outside the affine chart).  Roots of modulus above 1 are
    polished through the reversed polynomial so high-degree terms never
    overflow.  Each polished root must satisfy |p(z)| <= 1e-10 times the
    termwise magnitude bound.
    """
    coeffs = sample.coeffs
    effective = len(coeffs) - 1
    while effective > 0 and coeffs[effective] == 0:
        effective -= 1
    if effective == 0:
        return np.zeros(0, dtype=complex)
    poly = coeffs[: effective + 1][::-1]  # highest power first, for numpy
    raw = np.roots(poly)
    inner = np.abs(raw) <= 1.0
    out = np.empty_like(raw)
    worst = 0.0
    if inner.any():
        polished, res, bound = _polish(poly, raw[inner], polish_steps)
        out[inner] = polished
        worst = max(worst, float((res / bound).max()))
    if (~inner).any():
        # z is a root of p iff 1/z is a root of the reversed polynomial
        polished, res, bound = _polish(poly[::-1], 1.0 / raw[~inner], polish_steps)
        out[~inner] = 1.0 / polished
        worst = max(worst, float((res / bound).max()))
    if worst > 1e-10:
        raise RootFindingFailed(f"worst polished residual ratio {worst:.3e}")
    return out


@dataclass
class PairHistogram:
    """Accumulated pair counts of scaled roots, with Poisson normalization."""

    bin_edges: np.ndarray
    counts: np.ndarray
    normalizer: np.ndarray
    samples: int
    count_sumsq: np.ndarray = field(default=None)
    total_roots: int = 0

    @property
    def bin_centers(self):
        return 0.5 * (self.bin_edges[:-1] + self.bin_edges[1:])

    @property
    def g_estimate(self):
        return self.counts / self.normalizer

    @property
    def stderr(self):
        per_sample_norm = self.normalizer / self.samples
        mean = self.counts / self.samples
        var = np.maximum(self.count_sumsq / self.samples - mean ** 2, 0.0)
        return np.sqrt(var / self.samples) / per_sample_norm


def _cap_area(radius, N):
    """Scaled area of a geodesic cap of scaled radius on the projective line.

    The round metric of the model has caps of area pi sin(d)^2 at geodesic
    radius d; scaled coordinates multiply areas by N.  For small radius
    this reduces to the flat disk area pi r^2.
    """
    return np.pi * N * np.sin(radius / np.sqrt(N)) ** 2


def _sample_chart_points(N, seed, stream, window, process):
    """One sample's affine-chart points inside the geodesic window.

    Returns (points, total point count of the sample).  For the root
    process the total counts chart-lost roots through the degree
    deficiency, so it always equals N.
    """
    chart_window = np.tan(window / np.sqrt(N))
    if process == "poisson":
        # Calibration input: uniform points at the limit intensity with
        # respect to the model volume of the window cap.
        rng = _rng(seed, stream)
        expected = LIMIT_INTENSITY * _cap_area(window, N)
        count = rng.poisson(expected)
        # Radial inverse CDF of the uniform law on the cap, chart radius t:
        # P(|z| <= t) is proportional to t^2 / (1 + t^2).
        cap = chart_window ** 2 / (1.0 + chart_window ** 2)
        s = cap * rng.uniform(size=count)
        radii = np.sqrt(s / (1.0 - s))
        angles = rng.uniform(0.0, 2.0 * np.pi, size=count)
        return radii * np.exp(1j * angles), count
    sample = sample_su2_polynomial(N, seed, stream)
    roots = polynomial_roots(sample)
    total = len(roots) + (N - len(roots))
    return roots[np.abs(roots) <= chart_window], total


def _scaled_geodesic(N, first, second):
    """Scaled geodesic distances between chart points, as a matrix.

    The chordal distance |z - z'| / sqrt((1+|z|^2)(1+|z'|^2)) is the sine
    of the geodesic distance on the projective line.
    """
    num = np.abs(first[:, None] - second[None, :])
    den = np.sqrt(
        (1.0 + np.abs(first) ** 2)[:, None] * (1.0 + np.abs(second) ** 2)[None, :]
    )
    return np.sqrt(N) * np.arcsin(np.clip(num / den, 0.0, 1.0))


def pair_correlation_estimate(N, samples, window, bins, seed, process="roots"):
    """Histogram estimate of the scaled pair correlation of the root process.

    Roots are collected in the geodesic cap of scaled radius ``window``
    around the chart origin; ordered pairs whose first member lies in the
    core cap of radius window - max(bins) are binned by scaled geodesic
    separation.  The normalizer uses the exact cap and annulus areas of
    the round geometry, so count/normalizer estimates the pair correlation
    at the bin with only the O(1/N) scaling bias plus sampling noise.

    ``process="poisson"`` replaces the roots by uniform points of the same
    intensity, for estimator calibration.
    """
    bins = np.asarray(bins, dtype=float)
    if bins.ndim != 1 or len(bins) < 2 or np.any(np.diff(bins) <= 0):
        raise ValueError("bins must be increasing edges")
    r_max = bins[-1]
    if window > MAX_WINDOW or r_max > window:
        raise WindowTooLarge(
            f"window {window} with bins up to {r_max} exceeds supported range"
        )
    core_radius = window - r_max
    if core_radius <= 0:
        raise WindowTooLarge("core disk is empty: window must exceed the largest bin edge")
    if process == "roots" and N < 25.0 * window ** 2:
        raise InsufficientDegree(f"need N >= 25 * window^2 = {25 * window ** 2:.0f}")

    nbins = len(bins) - 1

    chart_core = np.tan(core_radius / np.sqrt(N))

    def one_sample(index):
        points, total = _sample_chart_points(N, seed, index, window, process)
        local = np.zeros(nbins, dtype=np.int64)
        if len(points) >= 2:
            core_index = np.where(np.abs(points) <= chart_core)[0]
            if len(core_index):
                dists = _scaled_geodesic(N, points[core_index], points)
                dists[np.arange(len(core_index)), core_index] = -1.0  # drop self-pairs
                flat = dists[(dists >= bins[0]) & (dists < r_max)]
                local += np.histogram(flat, bins=bins)[0]
        return local, total

    counts = np.zeros(nbins, dtype=np.int64)
    sumsq = np.zeros(nbins, dtype=float)
    total_roots = 0
    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        for local, total in pool.map(one_sample, range(samples)):
            counts += local
            sumsq += local.astype(float) ** 2
            total_roots += total

    area_core = _cap_area(core_radius, N)
    area_annuli = _cap_area(bins[1:], N) - _cap_area(bins[:-1], N)
    normalizer = samples * LIMIT_INTENSITY ** 2 * area_core * area_annuli
    return PairHistogram(
        bin_edges=bins,
        counts=counts,
        normalizer=normalizer,
        samples=samples,
        count_sumsq=sumsq,
        total_roots=total_roots,
    )
