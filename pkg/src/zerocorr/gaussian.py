"""Circular complex Gaussian machinery.

Mixed moments are reduced to permanents of covariance submatrices, and
the determinant-product expectation at the heart of the zero-correlation
formula is evaluated either exactly (permutation expansion plus
permanents) or by vectorized Monte Carlo with a counter-based RNG.
"""

from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from .errors import SizeLimitExceeded
from .linalg import cholesky, is_hermitian, permanent

WICK_SIZE_LIMIT = 10
EXACT_PAIRING_LIMIT = 8
MC_CHUNK = 1 << 16


@dataclass(frozen=True)
class GaussianSpec:
    """A centered circular complex Gaussian: E[z_j conj(z_k)] = covariance[j, k]."""

    covariance: np.ndarray

    def __post_init__(self):
        cov = np.asarray(self.covariance, dtype=complex)
        if cov.ndim != 2 or cov.shape[0] != cov.shape[1]:
            raise ValueError("covariance must be square")
        if not is_hermitian(cov):
            raise ValueError("covariance must be Hermitian")
        object.__setattr__(self, "covariance", cov)

    @property
    def dim(self):
        return self.covariance.shape[0]


def wick_mixed_moment(spec, holo, anti):
    """E[prod_i z_holo[i] * prod_j conj(z_anti[j])] via the Wick permanent.

    Moments with unequal numbers of holomorphic and antiholomorphic
    factors vanish by circular symmetry and are rejected here since the
    caller would be asking for something identically zero.
    """
    holo = list(holo)
    anti = list(anti)
    if len(holo) != len(anti):
        return complex(0.0)
    if len(holo) > WICK_SIZE_LIMIT:
        raise SizeLimitExceeded(f"moment order {len(holo)} exceeds {WICK_SIZE_LIMIT}")
    if len(holo) == 0:
        return complex(1.0)
    sub = spec.covariance[np.ix_(holo, anti)]
    return permanent(sub)


def _philox(seed, stream=0):
    return np.random.Generator(np.random.Philox(key=[seed, stream]))


def sample_complex_gaussian(spec, count, seed):
    """Draw ``count`` samples of the Gaussian as a (count, dim) complex array.

    Output is a deterministic function of (seed, count): samples are
    generated in fixed chunks from independent counter-based streams, so
    the result does not depend on how the work is scheduled.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    low = cholesky(spec.covariance)
    out = np.empty((count, spec.dim), dtype=complex)
    for chunk_index, start in enumerate(range(0, count, MC_CHUNK)):
        stop = min(start + MC_CHUNK, count)
        rng = _philox(seed, chunk_index)
        g = rng.normal(scale=np.sqrt(0.5), size=(stop - start, spec.dim, 2))
        out[start:stop] = (g[..., 0] + 1j * g[..., 1]) @ low.T
    return out


def _jet_index(p, j, q, k, m):
    return (p * k + j) * m + q


def _exact_expectation(lam, n, k, m):
    spec = GaussianSpec(lam)
    perms = list(permutations(range(k)))
    signs = {}
    for sigma in perms:
        sign = 1
        for i in range(k):
            for j in range(i + 1, k):
                if sigma[i] > sigma[j]:
                    sign = -sign
        signs[sigma] = sign
    q_choices = list(product(range(m), repeat=k))
    total = 0.0 + 0.0j
    # One factor per point: det(a a*) = sum over sigma, (q_1..q_k) of
    # sgn(sigma) prod_j a[j, q_j] conj(a[sigma(j), q_j]).
    for assignment in product(product(perms, q_choices), repeat=n):
        sign = 1
        holo = []
        anti = []
        for p, (sigma, qs) in enumerate(assignment):
            sign *= signs[sigma]
            for j in range(k):
                holo.append(_jet_index(p, j, qs[j], k, m))
                anti.append(_jet_index(p, sigma[j], qs[j], k, m))
        total += sign * wick_mixed_moment(spec, holo, anti)
    return total


def _det_product_samples(draws, n, k, m):
    a = draws.reshape(-1, n, k, m)
    grams = np.einsum("spjq,spkq->spjk", a, a.conj())
    dets = np.linalg.det(grams).real
    return dets.prod(axis=1)


def expectation_det_product(lam, n, k, m, method="exact", samples=10 ** 6, seed=0):
    """<prod_p det(sum_q a^p_jq conj(a^p_j'q))> for a ~ CN(0, lam).

    ``lam`` is the (n*k*m)-sized Hermitian PD covariance indexed by
    (p, j, q) flattened in that order.  The exact method expands each
    determinant over permutations and q-assignments and sums Wick
    permanents; it requires k*n <= 8.  Monte Carlo returns a sample mean.

    Returns (value, standard_error); the exact path reports 0.0 error.
    """
    lam = np.asarray(lam, dtype=complex)
    if lam.shape != (n * k * m, n * k * m):
        raise ValueError("covariance size must be n*k*m")
    if method == "exact":
        if k * n > EXACT_PAIRING_LIMIT or m > 4:
            raise SizeLimitExceeded(
                f"exact method requires k*n <= {EXACT_PAIRING_LIMIT} and m <= 4"
            )
        value = _exact_expectation(lam, n, k, m)
        return value.real, 0.0
    if method != "monte_carlo":
        raise ValueError(f"unknown method {method!r}")
    low = cholesky(lam)
    total = 0.0
    total_sq = 0.0
    done = 0
    chunk_index = 0
    while done < samples:
        count = min(MC_CHUNK, samples - done)
        rng = _philox(seed, chunk_index)
        g = rng.normal(scale=np.sqrt(0.5), size=(count, n * k * m, 2))
        draws = (g[..., 0] + 1j * g[..., 1]) @ low.T
        values = _det_product_samples(draws, n, k, m)
        total += values.sum()
        total_sq += (values ** 2).sum()
        done += count
        chunk_index += 1
    mean = total / samples
    variance = max(total_sq / samples - mean ** 2, 0.0)
    return mean, np.sqrt(variance / samples)
