"""Model reproducing kernels and their first and mixed-second derivatives.

Three geometries are supported:

* ``FubiniStudy(N, m)`` -- degree-N polynomial ensemble on projective
  m-space, kernel (1 + z . conj(w))^N in affine coordinates;
* ``HeisenbergLevel(N, m)`` -- level-N Bargmann-Fock kernel on C^m with
  its Gaussian weight, phases fixed to zero;
* ``HeisenbergLimit(m)`` -- the flat scaling-limit kernel exp(z . conj(w)).

A jet bundles the kernel value S(z, w), the vector S_q'(z, w) of pairings
of the value at z with the conjugated first derivative at w, and the
matrix S_qq'(z, w) of mixed derivative pairings.  Derivatives for the
level-N Heisenberg kernel follow the right-invariant convention, so the
N=1 jets reduce to the flat-limit ones up to the Gaussian weight.
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln


@dataclass(frozen=True)
class FubiniStudy:
    N: int
    m: int

    def __post_init__(self):
        _check_model(self.m, self.N)


@dataclass(frozen=True)
class HeisenbergLevel:
    N: int
    m: int

    def __post_init__(self):
        _check_model(self.m, self.N)


@dataclass(frozen=True)
class HeisenbergLimit:
    m: int

    def __post_init__(self):
        _check_model(self.m, 1)


def _check_model(m, N):
    if not 1 <= m <= 4:
        raise ValueError("supported dimensions are 1 <= m <= 4")
    if N < 1:
        raise ValueError("level N must be a positive integer")


@dataclass(frozen=True)
class KernelJet:
    """Kernel value, first-derivative vector, mixed second-derivative matrix."""

    s: complex
    grad: np.ndarray   # shape (m,)
    hess: np.ndarray   # shape (m, m)


def _as_point(z, m):
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    if z.shape != (m,):
        raise ValueError(f"expected a point in C^{m}, got shape {z.shape}")
    return z


def kernel_jet(model, z, w):
    """Evaluate the kernel jet (S, S_q', S_qq') for the given model at (z, w)."""
    m = model.m
    z = _as_point(z, m)
    w = _as_point(w, m)
    wb = w.conj()
    pairing = z @ wb
    eye = np.eye(m)
    if isinstance(model, HeisenbergLimit):
        s = np.exp(pairing)
        grad = z * s
        hess = (eye + np.outer(wb, z)) * s
    elif isinstance(model, FubiniStudy):
        N = model.N
        base = 1.0 + pairing
        s = base ** N
        grad = N * z * base ** (N - 1)
        hess = N * (N - 1) * np.outer(wb, z) * base ** (N - 2) + N * eye * base ** (N - 1)
    elif isinstance(model, HeisenbergLevel):
        N = model.N
        weight = (N ** m / np.pi ** m) * np.exp(
            N * pairing - 0.5 * N * (z @ z.conj()).real - 0.5 * N * (w @ wb).real
        )
        s = weight
        grad = N * z * weight
        hess = (N * eye + N * N * np.outer(wb, z)) * weight
    else:
        raise TypeError(f"unknown kernel model {model!r}")
    return KernelJet(s=complex(s), grad=grad, hess=hess)


def fs_scaled_szego(N, m, u, v):
    """Level-N projective kernel at points u/sqrt(N), v/sqrt(N), rescaled by N^-m.

    Evaluated on the circle-bundle lift with phases zero; the factorial
    ratio (N+m)!/N! is accumulated in the log domain so levels up to ~1e4
    do not overflow.  Converges to ``heisenberg_limit_kernel`` at rate
    N^(-1/2) on compact windows.
    """
    u = _as_point(u, m)
    v = _as_point(v, m)
    log_ratio = gammaln(N + m + 1) - gammaln(N + 1) - m * np.log(N)
    prefactor = np.exp(log_ratio) / np.pi ** m
    pairing = u @ v.conj()
    log_main = (
        N * np.log(1.0 + pairing / N)
        - 0.5 * N * np.log1p((u @ u.conj()).real / N)
        - 0.5 * N * np.log1p((v @ v.conj()).real / N)
    )
    return complex(prefactor * np.exp(log_main))


def heisenberg_limit_kernel(u, theta, v, phi):
    """Flat-model kernel pi^-m e^{i(theta-phi)} e^{i Im(u.conj(v))} e^{-|u-v|^2/2}."""
    u = np.atleast_1d(np.asarray(u, dtype=complex))
    v = np.atleast_1d(np.asarray(v, dtype=complex))
    if u.shape != v.shape:
        raise ValueError("u and v must have the same dimension")
    m = u.shape[0]
    pairing = u @ v.conj()
    diff = u - v
    return complex(
        np.pi ** (-m)
        * np.exp(1j * (theta - phi) + 1j * pairing.imag - 0.5 * (diff @ diff.conj()).real)
    )


def fs_metric(z):
    """Fubini-Study metric tensor g_qq' at the affine point z."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    zsq = (z @ z.conj()).real
    return ((1.0 + zsq) * np.eye(len(z)) - np.outer(z.conj(), z)) / (1.0 + zsq) ** 2
