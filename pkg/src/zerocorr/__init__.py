"""Correlation functions of zeros of Gaussian random polynomials.

Four mutually validating routes to the n-point zero correlations of the
projective polynomial ensemble and its flat scaling limit: exact Wick
evaluation of the jet-covariance formula, Gaussian Monte Carlo, closed
forms, and empirical root statistics.
"""

from .closed_form import (
    connected_correlations,
    correlations_from_connected,
    decay_bound,
    density,
    kappa,
    kappa_asymptote,
    kappa_series,
)
from .empirical import (
    PairHistogram,
    PolynomialSample,
    pair_correlation_estimate,
    polynomial_roots,
    sample_su2_polynomial,
)
from .errors import (
    DomainError,
    InsufficientDegree,
    MissingSubset,
    NearSingular,
    NotPositiveDefinite,
    RootFindingFailed,
    SizeLimitExceeded,
    WindowTooLarge,
    ZerocorrError,
)
from .gaussian import (
    GaussianSpec,
    expectation_det_product,
    sample_complex_gaussian,
    wick_mixed_moment,
)
from .kac_rice import (
    CorrelationQuery,
    CovarianceBlocks,
    assemble_blocks,
    correlation,
    jet_covariance,
    normalized_correlation,
)
from .kernels import (
    FubiniStudy,
    HeisenbergLevel,
    HeisenbergLimit,
    KernelJet,
    fs_metric,
    fs_scaled_szego,
    heisenberg_limit_kernel,
    kernel_jet,
)
from .linalg import (
    bell_number,
    cholesky,
    determinant,
    hermitian_solve,
    is_hermitian,
    permanent,
    set_partitions,
)

__version__ = "0.1.0"
