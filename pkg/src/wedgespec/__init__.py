"""Numerical toolkit for compound matrices, exterior squares, and the
second-eigenvalue structure of totally nonnegative matrices and kernels.

The package builds Kronecker and exterior squares on the antisymmetric pair
basis, certifies (2-)total nonnegativity of matrices and discretized
integral kernels, and turns the classical positivity conclusions about the
second eigenvalue and eigenvector sign changes into verifiable reports.
"""

from .compound import (
    PairBasis,
    compound_matrix,
    exterior_apply,
    exterior_square,
    minor,
    tensor_square,
    wedge_vector,
)
from .errors import (
    ConvergenceError,
    DegeneratePerronError,
    GenerationError,
    ResourceLimitError,
    ValidationError,
    ZeroVectorError,
)
from .gk import (
    GKReport,
    VerificationReport,
    analyze,
    report_to_dict,
    verification_to_dict,
    verify_theorem1,
    verify_theorem2,
)
from .kernel import (
    KernelGrid,
    KernelSpec,
    builtin_kernel,
    discretize,
    exterior_grid,
    kernel_tn_check,
    load_kernel,
    second_associated,
    tabulated_kernel,
)
from .positivity import (
    SignChangeCount,
    TNCertificate,
    is_totally_nonnegative,
    is_two_totally_nonnegative,
    random_oscillatory,
    random_tn,
    sign_changes,
)
from .spectra import (
    MatchReport,
    as_dense_matrix,
    eigenpairs,
    eigenvalues,
    multiset_match,
    perron_pair,
    sort_spectrum,
    spectral_radius,
)

__version__ = "0.1.0"

__all__ = [
    "PairBasis",
    "compound_matrix",
    "exterior_apply",
    "exterior_square",
    "minor",
    "tensor_square",
    "wedge_vector",
    "ConvergenceError",
    "DegeneratePerronError",
    "GenerationError",
    "ResourceLimitError",
    "ValidationError",
    "ZeroVectorError",
    "GKReport",
    "VerificationReport",
    "analyze",
    "report_to_dict",
    "verification_to_dict",
    "verify_theorem1",
    "verify_theorem2",
    "KernelGrid",
    "KernelSpec",
    "builtin_kernel",
    "discretize",
    "exterior_grid",
    "kernel_tn_check",
    "load_kernel",
    "second_associated",
    "tabulated_kernel",
    "SignChangeCount",
    "TNCertificate",
    "is_totally_nonnegative",
    "is_two_totally_nonnegative",
    "random_oscillatory",
    "random_tn",
    "sign_changes",
    "MatchReport",
    "as_dense_matrix",
    "eigenpairs",
    "eigenvalues",
    "multiset_match",
    "perron_pair",
    "sort_spectrum",
    "spectral_radius",
]
