"""Verdict engine: assembles the spectra of a matrix, its Kronecker square,
and its exterior square, and classifies the second-eigenvalue structure.

The classification follows the classical positivity trichotomy: when the
matrix and its exterior square are both nonnegative and exactly one
eigenvalue sits on the spectral circle, the second eigenvalue is positive
and equals rho(wedge) / lambda1. With several eigenvalues on the circle the
report distinguishes a complex conjugate pair from a multiple leading
eigenvalue. Hypothesis failure never aborts the analysis; the spectral
facts are unconditional and the certificates record what was violated.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import compound
from .errors import ConvergenceError, DegeneratePerronError, ValidationError
from .positivity import SignChangeCount, is_two_totally_nonnegative, sign_changes
from .spectra import (
    DEFAULT_TOL,
    _check_tol,
    _power_iteration,
    as_dense_matrix,
    eigenpairs,
    eigenvalues,
    multiset_match,
    perron_pair,
    spectral_radius,
)

CLASS_SECOND = "second_eigenvalue_found"
CLASS_COMPLEX_PAIR = "complex_pair_on_circle"
CLASS_MULTIPLE = "multiple_leading"
CLASS_DEGENERATE = "degenerate_rho_zero"
CLASS_VIOLATED = "hypotheses_violated"

CLASSIFICATIONS = (
    CLASS_SECOND,
    CLASS_COMPLEX_PAIR,
    CLASS_MULTIPLE,
    CLASS_DEGENERATE,
    CLASS_VIOLATED,
)

DEFAULT_CIRCLE_TOL = 1e-7
DEFAULT_RESIDUAL_TOL = 1e-8

# Above this pair-basis dimension the exterior square is not materialized;
# its radius comes from power iteration on the implicit wedge action.
WEDGE_DENSE_LIMIT = 1000

_WEDGE_POWER_ITERATIONS = 2000


@dataclass(frozen=True)
class GKReport:
    """Structured second-eigenvalue verdict for one matrix.

    ``lambda2`` is present exactly when the classification is
    second_eigenvalue_found, in which case it is rho_wedge / lambda1 and the
    cross-route discrepancy against the sorted spectrum is
    ``residual_theorem3``. ``circle_count`` is the number of eigenvalues on
    the spectral circle at relative tolerance ``circle_tol``; it is reported
    separately so that a conjugate pair and a multiple leading eigenvalue
    both stay visible.
    """

    lambda1: float
    lambda2: Optional[float]
    complex_pair: Optional[tuple]
    classification: str
    rho_wedge: float
    residual_theorem3: float
    sign_changes_e1: Optional[SignChangeCount]
    sign_changes_e2: Optional[SignChangeCount]
    hypothesis_certificates: tuple
    spectrum: tuple
    circle_count: int
    circle_tol: float
    tolerance: float


@dataclass(frozen=True)
class VerificationReport:
    """Multiset comparison of a square's spectrum against the eigenvalue
    products computed from the base matrix."""

    theorem: int
    matched: bool
    max_residual: float
    leftovers: tuple  # (square-spectrum side, product side)


def _wedge_radius(m, tol):
    """Spectral radius of the exterior square.

    Materializes the pair-basis matrix and solves densely when it fits under
    the size cap; otherwise runs power iteration on the implicit wedge
    action m X m^T, which costs O(n^3) per step and never builds the square.
    """
    n = m.shape[0]
    pair_dim = n * (n - 1) // 2
    if pair_dim <= WEDGE_DENSE_LIMIT:
        return spectral_radius(eigenvalues(compound.exterior_square(m), tol))
    scale = max(float(np.linalg.norm(m)) ** 2, np.finfo(float).tiny)
    try:
        lam, _, ok = _power_iteration(
            lambda w: compound.exterior_apply(m, w),
            np.ones(pair_dim),
            tol,
            _WEDGE_POWER_ITERATIONS,
            scale,
        )
    except DegeneratePerronError:
        return 0.0
    if not ok:
        raise ConvergenceError(
            "power iteration on the wedge action stagnated; the exterior "
            f"square of this {n}x{n} matrix has no dominant-gap radius the "
            "implicit route can certify"
        )
    return abs(lam)


def _real_eigenvector(col, tol):
    """Rotate a complex eigenvector onto the real axis; None if impossible."""
    k = int(np.argmax(np.abs(col)))
    phase = col[k] / abs(col[k])
    w = col / phase
    if float(np.abs(w.imag).max()) > np.sqrt(tol):
        return None
    return w.real / np.linalg.norm(w.real)


def analyze(m, tol=DEFAULT_TOL, circle_tol=DEFAULT_CIRCLE_TOL,
            residual_tol=DEFAULT_RESIDUAL_TOL, seed=0):
    """Full second-eigenvalue analysis of a real square matrix.

    Parameters
    ----------
    m : array_like
        Square matrix, n >= 2.
    tol : float
        General relative tolerance (solver residuals, nonnegativity slack,
        zero thresholds).
    circle_tol : float
        An eigenvalue counts as on the spectral circle iff its modulus is
        >= lambda1 * (1 - circle_tol). Exact circle membership has no
        floating-point meaning, so the threshold is part of the report.
    residual_tol : float
        Cap on the discrepancy between the two routes to the second
        eigenvalue before the result is refused as numerically inconsistent.
    seed : int
        Seed for the sampled hypothesis check on matrices too large for
        exhaustive 2-minor enumeration.

    Returns
    -------
    GKReport
    """
    m = as_dense_matrix(m)
    _check_tol(tol)
    if m.shape[0] < 2:
        raise ValidationError("analysis needs dimension n >= 2")
    n = m.shape[0]
    scale = max(1.0, float(np.abs(m).max()))

    cert1, cert2 = is_two_totally_nonnegative(m, tol, seed=seed)
    hypotheses_ok = cert1.verdict and cert2.verdict

    spectrum, vectors = eigenpairs(m, tol)
    moduli = np.abs(spectrum)
    rho_spec = float(moduli[0])

    # lambda1 is reported from the dense solve; for nonnegative input the
    # Perron iteration is run as an independent route and must agree.
    lambda1 = rho_spec
    if cert1.verdict:
        lam_p = None
        try:
            lam_p, _ = perron_pair(m, tol)
        except DegeneratePerronError:
            lam_p = 0.0
        except ConvergenceError:
            lam_p = None  # eigenbasis hid the nonnegative vector; radius still valid
        if lam_p is not None and abs(lam_p - rho_spec) > 1e-6 * max(1.0, rho_spec):
            raise ConvergenceError(
                f"Perron iteration ({lam_p:.12g}) and the dense solve "
                f"({rho_spec:.12g}) disagree on the spectral radius"
            )

    rho_wedge = _wedge_radius(m, tol)
    residual = abs(rho_wedge - lambda1 * float(moduli[1])) / max(1.0, rho_wedge)

    def build(classification, lambda2=None, complex_pair=None, s1=None, s2=None,
              circle_count=0):
        return GKReport(
            lambda1=float(lambda1),
            lambda2=lambda2,
            complex_pair=complex_pair,
            classification=classification,
            rho_wedge=float(rho_wedge),
            residual_theorem3=float(residual),
            sign_changes_e1=s1,
            sign_changes_e2=s2,
            hypothesis_certificates=(cert1, cert2),
            spectrum=tuple(complex(z) for z in spectrum),
            circle_count=circle_count,
            circle_tol=circle_tol,
            tolerance=tol,
        )

    if lambda1 <= tol * scale:
        return build(CLASS_DEGENERATE)

    on_circle = moduli >= lambda1 * (1.0 - circle_tol)
    circle_count = int(np.count_nonzero(on_circle))

    signs1 = signs2 = None
    if circle_count == 1:
        v1 = _real_eigenvector(vectors[:, 0], tol)
        if v1 is not None:
            signs1 = sign_changes(v1, tol)
        lam2_real = abs(spectrum[1].imag) <= circle_tol * lambda1
        lam2_simple = n == 2 or (moduli[1] - moduli[2]) > circle_tol * lambda1
        if lam2_real and lam2_simple:
            v2 = _real_eigenvector(vectors[:, 1], tol)
            if v2 is not None:
                signs2 = sign_changes(v2, tol)

    if circle_count > 1:
        nonreal = [
            complex(z) for z, hit in zip(spectrum, on_circle)
            if hit and abs(z.imag) > circle_tol * lambda1
        ]
        if nonreal:
            z = next(w for w in nonreal if w.imag > 0)
            return build(CLASS_COMPLEX_PAIR, complex_pair=(z, z.conjugate()),
                         circle_count=circle_count)
        return build(CLASS_MULTIPLE, circle_count=circle_count)

    wedge_degenerate = rho_wedge <= tol * max(1.0, lambda1) ** 2
    if not hypotheses_ok or wedge_degenerate:
        return build(CLASS_VIOLATED, s1=signs1, s2=signs2, circle_count=circle_count)

    lambda2 = rho_wedge / lambda1
    if residual > residual_tol:
        raise ConvergenceError(
            f"the two routes to the second eigenvalue disagree: "
            f"rho_wedge/lambda1 = {lambda2:.12g} vs sorted modulus "
            f"{float(moduli[1]):.12g} (residual {residual:.3e} > {residual_tol:g})"
        )
    if not 0.0 < lambda2 < lambda1:
        raise ConvergenceError(
            f"computed second eigenvalue {lambda2:.12g} is outside (0, lambda1 = "
            f"{lambda1:.12g}) despite a single eigenvalue on the circle"
        )
    return build(CLASS_SECOND, lambda2=float(lambda2), s1=signs1, s2=signs2,
                 circle_count=circle_count)


def _filtered_match(square_spec, products, rho, tol, theorem):
    cutoff = tol * rho ** 2
    lhs = square_spec[np.abs(square_spec) > cutoff]
    rhs = products[np.abs(products) > cutoff]
    report = multiset_match(lhs, rhs, tol)
    return VerificationReport(
        theorem=theorem,
        matched=report.matched,
        max_residual=report.max_residual,
        leftovers=(report.leftover_a, report.leftover_b),
    )


def verify_theorem1(m, tol=DEFAULT_RESIDUAL_TOL, force=False):
    """Check that the Kronecker square's nonzero spectrum is exactly the
    ordered products of eigenvalue pairs of the base matrix.

    Zeros are filtered at tol * rho^2 on both sides before multiset
    matching, since only the nonzero part of the identity is meaningful.
    """
    m = as_dense_matrix(m)
    _check_tol(tol)
    base = eigenvalues(m)
    square_spec = eigenvalues(compound.tensor_square(m, force=force))
    products = np.multiply.outer(base, base).ravel()
    return _filtered_match(square_spec, products, spectral_radius(base), tol, 1)


def verify_theorem2(m, tol=DEFAULT_RESIDUAL_TOL, force=False):
    """Check that the exterior square's nonzero spectrum is exactly the
    products over unordered eigenvalue pairs (i < j) of the base matrix."""
    m = as_dense_matrix(m)
    _check_tol(tol)
    if m.shape[0] < 2:
        raise ValidationError("the exterior-square identity needs n >= 2")
    base = eigenvalues(m)
    square_spec = eigenvalues(compound.exterior_square(m, force=force))
    iu = np.triu_indices(base.size, 1)
    products = (np.multiply.outer(base, base))[iu]
    return _filtered_match(square_spec, products, spectral_radius(base), tol, 2)


def _complex_to_dict(z):
    return {"re": float(z.real), "im": float(z.imag)}


def _certificate_to_dict(cert):
    witness = None
    if cert.witness is not None:
        witness = {
            "rows": [int(i) for i in cert.witness.rows],
            "cols": [int(i) for i in cert.witness.cols],
            "value": float(cert.witness.value),
        }
    return {
        "order_checked": cert.order_checked,
        "verdict": cert.verdict,
        "witness": witness,
        "minors_evaluated": cert.minors_evaluated,
        "mode": cert.mode,
    }


def _signs_to_dict(s):
    if s is None:
        return None
    return {
        "strict_count": s.strict_count,
        "vector_length": s.vector_length,
        "zero_count": s.zero_count,
    }


def report_to_dict(report):
    """GKReport as a JSON-ready dict with a stable field layout."""
    pair = None
    if report.complex_pair is not None:
        pair = [_complex_to_dict(z) for z in report.complex_pair]
    return {
        "lambda1": report.lambda1,
        "lambda2": report.lambda2,
        "complex_pair": pair,
        "classification": report.classification,
        "rho_wedge": report.rho_wedge,
        "residual_theorem3": report.residual_theorem3,
        "sign_changes_e1": _signs_to_dict(report.sign_changes_e1),
        "sign_changes_e2": _signs_to_dict(report.sign_changes_e2),
        "hypothesis_certificates": [
            _certificate_to_dict(c) for c in report.hypothesis_certificates
        ],
        "spectrum": [_complex_to_dict(z) for z in report.spectrum],
        "circle_count": report.circle_count,
        "circle_tol": report.circle_tol,
        "tolerance": report.tolerance,
    }


def verification_to_dict(report):
    """VerificationReport as a JSON-ready dict."""
    return {
        "theorem": report.theorem,
        "matched": report.matched,
        "max_residual": report.max_residual,
        "leftovers": [
            [_complex_to_dict(z) for z in side] for side in report.leftovers
        ],
    }
