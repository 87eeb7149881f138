"""Dense eigenvalue computation, Perron pairs, and spectrum multiset matching.

Spectra are represented as numpy arrays of complex values in a canonical
order: modulus descending, ties broken by argument ascending in (-pi, pi].
Every function that returns a spectrum returns it in that order, so reports
built on top of this module are deterministic for a fixed input.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DegeneratePerronError, ValidationError

DEFAULT_TOL = 1e-9


def as_dense_matrix(a):
    """Validate and return a square, finite, float64 matrix.

    Parameters
    ----------
    a : array_like
        Anything numpy can coerce to a 2-d square array of reals.

    Returns
    -------
    numpy.ndarray
        A float64 copy of shape (n, n), n >= 1.

    Raises
    ------
    ValidationError
        If the input is not square, is empty, or contains NaN/Inf.
    """
    try:
        m = np.array(a, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"matrix entries must be real numbers: {exc}") from None
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] < 1:
        raise ValidationError("matrix must have dimension n >= 1")
    if not np.all(np.isfinite(m)):
        raise ValidationError("matrix contains NaN or Inf entries")
    return m


def require_nonnegative(m, tol):
    """Raise unless every entry of ``m`` is >= -tol."""
    lo = float(m.min())
    if lo < -tol:
        i, j = np.unravel_index(int(np.argmin(m)), m.shape)
        raise ValidationError(
            f"matrix is not entrywise nonnegative within tol={tol:g}: "
            f"entry ({i},{j}) = {lo:g}"
        )


def _check_tol(tol):
    if not (isinstance(tol, (int, float)) and tol > 0):
        raise ValidationError(f"tol must be a positive real, got {tol!r}")


def sort_spectrum(values):
    """Sort complex values by modulus descending, then argument ascending.

    The argument is taken in (-pi, pi] after normalizing signed zeros, so
    conjugate pairs of negative reals do not straddle the branch cut. The
    resulting order is total for any fixed value multiset.
    """
    v = np.asarray(values, dtype=complex).ravel()
    if v.size == 0:
        return v
    canon = (v.real + 0.0) + 1j * (v.imag + 0.0)  # fold -0.0 into +0.0
    order = np.lexsort((np.angle(canon), -np.abs(canon)))
    return v[order]


def _solver_failure(m, exc):
    norm = float(np.linalg.norm(m))
    try:
        cond = float(np.linalg.cond(m))
    except np.linalg.LinAlgError:
        cond = float("inf")
    return ConvergenceError(
        f"eigenvalue iteration did not converge for a {m.shape[0]}x{m.shape[0]} "
        f"matrix (Frobenius norm {norm:.6g}, condition estimate {cond:.6g}): {exc}"
    )


def eigenvalues(m, tol=DEFAULT_TOL):
    """All eigenvalues of a real square matrix, canonically sorted.

    Uses the dense Hessenberg + implicitly shifted QR route (LAPACK dgeev),
    which is deterministic for a fixed input on a fixed build.

    Parameters
    ----------
    m : array_like
        Real square matrix.
    tol : float
        Relative tolerance recorded for downstream residual checks.

    Returns
    -------
    numpy.ndarray
        Complex array of length n in canonical sort order.
    """
    m = as_dense_matrix(m)
    _check_tol(tol)
    try:
        w = np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise _solver_failure(m, exc) from None
    return sort_spectrum(w)


def eigenpairs(m, tol=DEFAULT_TOL):
    """Eigenvalues with matching eigenvectors and a residual guarantee.

    Returns ``(values, vectors)`` with ``values`` canonically sorted and
    ``vectors[:, k]`` a unit eigenvector for ``values[k]``. Each pair is
    validated against the backward-error bound
    ``||m v - lambda v|| <= tol * ||m||_F``; a violation raises
    ConvergenceError with condition diagnostics.
    """
    m = as_dense_matrix(m)
    _check_tol(tol)
    try:
        w, v = np.linalg.eig(m)
    except np.linalg.LinAlgError as exc:
        raise _solver_failure(m, exc) from None
    canon = (w.real + 0.0) + 1j * (w.imag + 0.0)
    order = np.lexsort((np.angle(canon), -np.abs(canon)))
    w, v = w[order], v[:, order]
    scale = max(float(np.linalg.norm(m)), np.finfo(float).tiny)
    residuals = np.linalg.norm(m @ v - v * w[None, :], axis=0)
    worst = float(residuals.max())
    if worst > tol * scale:
        raise _solver_failure(m, f"residual {worst:.3e} exceeds {tol:g} * ||m||")
    return w, v


def spectral_radius(s):
    """Maximum modulus over a nonempty spectrum."""
    v = np.asarray(s, dtype=complex).ravel()
    if v.size == 0:
        raise ValidationError("spectral radius of an empty spectrum is undefined")
    return float(np.abs(v).max())


def _power_iteration(matvec, start, tol, max_iter, scale):
    """Power iteration returning (estimate, vector, converged).

    ``scale`` sets the residual target ``||Ax - lam x|| <= tol * scale``.
    Returns converged=False on stagnation; raises DegeneratePerronError if
    an iterate is annihilated, which for a nonnegative operator and a
    positive start vector certifies a zero spectral radius.
    """
    x = start / np.linalg.norm(start)
    y = matvec(x)
    lam = 0.0
    for _ in range(max_iter):
        ny = float(np.linalg.norm(y))
        if ny == 0.0:
            raise DegeneratePerronError(
                "power iteration annihilated a positive vector; "
                "spectral radius is zero (nilpotent operator)"
            )
        x = y / ny
        y = matvec(x)
        lam = float(x @ y)
        if float(np.linalg.norm(y - lam * x)) <= tol * scale:
            return lam, x, True
    return lam, x, False


def perron_pair(m, tol=DEFAULT_TOL, max_iter=None):
    """Perron root and a nonnegative unit eigenvector of a nonnegative matrix.

    Power iteration from the all-ones vector, which converges geometrically
    for primitive matrices. If it stagnates (imprimitive or reducible input)
    the full dense solve is used as a fallback and a nonnegative eigenvector
    for the spectral radius is selected from the computed eigenbasis when
    one exists there.

    Parameters
    ----------
    m : array_like
        Square matrix with entries >= -tol; tiny negatives are clipped.
    tol : float
        Relative residual target and nonnegativity slack.
    max_iter : int, optional
        Iteration cap, default 100 * n.

    Returns
    -------
    (float, numpy.ndarray)
        The spectral radius and a unit eigenvector with min entry >= -tol.

    Raises
    ------
    DegeneratePerronError
        If the spectral radius is numerically zero (nilpotent matrix).
    """
    m = as_dense_matrix(m)
    _check_tol(tol)
    require_nonnegative(m, tol)
    a = np.where(m < 0.0, 0.0, m)
    n = a.shape[0]
    if max_iter is None:
        max_iter = 100 * n
    scale = max(float(np.linalg.norm(a)), np.finfo(float).tiny)

    lam, x, ok = _power_iteration(lambda z: a @ z, np.ones(n), tol, max_iter, scale)
    if ok:
        if lam <= tol * scale:
            raise DegeneratePerronError(
                f"spectral radius {lam:.3e} is below tol * ||m|| = {tol * scale:.3e}"
            )
        return lam, x

    # Stagnation: several eigenvalues share the leading modulus. Solve densely
    # and pick a nonnegative representative for the Perron root.
    w, v = eigenpairs(a, tol)
    rho = float(np.abs(w[0]))
    if rho <= tol * scale:
        raise DegeneratePerronError(
            f"spectral radius {rho:.3e} is below tol * ||m|| = {tol * scale:.3e}"
        )
    for k in range(n):
        if abs(w[k]) < rho * (1.0 - 10.0 * tol):
            break
        if abs(w[k].imag) > tol * rho:
            continue
        col = v[:, k]
        if float(np.abs(col.imag).max()) > tol:
            continue
        vec = col.real
        vec = vec / np.linalg.norm(vec)
        if vec.sum() < 0.0:
            vec = -vec
        if float(vec.min()) >= -tol:
            return rho, vec
    raise ConvergenceError(
        "no nonnegative eigenvector for the spectral radius was found in the "
        f"computed eigenbasis (rho = {rho:.6g}); the eigenspace may need a "
        "nonnegative recombination"
    )


@dataclass(frozen=True)
class MatchReport:
    """Outcome of matching two spectra as multisets with a tolerance.

    ``pairs`` holds the accepted (a, b) value pairs, ``max_residual`` the
    largest |a - b| over accepted pairs, and the leftovers whatever could
    not be matched on each side. ``tolerance`` is the absolute threshold
    actually applied, tol * max(1, largest modulus seen).
    """

    matched: bool
    pairs: tuple
    max_residual: float
    leftover_a: tuple
    leftover_b: tuple
    tolerance: float


def multiset_match(a, b, tol):
    """Greedy nearest-neighbor matching of two spectra in sorted order.

    Walks ``a`` in canonical (modulus-descending) order and pairs each value
    with the nearest unmatched value of ``b`` provided the distance is at
    most ``tol * max(1, max modulus)``. Success requires equal cardinality
    and no leftovers.
    """
    _check_tol(tol)
    av = sort_spectrum(np.asarray(a, dtype=complex))
    bv = sort_spectrum(np.asarray(b, dtype=complex))
    top = 0.0
    if av.size or bv.size:
        top = max(
            float(np.abs(av).max()) if av.size else 0.0,
            float(np.abs(bv).max()) if bv.size else 0.0,
        )
    thresh = tol * max(1.0, top)

    free = np.ones(bv.size, dtype=bool)
    pairs = []
    leftover_a = []
    worst = 0.0
    for x in av:
        if not free.any():
            leftover_a.append(complex(x))
            continue
        idx = np.flatnonzero(free)
        dist = np.abs(bv[idx] - x)
        k = int(idx[np.argmin(dist)])
        d = float(abs(bv[k] - x))
        if d <= thresh:
            free[k] = False
            pairs.append((complex(x), complex(bv[k])))
            worst = max(worst, d)
        else:
            leftover_a.append(complex(x))
    leftover_b = [complex(z) for z in bv[free]]
    matched = not leftover_a and not leftover_b and av.size == bv.size
    return MatchReport(
        matched=matched,
        pairs=tuple(pairs),
        max_residual=worst,
        leftover_a=tuple(leftover_a),
        leftover_b=tuple(leftover_b),
        tolerance=thresh,
    )
