"""Minors, compound matrices, Kronecker squares, and exterior squares.

The exterior square acts on the antisymmetric pair basis {e_i ^ e_j : i < j}
in lexicographic order, with no normalization, so its matrix coincides with
the second compound matrix entry for entry. Both constructions are kept as
separate code paths and cross-checked in the tests.
"""

from itertools import combinations
from math import comb

import numpy as np

from .errors import ResourceLimitError, ValidationError
from .spectra import as_dense_matrix

# Built matrices above this many entries are refused unless force=True.
MAX_ENTRIES = 1_000_000

_CHUNK_ROWS = 512


class PairBasis:
    """Lexicographically ordered index pairs (i, j) with i < j below n."""

    def __init__(self, n):
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise ValidationError(f"pair basis needs an integer dimension n >= 1, got {n!r}")
        self.n = int(n)
        self.pairs = tuple((i, j) for i in range(n) for j in range(i + 1, n))
        self._index = {p: k for k, p in enumerate(self.pairs)}

    @property
    def size(self):
        return len(self.pairs)

    def index_of(self, i, j):
        """Position of the pair (i, j), i < j, in lexicographic order."""
        try:
            return self._index[(i, j)]
        except KeyError:
            raise ValidationError(
                f"({i}, {j}) is not a valid pair for dimension {self.n}; need 0 <= i < j < n"
            ) from None

    def pair_at(self, k):
        if not 0 <= k < len(self.pairs):
            raise ValidationError(f"pair index {k} out of range for size {len(self.pairs)}")
        return self.pairs[k]

    def arrays(self):
        """First and second pair components as integer arrays."""
        if not self.pairs:
            z = np.zeros(0, dtype=int)
            return z, z.copy()
        p = np.asarray(self.pairs, dtype=int)
        return p[:, 0], p[:, 1]


def _check_index_set(idx, n, what):
    try:
        sel = [int(i) for i in idx]
    except (TypeError, ValueError):
        raise ValidationError(f"{what} index set must be a sequence of integers") from None
    if len(sel) < 1:
        raise ValidationError(f"{what} index set must be nonempty")
    if any(not 0 <= i < n for i in sel):
        raise ValidationError(f"{what} indices must lie in 0..{n - 1}, got {sel}")
    if any(b <= a for a, b in zip(sel, sel[1:])):
        raise ValidationError(f"{what} indices must be strictly increasing, got {sel}")
    return sel


def _det_stack(sub):
    """Determinants of a stack of j x j matrices, closed form for j <= 3."""
    j = sub.shape[-1]
    if j == 1:
        return sub[..., 0, 0].copy()
    if j == 2:
        return sub[..., 0, 0] * sub[..., 1, 1] - sub[..., 0, 1] * sub[..., 1, 0]
    if j == 3:
        return (
            sub[..., 0, 0] * (sub[..., 1, 1] * sub[..., 2, 2] - sub[..., 1, 2] * sub[..., 2, 1])
            - sub[..., 0, 1] * (sub[..., 1, 0] * sub[..., 2, 2] - sub[..., 1, 2] * sub[..., 2, 0])
            + sub[..., 0, 2] * (sub[..., 1, 0] * sub[..., 2, 1] - sub[..., 1, 1] * sub[..., 2, 0])
        )
    return np.linalg.det(sub)


def minor(m, rows, cols):
    """Determinant of the submatrix selected by two equal-length index sets.

    Laplace closed form for orders up to 3, LU with partial pivoting above.
    """
    m = as_dense_matrix(m)
    n = m.shape[0]
    r = _check_index_set(rows, n, "row")
    c = _check_index_set(cols, n, "column")
    if len(r) != len(c):
        raise ValidationError(
            f"row and column index sets must have equal length, got {len(r)} and {len(c)}"
        )
    sub = m[np.ix_(r, c)]
    return float(_det_stack(sub[None, ...])[0])


def _check_cap(entries, force, what):
    if entries > MAX_ENTRIES and not force:
        raise ResourceLimitError(
            f"{what} would hold {entries} entries, above the cap of {MAX_ENTRIES}; "
            "pass force=True to build it anyway"
        )


def compound_matrix(m, j, force=False):
    """The j-th compound: all order-j minors on lexicographic index sets.

    Entry (R, S) is minor(m, R, S) with row sets R and column sets S both in
    lexicographic order, so compound_matrix(m, 1) == m and
    compound_matrix(m, n) == [[det m]].
    """
    m = as_dense_matrix(m)
    n = m.shape[0]
    if not isinstance(j, (int, np.integer)) or not 1 <= j <= n:
        raise ValidationError(f"compound order must satisfy 1 <= j <= n = {n}, got {j!r}")
    j = int(j)
    size = comb(n, j)
    _check_cap(size * size, force, f"compound_matrix(n={n}, j={j})")
    sets = list(combinations(range(n), j))
    out = np.empty((size, size))
    col_ix = np.asarray(sets, dtype=int)
    for a in range(0, size, _CHUNK_ROWS):
        block = sets[a : a + _CHUNK_ROWS]
        # shape (rows in block, size, j, j): rows select, then columns
        sub = m[np.asarray(block, dtype=int)[:, None, :, None], col_ix[None, :, None, :]]
        out[a : a + len(block)] = _det_stack(sub)
    return out


def tensor_square(m, force=False):
    """Kronecker square on the row-major product basis ((i1, i2) -> i1*n + i2)."""
    m = as_dense_matrix(m)
    n = m.shape[0]
    _check_cap(n ** 4, force, f"tensor_square(n={n})")
    return np.kron(m, m)


def exterior_square(m, force=False):
    """Matrix of the wedge action on the pair basis, entry by entry.

    Entry ((i, j), (k, l)) is m[i, k] m[j, l] - m[i, l] m[j, k], built by
    direct gathers rather than through the minor machinery.
    """
    m = as_dense_matrix(m)
    n = m.shape[0]
    if n < 2:
        raise ValidationError("exterior square needs dimension n >= 2")
    basis = PairBasis(n)
    p, q = basis.arrays()
    size = basis.size
    _check_cap(size * size, force, f"exterior_square(n={n})")
    out = np.empty((size, size))
    for a in range(0, size, _CHUNK_ROWS):
        sl = slice(a, min(a + _CHUNK_ROWS, size))
        out[sl] = m[p[sl, None], p[None, :]] * m[q[sl, None], q[None, :]] - m[
            p[sl, None], q[None, :]
        ] * m[q[sl, None], p[None, :]]
    return out


def wedge_vector(x, y):
    """Wedge product of two vectors on the pair basis.

    Component (i, j) is x[i] y[j] - x[j] y[i], the 2x2 minor of the two
    coordinate functions at positions i < j.
    """
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.shape != y.shape:
        raise ValidationError(f"wedge_vector needs equal lengths, got {x.size} and {y.size}")
    if x.size < 2:
        raise ValidationError("wedge_vector needs vectors of length >= 2")
    p, q = PairBasis(x.size).arrays()
    return x[p] * y[q] - x[q] * y[p]


def exterior_apply(m, w):
    """Apply the wedge action of ``m`` to a pair-basis vector without
    materializing the exterior square.

    Unpacks ``w`` into the antisymmetric matrix X with X[i, j] = w[(i, j)]
    for i < j, forms m X m^T (which is again antisymmetric), and repacks.
    Equals exterior_square(m) @ w up to rounding, at O(n^3) cost.
    """
    m = as_dense_matrix(m)
    n = m.shape[0]
    if n < 2:
        raise ValidationError("exterior_apply needs dimension n >= 2")
    w = np.asarray(w, dtype=float).ravel()
    basis = PairBasis(n)
    if w.size != basis.size:
        raise ValidationError(
            f"pair vector has length {w.size}, expected n(n-1)/2 = {basis.size}"
        )
    p, q = basis.arrays()
    x = np.zeros((n, n))
    x[p, q] = w
    x[q, p] = -w
    y = m @ x @ m.T
    return y[p, q]
