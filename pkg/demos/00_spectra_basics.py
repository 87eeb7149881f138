"""
Spectra: ordering conventions, Perron pairs, and multiset matching
==================================================================

The other scripts build on three conventions fixed here: every spectrum
comes back in a canonical deterministic order, nonnegative matrices get
their leading eigenpair through power iteration with a dense fallback, and
"two spectra are equal" always means a tolerance-aware multiset match whose
threshold is part of the answer.
"""
import numpy as np

from wedgespec import (
    DegeneratePerronError,
    eigenpairs,
    eigenvalues,
    multiset_match,
    perron_pair,
    spectral_radius,
)

# ---------------------------------------------------------------------------
# Canonical order: modulus descending, ties broken by argument ascending in
# (-pi, pi]. The rotation matrix has eigenvalues +-i; the tie goes to -i.
rot = np.array([[0.0, -1.0], [1.0, 0.0]])
print("rotation matrix spectrum:", eigenvalues(rot))

m = np.array([[3.0, 1.0, 0.0], [0.5, 2.0, 0.5], [0.0, 1.0, 1.0]])
w = eigenvalues(m)
print("general spectrum:", np.round(w, 6))
print("spectral radius:", round(spectral_radius(w), 6))

# Eigenpairs come with a residual guarantee: ||m v - lambda v|| stays under
# tol * ||m|| for every returned pair.
vals, vecs = eigenpairs(m)
res = np.linalg.norm(m @ vecs - vecs * vals[None, :], axis=0)
print("max eigenpair residual:", f"{res.max():.2e}")

# ---------------------------------------------------------------------------
# Perron pair of a nonnegative matrix: power iteration from the all-ones
# vector, geometric convergence for primitive input.
a = np.array([[2.0, 1.0], [1.0, 2.0]])
lam, v = perron_pair(a)
print("\nPerron root of [[2,1],[1,2]]:", round(lam, 10), " vector:", np.round(v, 6))

# A nilpotent matrix has spectral radius zero; the iteration certifies that
# by annihilating a positive vector and signals instead of returning 0/0.
try:
    perron_pair(np.array([[0.0, 1.0], [0.0, 0.0]]))
except DegeneratePerronError as exc:
    print("nilpotent input signals:", exc)

# ---------------------------------------------------------------------------
# Multiset matching: greedy nearest-neighbor in sorted order, threshold
# tol * max(1, largest modulus), leftovers reported on both sides.
rep = multiset_match([2.0, 3.0, 6.0], [6.0, 3.0, 2.0], tol=1e-9)
print("\npermuted triple matches:", rep.matched, " max residual:", rep.max_residual)

rep = multiset_match([1.0, 2.0], [1.0], tol=1e-9)
print("cardinality mismatch:", rep.matched, " leftovers:", rep.leftover_a)

rep = multiset_match([1.0], [1.0 + 5e-10], tol=1e-9)
print("within tolerance:", rep.matched,
      " threshold applied:", rep.tolerance, " residual:", f"{rep.max_residual:.1e}")
