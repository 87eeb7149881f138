"""
Wedge products, compound matrices, and squared operators
=========================================================

A walk through the multilinear constructions: the antisymmetric pair basis,
wedge products of vectors, j-th compound matrices, the Kronecker square,
and the exterior square, ending with the spectrum identities that connect
them to the base matrix.
"""
import numpy as np

from wedgespec import (
    PairBasis,
    compound_matrix,
    eigenvalues,
    exterior_square,
    multiset_match,
    tensor_square,
    verify_theorem1,
    verify_theorem2,
    wedge_vector,
)

# ---------------------------------------------------------------------------
# The pair basis: index pairs (i, j) with i < j, in lexicographic order.
# This is the discrete half of the product domain; a function on all ordered
# pairs that is antisymmetric is determined by its values here.
basis = PairBasis(4)
print("pair basis for n=4:", basis.pairs)
print("index of (1, 3):", basis.index_of(1, 3))

# Wedge product of two vectors: component (i, j) is the 2x2 determinant of
# their coordinates at positions i and j.
x = np.array([1.0, 2.0, 0.0, -1.0])
y = np.array([0.0, 1.0, 3.0, 2.0])
print("\nx ^ y =", wedge_vector(x, y))
print("x ^ x =", wedge_vector(x, x), "(always zero)")

# ---------------------------------------------------------------------------
# Compound matrices hold all j-th order minors on lexicographic index sets.
m = np.array([[2.0, 1.0, 0.0], [1.0, 2.0, 1.0], [0.0, 1.0, 2.0]])
print("\nsecond compound of the tridiagonal example:")
print(compound_matrix(m, 2))
print("third compound (the determinant):", compound_matrix(m, 3))

# The exterior square is the same matrix built along a different route:
# the action of the matrix on wedge products.
print("\nexterior square equals the second compound entrywise:",
      np.allclose(exterior_square(m), compound_matrix(m, 2), atol=1e-14))

# Functoriality: wedging the images equals applying the exterior square.
a = np.array([[1.0, 2.0, 0.5, 0.0],
              [0.0, 1.0, 1.0, 0.2],
              [0.3, 0.0, 2.0, 1.0],
              [0.0, 0.4, 0.0, 1.0]])
lhs = wedge_vector(a @ x, a @ y)
rhs = exterior_square(a) @ wedge_vector(x, y)
print("wedge(Ax, Ay) == ext2(A) wedge(x, y):", np.allclose(lhs, rhs))

# ---------------------------------------------------------------------------
# Spectrum identities. The Kronecker square has every ordered product of
# eigenvalue pairs; the exterior square keeps the products over i < j.
w = eigenvalues(a)
print("\neigenvalues of A:", np.round(w, 6))

t = tensor_square(a)
products_all = np.multiply.outer(w, w).ravel()
print("tensor square spectrum matches all ordered products:",
      multiset_match(eigenvalues(t), products_all, tol=1e-8).matched)

e = exterior_square(a)
iu = np.triu_indices(len(w), 1)
products_pairs = np.multiply.outer(w, w)[iu]
print("exterior square spectrum matches the i<j products:",
      multiset_match(eigenvalues(e), products_pairs, tol=1e-8).matched)

# The same checks, packaged as verification reports.
print("\nbatch verifiers on a random matrix:")
g = np.random.default_rng(0).standard_normal((5, 5))
print("  ordered products:", verify_theorem1(g).matched,
      " max residual", f"{verify_theorem1(g).max_residual:.2e}")
print("  i<j products:   ", verify_theorem2(g).matched,
      " max residual", f"{verify_theorem2(g).max_residual:.2e}")

# One consequence worth seeing on its own: the spectral radius of the
# exterior square is always the product of the two largest eigenvalue
# moduli of the base matrix.
rho_wedge = max(abs(z) for z in eigenvalues(e))
print("\nrho(ext2) =", round(rho_wedge, 8),
      " |lam1*lam2| =", round(abs(w[0] * w[1]), 8))
