"""Sparse symmetric (generalized) eigensolver for the m smallest eigenpairs.

Solves A x = lambda B x with A symmetric positive definite and B either
symmetric positive definite or the identity. Large pencils go through
ARPACK shift-invert Lanczos at sigma = 0; small pencils, or requests for
a large fraction of the spectrum, fall back to a dense solve. Returned
vectors are B-orthonormal and sorted by eigenvalue.
"""

import numpy as np
import scipy.linalg
import scipy.sparse as sp
from scipy.sparse.linalg import eigsh, ArpackNoConvergence

__all__ = [
    "SparseSym",
    "EigenPair",
    "smallest_eigenpairs",
    "b_orthonormalize",
    "IndefiniteMatrixError",
    "ConvergenceError",
    "RankDeficiencyError",
]

# below this dimension a dense factorization is cheaper and lets us verify
# positive definiteness directly
_DENSE_CUTOFF = 600


class IndefiniteMatrixError(ValueError):
    """The mass matrix of the pencil is not positive definite."""


class ConvergenceError(RuntimeError):
    """Eigensolver failed to reach the requested residual tolerance."""

    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = residuals


class RankDeficiencyError(ValueError):
    """Orthonormalization input is numerically rank deficient."""


class SparseSym:
    """Symmetric sparse matrix in CSR storage.

    Construct either from a full symmetric scipy sparse matrix or from
    triplets of one triangle via `from_triplets`. Symmetry is verified
    exactly on construction, duplicates are summed away.
    """

    def __init__(self, mat):
        mat = sp.csr_matrix(mat)
        mat.sum_duplicates()
        if mat.shape[0] != mat.shape[1]:
            raise ValueError("matrix must be square")
        if (mat != mat.T).nnz != 0:
            raise ValueError("matrix must be exactly symmetric")
        self.mat = mat

    @classmethod
    def from_triplets(cls, dimension, rows, cols, values):
        """Build from entries of one triangle; the other is mirrored."""
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        values = np.asarray(values, dtype=float)
        off = rows != cols
        r = np.concatenate([rows, cols[off]])
        c = np.concatenate([cols, rows[off]])
        v = np.concatenate([values, values[off]])
        mat = sp.coo_matrix((v, (r, c)), shape=(dimension, dimension)).tocsr()
        mat.sum_duplicates()
        return cls(mat)

    @property
    def dimension(self):
        return self.mat.shape[0]

    def toarray(self):
        return self.mat.toarray()


class EigenPair:
    """One eigenpair with its relative residual |Ax - lambda Bx| / (|lambda| |Bx|)."""

    def __init__(self, value, vector, residual):
        self.value = float(value)
        self.vector = np.asarray(vector, dtype=float)
        self.residual = float(residual)

    def __repr__(self):
        return "EigenPair(value=%.6g, residual=%.2e)" % (self.value, self.residual)


def _as_sparse(M):
    return M.mat if isinstance(M, SparseSym) else sp.csr_matrix(M)


def _relative_residuals(A, B, values, vectors):
    AV = A @ vectors
    BV = B @ vectors if B is not None else vectors
    res = np.linalg.norm(AV - BV * values[None, :], axis=0)
    scale = np.abs(values) * np.linalg.norm(BV, axis=0)
    return res / np.where(scale > 0, scale, 1.0)


def smallest_eigenpairs(A, B=None, m=1, tol=1e-8, seed=0):
    """Compute the m smallest eigenpairs of A x = lambda B x.

    Parameters
    ----------
    A : SparseSym
        Symmetric positive definite stiffness matrix.
    B : SparseSym or None
        Symmetric positive definite mass matrix; None means identity.
    m : int
        Number of eigenpairs, 1 <= m <= dimension.
    tol : float
        Bound on the relative residual of every returned pair.
    seed : int
        Seeds the Lanczos starting vector, making runs reproducible.

    Returns
    -------
    list of EigenPair
        Sorted by eigenvalue; vectors B-orthonormal within 1e-10.

    Raises
    ------
    ConvergenceError
        If the iteration cap is hit or a residual exceeds tol.
    IndefiniteMatrixError
        If B is detected to be indefinite during factorization.
    """
    Am = _as_sparse(A)
    Bm = _as_sparse(B) if B is not None else None
    n = Am.shape[0]
    if m < 1:
        raise ValueError("m must be at least 1")
    if m > n:
        raise ValueError("m exceeds the pencil dimension")
    if Bm is not None and Bm.shape != Am.shape:
        raise ValueError("A and B dimensions differ")

    dense = n <= _DENSE_CUTOFF or m > max(1, n // 4) or m >= n - 1
    if dense:
        if Bm is not None:
            try:
                np.linalg.cholesky(Bm.toarray())
            except np.linalg.LinAlgError:
                raise IndefiniteMatrixError("mass matrix is not positive definite")
        vals, vecs = scipy.linalg.eigh(
            Am.toarray(), Bm.toarray() if Bm is not None else None,
            subset_by_index=[0, m - 1])
    else:
        rng = np.random.default_rng(seed)
        v0 = rng.standard_normal(n)
        maxiter = int(10 * m * np.sqrt(n))
        try:
            vals, vecs = eigsh(Am, k=m, M=Bm, sigma=0, which="LM",
                               v0=v0, maxiter=maxiter)
        except ArpackNoConvergence as exc:
            got = _relative_residuals(Am, Bm, np.asarray(exc.eigenvalues),
                                      exc.eigenvectors) if len(exc.eigenvalues) else []
            raise ConvergenceError(
                "eigensolver hit the iteration cap (%d) with %d of %d pairs"
                % (maxiter, len(exc.eigenvalues), m), residuals=got)
        except RuntimeError as exc:  # SuperLU reports singular/indefinite factors here
            raise IndefiniteMatrixError("factorization failed: %s" % exc)

    order = np.argsort(vals)
    vals = vals[order]
    vecs = vecs[:, order]
    vecs = b_orthonormalize(vecs, B)

    resid = _relative_residuals(Am, Bm, vals, vecs)
    if np.any(resid > tol):
        raise ConvergenceError(
            "residuals above tol=%.1e (worst %.1e)" % (tol, resid.max()),
            residuals=resid)
    return [EigenPair(v, vecs[:, k], resid[k]) for k, v in enumerate(vals)]


def b_orthonormalize(vectors, B=None):
    """Gram-Schmidt in the B inner product, applied twice for stability.

    Parameters
    ----------
    vectors : ndarray (n, m) or sequence of length-n arrays
        Linearly independent input set.
    B : SparseSym or None
        Inner-product matrix; None means identity.

    Returns
    -------
    ndarray (n, m)
        B-orthonormal columns spanning the same space; the Gram matrix
        equals the identity within 1e-12.

    Raises
    ------
    RankDeficiencyError
        If a column is (numerically) dependent on the previous ones.
    """
    V = np.column_stack(vectors) if not isinstance(vectors, np.ndarray) else vectors.copy()
    if V.ndim != 2:
        raise ValueError("expected a 2d array of column vectors")
    Bm = _as_sparse(B) if B is not None else None
    apply_b = (lambda x: Bm @ x) if Bm is not None else (lambda x: x)
    n, m = V.shape
    for _ in range(2):  # second sweep drives the Gram error to roundoff
        for k in range(m):
            v = V[:, k]
            bv = apply_b(v)
            norm_before = np.sqrt(abs(v @ bv))
            for j in range(k):
                v = v - (V[:, j] @ bv) * V[:, j]
                bv = apply_b(v)
            norm_after = np.sqrt(abs(v @ bv))
            if norm_after <= 1e-8 * max(norm_before, 1e-300):
                raise RankDeficiencyError("input set is rank deficient at column %d" % k)
            V[:, k] = v / norm_after
    return V
