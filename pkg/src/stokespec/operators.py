"""Discrete operators on gridded domains and the 2D Stokes eigensolve.

The scalar Dirichlet problem uses the 5-point Laplacian restricted to
interior nodes. The Stokes eigenproblem is reduced to its stream-function
form: the velocity is the rotated gradient of a scalar potential that
satisfies a clamped fourth-order eigenproblem, discretized by the 13-point
biharmonic stencil with ghost-node reflection across the wall. Both
matrices of the resulting pencil are symmetric positive definite.
"""

from collections import namedtuple

import numpy as np
import scipy.sparse as sp

from .eig import SparseSym, smallest_eigenpairs
from .grid import ScalarField, VectorField2, inner

__all__ = [
    "assemble_laplacian",
    "assemble_stokes_pencil",
    "stream_to_velocity",
    "solve_stokes",
    "solve_laplacian",
    "StokesEigenSet",
    "LaplacianEigenSet",
    "richardson",
]

_AXIAL = ((1, 0), (-1, 0), (0, 1), (0, -1))
_DIAGONAL = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def _interior_index(mask):
    idx = -np.ones(mask.shape, dtype=np.int64)
    idx[mask] = np.arange(mask.sum())
    return idx


def _shifted_inside(mask, ii, jj, di, dj):
    a, b = ii + di, jj + dj
    ok = (a >= 0) & (a < mask.shape[0]) & (b >= 0) & (b < mask.shape[1])
    res = np.zeros(ii.shape, dtype=bool)
    res[ok] = mask[a[ok], b[ok]]
    return res, a, b


def _min_true_run(mask):
    """Shortest maximal run of True along either grid axis."""
    best = np.inf
    for arr in (mask, mask.T):
        for row in arr:
            r = row.astype(np.int8)
            d = np.diff(np.concatenate(([0], r, [0])))
            starts = np.flatnonzero(d == 1)
            if starts.size:
                ends = np.flatnonzero(d == -1)
                best = min(best, int((ends - starts).min()))
    return best


def assemble_laplacian(domain):
    """5-point negative Laplacian with Dirichlet rows restricted to the mask.

    Neighbors outside the mask are wall nodes where the field vanishes, so
    their columns simply drop. The result is symmetric positive definite.
    """
    mask = domain.mask
    n = int(mask.sum())
    if n == 0:
        raise ValueError("domain has no interior nodes")
    h2 = domain.h**2
    idx = _interior_index(mask)
    ii, jj = np.nonzero(mask)
    center = idx[mask]
    rows = [center]
    cols = [center]
    vals = [np.full(n, 4.0)]
    for di, dj in _AXIAL:
        ok, a, b = _shifted_inside(mask, ii, jj, di, dj)
        rows.append(center[ok])
        cols.append(idx[a[ok], b[ok]])
        vals.append(np.full(int(ok.sum()), -1.0))
    mat = sp.csr_matrix(
        (np.concatenate(vals) / h2, (np.concatenate(rows), np.concatenate(cols))),
        shape=(n, n))
    return SparseSym(mat)


def assemble_stokes_pencil(domain):
    """13-point clamped biharmonic A and 5-point Laplacian B on the mask.

    The wall passes through the first node layer outside the mask, where
    the potential vanishes by row restriction. The zero normal derivative
    is imposed by reflection: the distance-2 neighbor behind a wall node
    folds back onto the center with coefficient +1. Distance-2 and
    diagonal neighbors that are themselves wall nodes drop.

    Returns
    -------
    (A, B) : pair of SparseSym
        Generalized pencil whose eigenvalues are the Stokes eigenvalues.
    """
    mask = domain.mask
    if int(mask.sum()) == 0:
        raise ValueError("domain has no interior nodes")
    if _min_true_run(mask) < 3:
        raise ValueError("interior is thinner than 3 nodes, too thin for the 13-point stencil")
    h4 = domain.h**4
    idx = _interior_index(mask)
    ii, jj = np.nonzero(mask)
    center = idx[mask]
    n = center.size
    rows, cols, vals = [], [], []
    diag = np.full(n, 20.0)
    for di, dj in _AXIAL:
        in1, a1, b1 = _shifted_inside(mask, ii, jj, di, dj)
        rows.append(center[in1])
        cols.append(idx[a1[in1], b1[in1]])
        vals.append(np.full(int(in1.sum()), -8.0))
        in2, a2, b2 = _shifted_inside(mask, ii, jj, 2 * di, 2 * dj)
        both = in1 & in2
        rows.append(center[both])
        cols.append(idx[a2[both], b2[both]])
        vals.append(np.full(int(both.sum()), 1.0))
        diag[~in1] += 1.0  # ghost behind the wall reflects onto the center
    for di, dj in _DIAGONAL:
        ok, a, b = _shifted_inside(mask, ii, jj, di, dj)
        rows.append(center[ok])
        cols.append(idx[a[ok], b[ok]])
        vals.append(np.full(int(ok.sum()), 2.0))
    rows.append(center)
    cols.append(center)
    vals.append(diag)
    A = sp.csr_matrix(
        (np.concatenate(vals) / h4, (np.concatenate(rows), np.concatenate(cols))),
        shape=(n, n))
    return SparseSym(A), assemble_laplacian(domain)


def stream_to_velocity(psi):
    """Rotated gradient of the potential: u = (D_y psi, -D_x psi).

    Centered differences act on the zero-extended potential and the result
    is kept on its full support, including the one-node ring just outside
    the mask. On that support the centered divergence vanishes identically
    because the two difference operators commute on the full lattice.
    """
    h = psi.domain.h
    p = np.pad(psi.grid, 1)
    u1 = (p[1:-1, 2:] - p[1:-1, :-2]) / (2.0 * h)
    u2 = -(p[2:, 1:-1] - p[:-2, 1:-1]) / (2.0 * h)
    return VectorField2(psi.domain, u1, u2)


class StokesEigenSet:
    """Stokes eigenvalues with stream functions and orthonormal velocities."""

    def __init__(self, eigenvalues, stream_functions, velocities, domain,
                 residuals, solver_seed):
        self.eigenvalues = np.asarray(eigenvalues, dtype=float)
        self.stream_functions = list(stream_functions)
        self.velocities = list(velocities)
        self.domain = domain
        self.residuals = np.asarray(residuals, dtype=float)
        self.solver_seed = int(solver_seed)

    def __len__(self):
        return len(self.eigenvalues)


class LaplacianEigenSet:
    """Dirichlet-Laplacian eigenvalues with orthonormal eigenfunctions."""

    def __init__(self, eigenvalues, eigenfunctions, domain, residuals, solver_seed):
        self.eigenvalues = np.asarray(eigenvalues, dtype=float)
        self.eigenfunctions = list(eigenfunctions)
        self.domain = domain
        self.residuals = np.asarray(residuals, dtype=float)
        self.solver_seed = int(solver_seed)

    def __len__(self):
        return len(self.eigenvalues)


def _lowdin_orthonormalize(fields):
    """Symmetric orthonormalization of velocity fields in the L2 product.

    The Gram matrix of curl-derived velocities differs from the identity
    at the discretization level, while the downstream frame and density
    checks need an exactly orthonormal family. The symmetric square root
    is the minimal-change fix and keeps linear combinations divergence
    free. Deviation from the input is of the same order as the Gram error.
    """
    domain = fields[0].domain
    h2 = domain.h**2
    m = len(fields)
    U1 = np.stack([f.u1 for f in fields], axis=-1)
    U2 = np.stack([f.u2 for f in fields], axis=-1)
    G = h2 * (np.einsum("ijk,ijl->kl", U1, U1) + np.einsum("ijk,ijl->kl", U2, U2))
    w, Q = np.linalg.eigh(G)
    if w.min() <= 0:
        raise ValueError("velocity family is numerically rank deficient")
    Gih = (Q * w**-0.5) @ Q.T
    U1 = U1 @ Gih
    U2 = U2 @ Gih
    return [VectorField2(domain, U1[..., k], U2[..., k]) for k in range(m)]


def solve_stokes(domain, m, tol=1e-8, seed=0):
    """Solve the Stokes eigenproblem on a gridded domain.

    Parameters
    ----------
    domain : GriddedDomain
    m : int
        Number of eigenpairs.
    tol : float
        Relative residual bound passed to the eigensolver.
    seed : int
        Seeds the solver's starting vector.

    Returns
    -------
    StokesEigenSet
        Eigenvalues nondecreasing. Stream functions have unit discrete
        gradient energy; velocities are orthonormal in the discrete L2
        product to machine precision and divergence free by construction.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    A, B = assemble_stokes_pencil(domain)
    pairs = smallest_eigenpairs(A, B, m=m, tol=tol, seed=seed)
    h = domain.h
    # v'Bv = 1 means the grid function v/h has unit discrete gradient energy
    psis = [ScalarField.from_interior_values(domain, p.vector / h) for p in pairs]
    vels = []
    for psi in psis:
        u = stream_to_velocity(psi)
        nrm = np.sqrt(inner(u, u))
        vels.append(VectorField2(domain, u.u1 / nrm, u.u2 / nrm))
    vels = _lowdin_orthonormalize(vels)
    return StokesEigenSet(
        eigenvalues=[p.value for p in pairs],
        stream_functions=psis,
        velocities=vels,
        domain=domain,
        residuals=[p.residual for p in pairs],
        solver_seed=seed,
    )


def solve_laplacian(domain, m, tol=1e-8, seed=0):
    """Solve the scalar Dirichlet eigenproblem on a gridded domain.

    Returns a LaplacianEigenSet whose eigenfunctions are orthonormal in
    the discrete L2 product.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    A = assemble_laplacian(domain)
    pairs = smallest_eigenpairs(A, None, m=m, tol=tol, seed=seed)
    h = domain.h
    funcs = [ScalarField.from_interior_values(domain, p.vector / h) for p in pairs]
    return LaplacianEigenSet(
        eigenvalues=[p.value for p in pairs],
        eigenfunctions=funcs,
        domain=domain,
        residuals=[p.residual for p in pairs],
        solver_seed=seed,
    )


RichardsonExtrapolation = namedtuple(
    "RichardsonExtrapolation", ["limit", "error_estimate", "order"])


def richardson(values):
    """Extrapolate a sequence computed at successively halved spacings.

    Fits the observed convergence order p from the last three entries and
    removes the leading error term. The error estimate is the magnitude of
    the applied correction.

    Parameters
    ----------
    values : sequence of float
        At least three entries, at spacings h, h/2, h/4, ...

    Returns
    -------
    RichardsonExtrapolation
        limit, error_estimate, order.
    """
    v = [float(x) for x in values]
    if len(v) < 3:
        raise ValueError("need at least three refinement levels")
    x1, x2, x3 = v[-3], v[-2], v[-1]
    d1, d2 = x2 - x1, x3 - x2
    if d1 == 0 or d2 == 0 or (d1 / d2) <= 1.0:
        raise ValueError("sequence is not converging monotonically")
    order = np.log2(d1 / d2)
    correction = d2 / (2.0**order - 1.0)
    return RichardsonExtrapolation(x3 + correction, abs(correction), float(order))
