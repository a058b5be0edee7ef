"""Operator assembly oracles, the eigenset pipelines and extrapolation."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stokespec import (
    GriddedDomain,
    ScalarField,
    assemble_laplacian,
    assemble_stokes_pencil,
    grad_norm_sq,
    inner,
    make_rectangle,
    richardson,
    smallest_eigenpairs,
    solve_laplacian,
    solve_stokes,
    stream_to_velocity,
)
from conftest import gram_matrix


def _discrete_square_spectrum(nx, count):
    h = 1.0 / nx
    ks = np.arange(1, nx)
    s = (4.0 / h**2) * np.sin(ks * np.pi * h / 2.0) ** 2
    vals = np.sort((s[:, None] + s[None, :]).ravel())
    return vals[:count]


def test_laplacian_matches_discrete_spectrum():
    dom = make_rectangle(1.0, 1.0, 32)
    A = assemble_laplacian(dom)
    pairs = smallest_eigenpairs(A, m=10, seed=0)
    np.testing.assert_allclose([p.value for p in pairs],
                               _discrete_square_spectrum(32, 10), rtol=1e-10)


def test_laplacian_eigenfunction_gradient_identity():
    # forward difference energy of an interior eigenfunction equals the
    # eigenvalue exactly (summation by parts is exact on the lattice)
    dom = make_rectangle(1.0, 1.0, 32)
    les = solve_laplacian(dom, 4, seed=0)
    for mu, phi in zip(les.eigenvalues, les.eigenfunctions):
        assert grad_norm_sq(phi) == pytest.approx(mu * inner(phi, phi), rel=1e-10)


def test_stokes_pencil_is_positive_and_above_laplacian():
    dom = make_rectangle(1.0, 1.0, 32)
    ses = solve_stokes(dom, 3, seed=0)
    les = solve_laplacian(dom, 3, seed=0)
    assert ses.eigenvalues[0] > 0
    assert ses.eigenvalues[0] > les.eigenvalues[0]
    assert list(ses.eigenvalues) == sorted(ses.eigenvalues)


def test_pencil_rejects_thin_domains():
    # a 2-node-wide strip leaves no room for the distance-2 stencil arms
    nx = 12
    mask = np.zeros((nx + 1, nx + 1), dtype=bool)
    mask[1:nx, 5:7] = True
    dom = GriddedDomain(nx, nx, 1.0 / nx, mask, mask.sum() / nx**2,
                        "strip", {})
    with pytest.raises(ValueError):
        assemble_stokes_pencil(dom)


def test_matrices_are_exactly_symmetric():
    dom = make_rectangle(1.0, 1.0, 16)
    A = assemble_laplacian(dom)
    K, B = assemble_stokes_pencil(dom)
    for S in (A, K, B):
        assert (S.mat != S.mat.T).nnz == 0


def test_curl_is_discretely_divergence_free():
    # centered x and y differences commute, so the centered divergence of
    # the padded curl vanishes identically, not just to truncation order
    dom = make_rectangle(1.0, 1.0, 24)
    rng = np.random.default_rng(5)
    psi = ScalarField.from_interior_values(dom, rng.standard_normal(dom.interior_count))
    vel = stream_to_velocity(psi)
    P1 = np.pad(vel.u1, 1)
    P2 = np.pad(vel.u2, 1)
    div = (P1[2:, 1:-1] - P1[:-2, 1:-1] + P2[1:-1, 2:] - P2[1:-1, :-2]) / (2 * dom.h)
    assert np.abs(div).max() < 1e-9


def test_solve_stokes_family_contract():
    dom = make_rectangle(1.0, 1.0, 32)
    ses = solve_stokes(dom, 6, seed=0)
    assert len(ses) == 6
    assert all(r <= 1e-8 for r in ses.residuals)
    assert ses.solver_seed == 0
    G = gram_matrix(ses.velocities, inner)
    np.testing.assert_allclose(G, np.eye(6), atol=1e-12)
    total = sum(inner(u, u) for u in ses.velocities)
    assert total == pytest.approx(6.0, abs=1e-9)


def test_stokes_rayleigh_quotient_consistency(square_stokes):
    # velocities carry a one-node ring outside the wall, so the gradient
    # quotient sees an O(h) boundary layer; a few percent at this grid
    lams = square_stokes.eigenvalues[:20]
    vels = square_stokes.velocities[:20]
    rel = [abs(lam - grad_norm_sq(u)) / lam for lam, u in zip(lams, vels)]
    assert max(rel) < 5e-2


def test_richardson_exact_geometric():
    limit, err, order = richardson([10.0 - 1.0, 10.0 - 0.25, 10.0 - 0.0625])
    assert limit == pytest.approx(10.0, abs=1e-12)
    assert order == pytest.approx(2.0, abs=1e-12)
    # error estimate is the applied correction, a bound on |x3 - limit|
    assert err == pytest.approx(0.0625, rel=1e-12)


def test_richardson_rejects_non_contracting():
    with pytest.raises(ValueError):
        richardson([1.0, 2.0, 4.0])
    with pytest.raises(ValueError):
        richardson([1.0, 2.0])


@settings(max_examples=60, deadline=None)
@given(
    limit=st.floats(min_value=-100, max_value=100),
    amp=st.floats(min_value=1e-3, max_value=10.0),
    order=st.floats(min_value=0.5, max_value=3.0),
)
def test_richardson_recovers_power_law(limit, amp, order):
    seq = [limit - amp * 2.0 ** (-order * m) for m in range(3)]
    ex = richardson(seq)
    assert ex.limit == pytest.approx(limit, abs=1e-9 + 1e-9 * abs(limit))
    assert ex.order == pytest.approx(order, abs=1e-6)


def test_laplacian_convergence_is_second_order():
    vals = [solve_laplacian(make_rectangle(1.0, 1.0, nx), 1, seed=0).eigenvalues[0]
            for nx in (16, 32, 64)]
    ex = richardson(vals)
    assert 1.9 < ex.order < 2.1
    assert ex.limit == pytest.approx(2.0 * np.pi**2, rel=1e-4)
