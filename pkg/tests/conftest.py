"""Shared fixtures: the three reference domains and their eigensolves.

The heavy solves are session scoped so the acceptance suite and the
module tests share one copy. Everything is seeded; reruns are bitwise
reproducible.
"""

import numpy as np
import pytest

from stokespec import (
    make_disk,
    make_rectangle,
    richardson,
    solve_laplacian,
    solve_stokes,
)

SEED = 0
NX = 128


@pytest.fixture(scope="session")
def square():
    return make_rectangle(1.0, 1.0, NX)


@pytest.fixture(scope="session")
def rect():
    return make_rectangle(2.0, 1.0, NX)


@pytest.fixture(scope="session")
def disk():
    return make_disk(1.0, NX)


@pytest.fixture(scope="session")
def square_laplace(square):
    return solve_laplacian(square, 60, seed=SEED)


@pytest.fixture(scope="session")
def disk_laplace(disk):
    return solve_laplacian(disk, 50, seed=SEED)


@pytest.fixture(scope="session")
def square_stokes(square):
    return solve_stokes(square, 50, seed=SEED)


@pytest.fixture(scope="session")
def rect_stokes(rect):
    return solve_stokes(rect, 50, seed=SEED)


@pytest.fixture(scope="session")
def disk_stokes(disk):
    return solve_stokes(disk, 50, seed=SEED)


def _lambda1_mu1(domain):
    # the fourth-order pencil has norm ~ h^-4, so at the finest disk grid
    # the relative residual bottoms out near 2e-8; 1e-7 is attainable and
    # far below the O(h^2) discretization error the tables care about
    lam = solve_stokes(domain, 1, tol=1e-7, seed=SEED).eigenvalues[0]
    mu = solve_laplacian(domain, 1, tol=1e-7, seed=SEED).eigenvalues[0]
    return lam, mu


@pytest.fixture(scope="session")
def gap_tables():
    """Richardson tables of lambda_1 and mu_1 on doubling grids.

    Maps domain name -> dict with the grid sizes, both value sequences
    and both extrapolations. The disk needs finer grids than the
    polygons because the staircase boundary costs one convergence order.
    """
    builders = {
        "square": (lambda nx: make_rectangle(1.0, 1.0, nx), (32, 64, 128)),
        "rect": (lambda nx: make_rectangle(2.0, 1.0, nx), (32, 64, 128)),
        "disk": (lambda nx: make_disk(1.0, nx), (64, 128, 256)),
    }
    out = {}
    for name, (build, sizes) in builders.items():
        lams, mus = [], []
        for nx in sizes:
            lam, mu = _lambda1_mu1(build(nx))
            lams.append(lam)
            mus.append(mu)
        out[name] = {
            "sizes": sizes,
            "lambda1": lams,
            "mu1": mus,
            "lambda1_ex": richardson(lams),
            "mu1_ex": richardson(mus),
        }
    return out


def gram_matrix(family, inner):
    m = len(family)
    G = np.empty((m, m))
    for i in range(m):
        for j in range(i, m):
            G[i, j] = G[j, i] = inner(family[i], family[j])
    return G
