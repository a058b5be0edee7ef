"""Domain construction, fields, inner products and gradient energies."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stokespec import (
    ScalarField,
    VectorField2,
    grad_norm_sq,
    inner,
    make_disk,
    make_rectangle,
)


def test_rectangle_geometry():
    dom = make_rectangle(1.0, 1.0, 16)
    assert dom.h == pytest.approx(1.0 / 16)
    assert dom.ny == 16
    assert dom.measure == 1.0
    assert dom.mask.shape == (17, 17)
    assert dom.interior_count == 15 * 15
    # boundary nodes stay outside the mask
    assert not dom.mask[0, :].any() and not dom.mask[-1, :].any()
    assert not dom.mask[:, 0].any() and not dom.mask[:, -1].any()


def test_rectangle_anisotropic():
    dom = make_rectangle(2.0, 1.0, 32)
    assert dom.h == pytest.approx(2.0 / 32)
    assert dom.ny == 16
    assert dom.measure == 2.0


def test_rectangle_rejects_non_commensurate_height():
    with pytest.raises(ValueError):
        make_rectangle(1.0, 0.37, 16)


def test_rectangle_rejects_too_few_rows():
    with pytest.raises(ValueError):
        make_rectangle(1.0, 0.25, 16)


def test_disk_geometry():
    dom = make_disk(1.0, 32)
    assert dom.h == pytest.approx(2.0 / 32)
    # strict staircase: every masked node lies strictly inside the circle
    X, Y = dom.node_coords()
    assert (X[dom.mask] ** 2 + Y[dom.mask] ** 2 < 1.0).all()
    assert dom.measure == pytest.approx(dom.interior_count * dom.h**2)
    assert dom.measure == pytest.approx(np.pi, rel=0.1)
    # quarter-turn symmetric by construction
    assert np.array_equal(np.rot90(dom.mask), dom.mask)


def test_centered_coordinates():
    dom = make_rectangle(1.0, 1.0, 16)
    xs = dom.node_xs()
    assert xs[0] == pytest.approx(-0.5)
    assert xs[-1] == pytest.approx(0.5)
    np.testing.assert_allclose(xs + xs[::-1], 0.0, atol=1e-15)


def test_field_roundtrip():
    dom = make_rectangle(1.0, 1.0, 16)
    vals = np.arange(dom.interior_count, dtype=float)
    f = ScalarField.from_interior_values(dom, vals)
    np.testing.assert_array_equal(f.values, vals)
    assert f.grid[0, 0] == 0.0


def test_inner_exact_for_sine_products():
    # h^2 sum sin^2(p pi i h) = h/2 per axis, exactly, so the sampled
    # product mode has squared norm 1/4 to roundoff
    dom = make_rectangle(1.0, 1.0, 32)
    f = ScalarField.from_function(
        dom, lambda x, y: np.sin(np.pi * (x + 0.5)) * np.sin(np.pi * (y + 0.5)))
    assert inner(f, f) == pytest.approx(0.25, rel=1e-13)


def test_inner_rejects_mismatched_domains():
    a = ScalarField.from_function(make_rectangle(1.0, 1.0, 16), lambda x, y: x)
    b = ScalarField.from_function(make_rectangle(1.0, 1.0, 24), lambda x, y: x)
    with pytest.raises(ValueError):
        inner(a, b)


def test_grad_energy_matches_discrete_eigenvalue():
    # the sampled sine product is an exact eigenvector of the forward
    # difference energy: value (8/h^2) sin^2(pi h / 2) times norm^2 = 1/4
    dom = make_rectangle(1.0, 1.0, 64)
    h = dom.h
    f = ScalarField.from_function(
        dom, lambda x, y: np.sin(np.pi * (x + 0.5)) * np.sin(np.pi * (y + 0.5)))
    expected = (8.0 / h**2) * np.sin(np.pi * h / 2.0) ** 2 * 0.25
    assert grad_norm_sq(f) == pytest.approx(expected, rel=1e-12)


def test_grad_energy_vector_adds_components():
    dom = make_rectangle(1.0, 1.0, 32)
    g = lambda x, y: np.sin(np.pi * (x + 0.5)) * np.sin(2 * np.pi * (y + 0.5))
    s = ScalarField.from_function(dom, g)
    v = VectorField2(dom, s.grid, 2.0 * s.grid)
    assert grad_norm_sq(v) == pytest.approx(5.0 * grad_norm_sq(s), rel=1e-12)


@settings(max_examples=40, deadline=None)
@given(
    width=st.floats(min_value=0.1, max_value=10.0),
    scale=st.integers(min_value=1, max_value=4),
    nx=st.sampled_from([8, 16, 24, 32]),
)
def test_rectangle_measure_is_exact(width, scale, nx):
    # heights that are exact multiples of h keep the area exact
    height = width * scale
    dom = make_rectangle(width, height, nx)
    assert dom.measure == width * height
    assert dom.ny == scale * nx


@settings(max_examples=40, deadline=None)
@given(
    a=st.floats(min_value=-5, max_value=5),
    b=st.floats(min_value=-5, max_value=5),
    seed=st.integers(min_value=0, max_value=2**31),
)
def test_inner_bilinearity(a, b, seed):
    dom = make_rectangle(1.0, 1.0, 8)
    rng = np.random.default_rng(seed)
    n = dom.interior_count
    f = ScalarField.from_interior_values(dom, rng.standard_normal(n))
    g = ScalarField.from_interior_values(dom, rng.standard_normal(n))
    w = ScalarField.from_interior_values(dom, rng.standard_normal(n))
    lin = ScalarField.from_interior_values(dom, a * f.values + b * g.values)
    lhs = inner(lin, w)
    rhs = a * inner(f, w) + b * inner(g, w)
    assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-12)
