"""Uniform-grid planar domains and the discrete fields living on them.

A domain is an axis-aligned box of (nx+1) x (ny+1) lattice nodes with
spacing h, centered at the origin, plus a boolean mask marking the nodes
that lie inside the open region. Fields are stored as full-grid arrays
that vanish outside their support, so discrete integrals reduce to plain
weighted sums over the array; extension by zero beyond the box is always
understood. All inner products carry the quadrature weight h^2.
"""

import numpy as np

__all__ = [
    "GriddedDomain",
    "ScalarField",
    "VectorField2",
    "make_rectangle",
    "make_disk",
    "inner",
    "grad_norm_sq",
]


class GriddedDomain:
    """Open planar region sampled on a uniform grid.

    Attributes
    ----------
    nx, ny : int
        Cell counts along each axis; the node grid is (nx+1) x (ny+1).
    h : float
        Grid spacing, identical in both directions.
    mask : ndarray of bool, shape (nx+1, ny+1)
        True at nodes interior to the region.
    measure : float
        Area of the region. Exact width*height for rectangles, interior
        node count times h^2 for masked shapes.
    shape_name : str
        "rectangle" or "disk", echoed into reports.
    params : dict
        Construction parameters, echoed into reports.
    """

    def __init__(self, nx, ny, h, mask, measure, shape_name, params):
        if h <= 0:
            raise ValueError("grid spacing must be positive")
        if measure <= 0:
            raise ValueError("domain measure must be positive")
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (nx + 1, ny + 1):
            raise ValueError("mask shape does not match grid extents")
        # interior nodes may not touch the outer node ring of the box
        if mask[0, :].any() or mask[-1, :].any() or mask[:, 0].any() or mask[:, -1].any():
            raise ValueError("interior nodes must stay off the bounding-box edge")
        self.nx = int(nx)
        self.ny = int(ny)
        self.h = float(h)
        self.mask = mask
        self.measure = float(measure)
        self.shape_name = shape_name
        self.params = dict(params)

    @property
    def interior_count(self):
        """Number of interior nodes."""
        return int(self.mask.sum())

    def node_xs(self):
        """x coordinates of the node columns, centered at the origin."""
        return (np.arange(self.nx + 1) - self.nx / 2.0) * self.h

    def node_ys(self):
        """y coordinates of the node rows, centered at the origin."""
        return (np.arange(self.ny + 1) - self.ny / 2.0) * self.h

    def node_coords(self):
        """Full coordinate meshes X, Y with indexing (i, j) -> (x_i, y_j)."""
        return np.meshgrid(self.node_xs(), self.node_ys(), indexing="ij")

    def spec(self):
        """JSON-ready description of the domain."""
        out = {"shape": self.shape_name, "nx": self.nx}
        out.update(self.params)
        out["measure"] = self.measure
        return out

    def __repr__(self):
        return "GriddedDomain(%s, nx=%d, ny=%d, h=%g, |Omega|=%g)" % (
            self.shape_name, self.nx, self.ny, self.h, self.measure)


class ScalarField:
    """Real scalar field on a domain, stored on the full node grid.

    The grid array is zero off the field's support. `values` exposes the
    interior-node entries in mask order, which is what eigensolvers and
    serialization work with.
    """

    def __init__(self, domain, grid):
        grid = np.asarray(grid, dtype=float)
        if grid.shape != domain.mask.shape:
            raise ValueError("field grid shape does not match the domain")
        self.domain = domain
        self.grid = grid

    @classmethod
    def from_interior_values(cls, domain, values):
        values = np.asarray(values, dtype=float)
        if values.shape != (domain.interior_count,):
            raise ValueError("expected one value per interior node")
        grid = np.zeros(domain.mask.shape)
        grid[domain.mask] = values
        return cls(domain, grid)

    @classmethod
    def from_function(cls, domain, fn):
        """Sample fn(x, y) at interior nodes, zero elsewhere."""
        X, Y = domain.node_coords()
        grid = np.zeros(domain.mask.shape)
        grid[domain.mask] = fn(X[domain.mask], Y[domain.mask])
        return cls(domain, grid)

    @property
    def values(self):
        return self.grid[self.domain.mask]


class VectorField2:
    """Planar vector field on a domain, components stored on the full grid.

    Curl-derived velocities keep the one-node ring just outside the mask
    where the centered difference of the zero-extended stream function is
    nonzero; dropping that ring would break the discrete incompressibility
    identity. Everything downstream works on the grid arrays directly.
    """

    def __init__(self, domain, u1, u2):
        u1 = np.asarray(u1, dtype=float)
        u2 = np.asarray(u2, dtype=float)
        if u1.shape != domain.mask.shape or u2.shape != domain.mask.shape:
            raise ValueError("component grid shape does not match the domain")
        self.domain = domain
        self.u1 = u1
        self.u2 = u2

    @classmethod
    def from_interior_values(cls, domain, v1, v2):
        a = ScalarField.from_interior_values(domain, v1)
        b = ScalarField.from_interior_values(domain, v2)
        return cls(domain, a.grid, b.grid)


def make_rectangle(width, height, nx):
    """Rectangular domain (-width/2, width/2) x (-height/2, height/2).

    Parameters
    ----------
    width, height : float
        Side lengths, positive.
    nx : int
        Cell count along x; sets h = width/nx. The height must be an
        integer multiple of h so the grid is uniform in both directions.

    Returns
    -------
    GriddedDomain
        measure equals width*height exactly.
    """
    if width <= 0 or height <= 0:
        raise ValueError("rectangle sides must be positive")
    if nx < 8:
        raise ValueError("nx must be at least 8")
    nx = int(nx)
    h = width / nx
    ny_exact = height / h
    ny = round(ny_exact)
    if ny < 8 or abs(ny - ny_exact) > 1e-8 * max(1.0, ny_exact):
        raise ValueError("height must be an integer multiple (>= 8) of h = width/nx")
    mask = np.zeros((nx + 1, ny + 1), dtype=bool)
    mask[1:nx, 1:ny] = True
    return GriddedDomain(nx, ny, h, mask, width * height, "rectangle",
                         {"width": float(width), "height": float(height)})


def make_disk(radius, nx):
    """Disk of the given radius centered at the origin, staircase boundary.

    The mask keeps nodes with |x| < radius strictly; the measure is the
    interior node count times h^2, which approaches pi*radius^2 under
    refinement but is reported as is.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    if nx < 8:
        raise ValueError("nx must be at least 8")
    nx = int(nx)
    h = 2.0 * radius / nx
    xs = (np.arange(nx + 1) - nx / 2.0) * h
    X, Y = np.meshgrid(xs, xs, indexing="ij")
    mask = X**2 + Y**2 < radius**2
    # keep the outer node ring clear for the curl support
    mask[0, :] = mask[-1, :] = mask[:, 0] = mask[:, -1] = False
    measure = float(mask.sum()) * h**2
    if measure <= 0:
        raise ValueError("disk mask is empty at this resolution")
    return GriddedDomain(nx, nx, h, mask, measure, "disk", {"radius": float(radius)})


def _check_same_domain(a, b):
    if a.domain is not b.domain:
        d1, d2 = a.domain, b.domain
        same = (d1.shape_name == d2.shape_name and d1.nx == d2.nx
                and d1.ny == d2.ny and d1.h == d2.h and np.array_equal(d1.mask, d2.mask))
        if not same:
            raise ValueError("fields live on different domains")


def inner(a, b):
    """Discrete L2 inner product with weight h^2.

    Both arguments must be fields of the same kind on the same domain.
    For vector fields the product sums over both components.
    """
    _check_same_domain(a, b)
    h2 = a.domain.h**2
    if isinstance(a, ScalarField) and isinstance(b, ScalarField):
        return h2 * float(np.dot(a.grid.ravel(), b.grid.ravel()))
    if isinstance(a, VectorField2) and isinstance(b, VectorField2):
        return h2 * float(np.dot(a.u1.ravel(), b.u1.ravel())
                          + np.dot(a.u2.ravel(), b.u2.ravel()))
    raise ValueError("cannot mix scalar and vector fields")


def _grad_energy(grid):
    # forward differences against the zero extension, so edges leaving the
    # support contribute the squared node value
    p = np.pad(grid, 1)
    return float(np.sum((p[1:, :] - p[:-1, :])**2) + np.sum((p[:, 1:] - p[:, :-1])**2))


def grad_norm_sq(f):
    """Squared discrete H1 seminorm, forward differences, zero extension.

    For a ScalarField this is sum over grid edges of (f_a - f_b)^2, which
    equals h^2 * v'Av for the 5-point Dirichlet matrix A on the same mask.
    For a VectorField2 the two components are summed.
    """
    if isinstance(f, ScalarField):
        return _grad_energy(f.grid)
    if isinstance(f, VectorField2):
        return _grad_energy(f.u1) + _grad_energy(f.u2)
    raise ValueError("expected a ScalarField or VectorField2")
