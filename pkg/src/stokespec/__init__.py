"""Spectra of the Dirichlet Laplacian and the planar Stokes operator on
gridded domains, with executable checks of the classical eigenvalue-sum,
frame, density and attractor-dimension inequalities at their explicit
constants.
"""

from .bounds import (
    BoundCheck,
    bathtub_bound,
    check_sum_bound,
    lambda1_floor,
    li_yau_sum_bound,
    omega_n,
    stokes_each_bound,
    stokes_sum_bound,
    weyl_coefficient,
)
from .eig import (
    ConvergenceError,
    EigenPair,
    IndefiniteMatrixError,
    RankDeficiencyError,
    SparseSym,
    b_orthonormalize,
    smallest_eigenpairs,
)
from .frame import (
    FrameReport,
    OrthonormalityError,
    fourier_at,
    frame_check,
    gram_max_eigenvalue,
    make_xi_grid,
    project_component,
    rotate90,
)
from .grid import (
    GriddedDomain,
    ScalarField,
    VectorField2,
    grad_norm_sq,
    inner,
    make_disk,
    make_rectangle,
)
from .lt_attractor import (
    DimBound,
    FluidParams,
    LTConstants,
    density,
    dim_bound,
    lt_check,
    lt_constants,
    q_upper,
)
from .operators import (
    LaplacianEigenSet,
    StokesEigenSet,
    assemble_laplacian,
    assemble_stokes_pencil,
    richardson,
    solve_laplacian,
    solve_stokes,
    stream_to_velocity,
)

__version__ = "1.0.0"

__all__ = [
    "BoundCheck", "bathtub_bound", "check_sum_bound", "lambda1_floor",
    "li_yau_sum_bound", "omega_n", "stokes_each_bound", "stokes_sum_bound",
    "weyl_coefficient",
    "ConvergenceError", "EigenPair", "IndefiniteMatrixError",
    "RankDeficiencyError", "SparseSym", "b_orthonormalize",
    "smallest_eigenpairs",
    "FrameReport", "OrthonormalityError", "fourier_at", "frame_check",
    "gram_max_eigenvalue", "make_xi_grid", "project_component", "rotate90",
    "GriddedDomain", "ScalarField", "VectorField2", "grad_norm_sq", "inner",
    "make_disk", "make_rectangle",
    "DimBound", "FluidParams", "LTConstants", "density", "dim_bound",
    "lt_check", "lt_constants", "q_upper",
    "LaplacianEigenSet", "StokesEigenSet", "assemble_laplacian",
    "assemble_stokes_pencil", "richardson", "solve_laplacian", "solve_stokes",
    "stream_to_velocity",
    "__version__",
]
