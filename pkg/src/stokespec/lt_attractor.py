"""Density bounds for orthonormal families and attractor dimension estimates.

The spectral density rho(x) = sum_k |u_k(x)|^2 of an L2-orthonormal,
divergence-free planar family satisfies

    ||rho||_L2^2 <= c_density * sum_k ||grad u_k||_L2^2

with the explicit constant c_density = 1/(2 sqrt(3)), obtained as
4 * (pi/sqrt(3)) * (1/(8 pi)): the classical kinetic-energy constant
1/(8 pi) carries a factor pi/sqrt(3) on the way to the density form. In
float64 the product 4 * (pi/sqrt(3)) * (1/(8 pi)) rounds to exactly the
same binary value as 1/(2 sqrt(3)), so the identity can be asserted with
== rather than a tolerance.

Feeding the density bound and the eigenvalue growth lambda_k >=
2 pi k / |Omega| into the standard trace estimate for the forced
Navier-Stokes system bounds the global attractor's fractal dimension by
the positive root m_star of an explicit concave quadratic in m.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .bounds import BoundCheck
from .frame import OrthonormalityError
from .grid import ScalarField, VectorField2, grad_norm_sq, inner

__all__ = [
    "LTConstants",
    "lt_constants",
    "FluidParams",
    "DimBound",
    "density",
    "lt_check",
    "dim_bound",
    "q_upper",
]

LT_SLACK_FRAC = 0.02


@dataclass(frozen=True)
class LTConstants:
    """Explicit constants used by the density and dimension estimates.

    Attributes
    ----------
    classical_coefficient : float
        1/(8 pi), the planar kinetic-energy frame constant.
    density_to_classical_ratio : float
        pi/sqrt(3), the factor connecting the classical constant to the
        density form.
    density_coefficient : float
        1/(2 sqrt(3)) = 4 * ratio * classical, the constant in the
        squared-density bound.
    spectral_coefficient : float
        2 pi, the constant in the per-index eigenvalue lower bound
        lambda_k >= 2 pi k / measure.
    """

    classical_coefficient: float
    density_to_classical_ratio: float
    density_coefficient: float
    spectral_coefficient: float

    def as_dict(self):
        return {
            "classical_coefficient": self.classical_coefficient,
            "density_to_classical_ratio": self.density_to_classical_ratio,
            "density_coefficient": self.density_coefficient,
            "spectral_coefficient": self.spectral_coefficient,
        }


def lt_constants():
    """The constants, with the density coefficient built from its factors."""
    classical = 1.0 / (8.0 * math.pi)
    ratio = math.pi / math.sqrt(3.0)
    return LTConstants(
        classical_coefficient=classical,
        density_to_classical_ratio=ratio,
        density_coefficient=4.0 * ratio * classical,
        spectral_coefficient=2.0 * math.pi,
    )


@dataclass(frozen=True)
class FluidParams:
    """Parameters of the forced flow whose attractor is being bounded.

    nu is the kinematic viscosity, f_norm the L2 norm of the (time
    independent) forcing, lambda1 the smallest Stokes eigenvalue of the
    domain and measure its area.
    """

    nu: float
    f_norm: float
    lambda1: float
    measure: float

    def __post_init__(self):
        for name in ("nu", "f_norm", "lambda1", "measure"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise ValueError("%s must be positive and finite, got %r" % (name, v))

    @property
    def grashof(self):
        """Dimensionless forcing strength f_norm / (nu^2 lambda1)."""
        return self.f_norm / (self.nu**2 * self.lambda1)


@dataclass
class DimBound:
    """Attractor dimension estimate and the quadratic it came from.

    q_coeffs = (a, b) describe the trace majorant q(m) <= -a m^2 + b;
    m_star = sqrt(b/a) is its positive root and the dimension bound.
    dim_bound_coarse eliminates lambda1 through lambda1 >= 2 pi / measure
    and is larger than m_star exactly when lambda1 * measure > 2 pi.
    """

    grashof: float
    m_star: float
    dim_bound: float
    dim_bound_coarse: float
    q_coeffs: tuple
    precondition_ok: bool


def density(family):
    """Pointwise sum of squares of a family of fields, as a ScalarField.

    Integrates to the family size when the family is orthonormal.
    """
    if len(family) == 0:
        raise ValueError("family is empty")
    domain = family[0].domain
    rho = np.zeros_like(family[0].domain.mask, dtype=float)
    for f in family:
        if isinstance(f, VectorField2):
            rho += f.u1**2 + f.u2**2
        elif isinstance(f, ScalarField):
            rho += f.grid**2
        else:
            raise ValueError("expected ScalarField or VectorField2 entries")
    return ScalarField(domain, rho)


def _gram_deviation(family):
    m = len(family)
    G = np.empty((m, m))
    for i in range(m):
        for j in range(i, m):
            G[i, j] = G[j, i] = inner(family[i], family[j])
    return float(np.max(np.abs(G - np.eye(m))))


def lt_check(family, name="density_bound"):
    """Compare ||rho||^2 against the gradient-sum bound for one family.

    Parameters
    ----------
    family : list of VectorField2 or ScalarField
        Orthonormal within 2e-2 (verified; violations raise
        OrthonormalityError).

    Returns
    -------
    BoundCheck
        lhs = ||rho||_L2^2, rhs = c_density * sum_k ||grad u_k||^2,
        margin = rhs - lhs, passed with a 2 percent slack on rhs.
    """
    if len(family) == 0:
        raise ValueError("family is empty")
    dev = _gram_deviation(family)
    if dev > 2e-2:
        raise OrthonormalityError(
            "family Gram deviates from identity by %.3g, above the 2e-2 tolerance"
            % dev)
    c = lt_constants().density_coefficient
    rho = density(family)
    lhs = inner(rho, rho)
    rhs = c * sum(grad_norm_sq(f) for f in family)
    slack = LT_SLACK_FRAC * rhs
    return BoundCheck(
        name=name,
        m=len(family),
        lhs=lhs,
        rhs=rhs,
        margin=rhs - lhs,
        passed=lhs <= rhs + slack,
        slack=slack,
        params={"density_coefficient": c, "gram_deviation": dev},
    )


def dim_bound(params):
    """Attractor dimension bound for the given fluid parameters.

    The m-dimensional volume contraction rate is majorized by
    q(m) <= -a m^2 + b with

        a = nu * c_spectral / (2 * measure)
        b = nu * lambda1 * c_density * G^2 / 4,

    G the Grashof number. The bound is the root m_star = sqrt(b/a)
    = sqrt(c_density / (2 c_spectral)) * sqrt(lambda1 * measure) * G.
    The coarse variant drops the domain-specific lambda1 via
    lambda1 >= 2 pi / measure. When lambda1 * measure <= 2 pi the sharp
    form is not actually sharper; that is reported and warned about, not
    an error.
    """
    consts = lt_constants()
    c_density = consts.density_coefficient
    c_spectral = consts.spectral_coefficient
    G = params.grashof
    a = params.nu * c_spectral / (2.0 * params.measure)
    b = params.nu * params.lambda1 * c_density * G**2 / 4.0
    m_star = math.sqrt(b / a)
    coarse = (math.sqrt(c_density / (2.0 * c_spectral))
              * params.f_norm * params.measure
              / (math.sqrt(2.0 * math.pi) * params.nu**2))
    pre_ok = bool(params.lambda1 * params.measure > 2.0 * math.pi)
    if not pre_ok:
        warnings.warn(
            "lambda1 * measure = %.6g <= 2 pi; the lambda1-aware bound does not "
            "improve on the coarse one" % (params.lambda1 * params.measure),
            stacklevel=2)
    return DimBound(
        grashof=G,
        m_star=m_star,
        dim_bound=m_star,
        dim_bound_coarse=coarse,
        q_coeffs=(a, b),
        precondition_ok=pre_ok,
    )


def q_upper(params, m):
    """Value of the quadratic majorant -a m^2 + b at m.

    Negative exactly when m exceeds the dimension bound; q_upper(2 m_star)
    equals -3 b.
    """
    consts = lt_constants()
    G = params.grashof
    a = params.nu * consts.spectral_coefficient / (2.0 * params.measure)
    b = params.nu * params.lambda1 * consts.density_coefficient * G**2 / 4.0
    return -a * float(m)**2 + b
