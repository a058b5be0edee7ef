"""Closed-form spectral bounds and the extremal mass inequality.

Every evaluator here is pure arithmetic in the dimension n, the domain
measure, and the index, so computed spectra can be tested against them
with explicit constants. Checks against computed eigenvalues carry a
default 1 percent slack, because discrete eigenvalues come with an O(h^2)
error of unknown sign; checks against analytic spectra use zero slack.
"""

import math
from dataclasses import dataclass, field

__all__ = [
    "omega_n",
    "li_yau_sum_bound",
    "stokes_sum_bound",
    "stokes_each_bound",
    "lambda1_floor",
    "weyl_coefficient",
    "bathtub_bound",
    "BoundCheck",
    "check_sum_bound",
]


def omega_n(n):
    """Volume of the unit ball in dimension n.

    Evaluated from exact factorials: for even n = 2k the value is
    pi^k / k!, for odd n = 2k+1 it is pi^k * 4^(k+1) * (k+1)! / (2k+2)!.
    Both come from the half-integer factorial; no special-function
    library is involved.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("dimension must be a positive integer")
    k, odd = divmod(n, 2)
    if not odd:
        return math.pi**k / math.factorial(k)
    return math.pi**k * 4.0**(k + 1) * math.factorial(k + 1) / math.factorial(2 * k + 2)


def _validate(n, measure, m, n_min=1):
    if not isinstance(n, int) or n < n_min:
        raise ValueError("dimension must be an integer >= %d" % n_min)
    if measure <= 0:
        raise ValueError("measure must be positive")
    if m < 1:
        raise ValueError("index must be at least 1")


def li_yau_sum_bound(n, measure, m):
    """Lower bound on the sum of the first m Dirichlet-Laplacian eigenvalues.

    Returns (n/(2+n)) * ((2 pi)^n / (omega_n * measure))^(2/n) * m^(1+2/n).
    At n = 2 and unit measure this is 2 pi m^2.
    """
    _validate(n, measure, m)
    coeff = ((2.0 * math.pi)**n / (omega_n(n) * measure))**(2.0 / n)
    return (n / (2.0 + n)) * coeff * float(m)**(1.0 + 2.0 / n)


def stokes_sum_bound(n, measure, m):
    """Lower bound on the sum of the first m Stokes eigenvalues.

    Same shape as the scalar bound with the measure inflated by (n-1),
    reflecting the loss of one velocity component to incompressibility.
    Requires n >= 2.
    """
    _validate(n, measure, m, n_min=2)
    coeff = ((2.0 * math.pi)**n / (omega_n(n) * (n - 1) * measure))**(2.0 / n)
    return (n / (2.0 + n)) * coeff * float(m)**(1.0 + 2.0 / n)


def stokes_each_bound(n, measure, k):
    """Lower bound on the k-th Stokes eigenvalue individually."""
    _validate(n, measure, k, n_min=2)
    coeff = ((2.0 * math.pi)**n / (omega_n(n) * (n - 1) * measure))**(2.0 / n)
    return (n / (2.0 + n)) * coeff * float(k)**(2.0 / n)


def lambda1_floor(n, measure):
    """Floor below the first Stokes eigenvalue: the scalar m = 1 bound.

    The first Stokes eigenvalue strictly exceeds the first Dirichlet
    eigenvalue, which in turn is at least this value; the strict gap
    itself is asserted against computed spectra by the check harness.
    """
    _validate(n, measure, 1)
    coeff = ((2.0 * math.pi)**n / (omega_n(n) * measure))**(2.0 / n)
    return (n / (2.0 + n)) * coeff


def weyl_coefficient(n, measure):
    """Leading coefficient of the Stokes eigenvalue growth law.

    The k-th eigenvalue grows like this coefficient times k^(2/n). At
    n = 2 the coefficient is 4 pi / measure, the same as for the scalar
    Dirichlet problem, so the diagnostic ratio applies to both spectra.
    """
    _validate(n, measure, 1, n_min=2)
    return ((2.0 * math.pi)**n / (omega_n(n) * (n - 1) * measure))**(2.0 / n)


def bathtub_bound(n, M1, M2):
    """Upper bound on the total mass of a density with capped height and
    capped second moment.

    A nonnegative f with sup f <= M1 and integral of |x|^2 f(x) <= M2
    has total mass at most (M1 omega_n)^(2/(2+n)) * (M2 (2+n)/n)^(n/(2+n)),
    with equality exactly for multiples of ball indicators.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("dimension must be a positive integer")
    if M1 <= 0 or M2 <= 0:
        raise ValueError("both caps must be positive")
    return (M1 * omega_n(n))**(2.0 / (2.0 + n)) * (M2 * (2.0 + n) / n)**(n / (2.0 + n))


@dataclass
class BoundCheck:
    """Outcome of one inequality instance against a computed quantity.

    margin is the signed distance to the bound in the satisfying
    direction: lhs - rhs for lower bounds, rhs - lhs for upper bounds,
    so nonnegative always means the inequality holds. passed is margin
    >= -slack with the absolute slack stored alongside.
    """

    name: str
    m: int
    lhs: float
    rhs: float
    margin: float
    passed: bool
    slack: float
    params: object = field(default=())

    def row(self):
        """CSV row in the order name,m,lhs,rhs,margin,passed."""
        return [self.name, self.m, repr(self.lhs), repr(self.rhs),
                repr(self.margin), self.passed]


def check_sum_bound(spectrum, bound_fn, n, measure, slack_frac=0.01, name=None):
    """Check partial sums of a spectrum against a lower-bound evaluator.

    Parameters
    ----------
    spectrum : sequence of float
        Nondecreasing eigenvalues.
    bound_fn : callable
        One of the sum-bound evaluators, called as bound_fn(n, measure, m).
    n, measure : int, float
        Parameters forwarded to the evaluator.
    slack_frac : float
        Fraction of the bound tolerated below it; use 0 for analytic
        spectra and the default 0.01 for computed ones.
    name : str, optional
        Label stored on each record; defaults to the evaluator name.

    Returns
    -------
    list of BoundCheck
        One record per partial sum, m = 1 .. len(spectrum).
    """
    vals = [float(v) for v in spectrum]
    if any(b < a for a, b in zip(vals, vals[1:])):
        raise ValueError("spectrum must be nondecreasing")
    label = name or getattr(bound_fn, "__name__", "sum_bound")
    out = []
    running = 0.0
    for m, v in enumerate(vals, start=1):
        running += v
        rhs = bound_fn(n, measure, m)
        slack = slack_frac * rhs
        margin = running - rhs
        out.append(BoundCheck(name=label, m=m, lhs=running, rhs=rhs,
                              margin=margin, passed=margin >= -slack,
                              slack=slack, params=(n, measure)))
    return out
