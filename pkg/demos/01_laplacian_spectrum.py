"""Dirichlet-Laplacian spectrum on the unit square, checked two ways.

The computed eigenvalues are compared against the continuum values
pi^2 (p^2 + q^2) and against the exact spectrum of the 5-point scheme,
then the grid sequence is extrapolated to cancel the O(h^2) error.
"""

import numpy as np

from stokespec import make_rectangle, richardson, solve_laplacian

M = 10

print("Dirichlet Laplacian, unit square")
print("=" * 60)

dom = make_rectangle(1.0, 1.0, 64)
les = solve_laplacian(dom, M, seed=0)

ks = np.arange(1, 30)
continuum = np.sort((np.pi**2 * (ks[:, None] ** 2 + ks[None, :] ** 2)).ravel())[:M]
s = (4.0 / dom.h**2) * np.sin(ks[: dom.nx - 1] * np.pi * dom.h / 2.0) ** 2
discrete = np.sort((s[:, None] + s[None, :]).ravel())[:M]

print(f"{'k':>3} {'computed':>12} {'continuum':>12} {'rel err':>9} {'vs scheme':>10}")
for k in range(M):
    mu = les.eigenvalues[k]
    print(f"{k + 1:>3} {mu:12.5f} {continuum[k]:12.5f} "
          f"{abs(mu - continuum[k]) / continuum[k]:9.2e} "
          f"{abs(mu - discrete[k]) / discrete[k]:10.1e}")

print()
print("grid refinement for mu_1 (exact value 2 pi^2 = %.6f):" % (2 * np.pi**2))
vals = []
for nx in (16, 32, 64):
    v = solve_laplacian(make_rectangle(1.0, 1.0, nx), 1, seed=0).eigenvalues[0]
    vals.append(v)
    print(f"  nx={nx:<4d} mu_1 = {v:.6f}")
ex = richardson(vals)
print(f"  extrapolated: {ex.limit:.6f}  (order {ex.order:.2f}, "
      f"err est {ex.error_estimate:.1e})")
print(f"  true error:   {abs(ex.limit - 2 * np.pi**2):.2e}")
