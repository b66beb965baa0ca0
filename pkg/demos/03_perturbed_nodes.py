"""
Shifted Chebyshev angles and the closed-form basis
==================================================

On the nodes theta_k - theta0 the library evaluates

    l_k(theta) = (-1)^(k+1) cos(n(theta + theta0)) sin(eta_k) / (n (cos theta - cos eta_k))

This function is 1 at its own node, 0 at the others and factors as
P_k(theta + theta0) S_k(theta) with |S_k| <= 2.  For theta0 != 0 it is not a
polynomial in cos(theta), so the sum over k is no longer 1, and one term of
the Gruenwald sum has a pole inside [0, pi].  This script shows both
effects next to the true Lagrange basis on the same nodes.
"""

import math

import numpy as np
from scipy.interpolate import BarycentricInterpolator

from gruenwald import lebesgue_like, perturbed_angles
from gruenwald.basis import basis_matrix
from gruenwald.grids import half_spacing

theta = np.linspace(0, math.pi, 2001)

print("max |sum_k l_k(theta) - 1| on [0, pi]")
for frac in (0.0, 0.5, 0.9):
    for n in (4, 16, 64):
        grid = perturbed_angles(n, frac * half_spacing(n))
        dev = np.max(np.abs(basis_matrix(grid, theta).sum(axis=1) - 1))
        print(f"  theta0-frac={frac:3.1f}  n={n:3d}  {dev:.3e}")

# Lambda_n near theta = theta0 grows without bound
n = 16
t0 = 0.9 * half_spacing(n)
grid = perturbed_angles(n, t0)
print(f"\nLambda_{n} near theta0 = {t0:.5f}")
for d in (1e-1, 1e-2, 1e-3, 1e-5):
    print(f"  theta0 + {d:.0e}:  {lebesgue_like(grid, t0 + d):.4e}")

# the polynomial basis on the same nodes avoids the pole but grows with n
print("\nmax Lambda_n, theta0-frac 0.9: closed form vs polynomial basis")
for n in (8, 16, 32, 64):
    grid = perturbed_angles(n, 0.9 * half_spacing(n))
    h = half_spacing(n)
    x = grid.cosines
    poly = np.zeros((theta.size, n))
    for k in range(n):
        e = np.zeros(n)
        e[k] = 1.0
        p = BarycentricInterpolator(x, e, rng=np.random.default_rng(0))
        poly[:, k] = p(np.cos(theta - h)) + p(np.cos(theta + h))
    lam_poly = 0.5 * np.abs(poly).sum(axis=1).max()
    lam_trig = np.max(lebesgue_like(grid, theta))
    print(f"  n={n:3d}  closed form {lam_trig:10.4g}   polynomial {lam_poly:8.4g}")
