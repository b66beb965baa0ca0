"""
Gruenwald averaging on Chebyshev nodes
======================================

The Lagrange interpolant L_n on the Chebyshev angles (2k-1)pi/(2n) is
evaluated at theta - pi/(2n) and theta + pi/(2n) and the two values are
averaged.  The resulting operator G_n converges uniformly for every
continuous function.
"""

import math

import numpy as np

from gruenwald import chebyshev_angles, get_function, gruenwald_eval, lebesgue_like, sample
from gruenwald.basis import cheb_matrix
from gruenwald.smoothness import c2_constant

theta = np.linspace(0, math.pi, 2001)

# the fundamental polynomials never exceed 4/pi, even off [0, pi]
wide = np.linspace(-math.pi, 2 * math.pi, 4001)
print("max |P_k| over [-pi, 2pi]")
for n in (1, 4, 16, 64):
    print(f"  n={n:3d}  {np.max(np.abs(cheb_matrix(n, wide))):.6f}   (4/pi = {4 / math.pi:.6f})")

# Lambda_n is the operator's absolute row sum
print("\nmax Lambda_n(theta) against c2 =", round(c2_constant(), 4))
for n in (1, 8, 64, 512):
    print(f"  n={n:3d}  {np.max(lebesgue_like(chebyshev_angles(n), theta)):.6f}")

# |cos| has a kink at pi/2; the sup error still goes to zero
f = get_function("abs_cos")
print("\nsup |G_n f - f| for f = |cos|")
for n in (8, 32, 128, 512):
    grid = chebyshev_angles(n)
    err = np.max(np.abs(gruenwald_eval(sample(f, grid), grid, theta) - f.eval(theta)))
    print(f"  n={n:3d}  {err:.3e}")

# cos is damped by exactly cos(pi/2n)
n = 10
grid = chebyshev_angles(n)
g = gruenwald_eval(np.cos(grid.angles), grid, theta)
print("\nG_10(cos) / cos at theta = 0:", g[0], " cos(pi/20) =", math.cos(math.pi / 20))
