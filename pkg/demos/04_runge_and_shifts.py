"""
Runge's function, equispaced nodes and per-node shifts
======================================================

Plain Lagrange interpolation of 1/(1 + 25 x^2) at equispaced x diverges;
Gruenwald averaging on Chebyshev angles converges.  The last table uses a
different small shift at every node.  The last node's phase puts a pole
of the averaged sum at theta = pi - s_n, so the sup over [0, pi] stalls
near 1 while the error on [0.1, pi - 0.1] keeps falling.
"""

import math

import numpy as np

from gruenwald import experiments as ex
from gruenwald import generalized_gruenwald_eval, get_function, per_node_shift_angles, sample

print("    n   equispaced Lagrange   Chebyshev G_n")
for row in ex.runge_contrast([4, 12, 24, 48]):
    print(f"  {row.n:3d}   {row.lagrange_equidistant_error:18.4g}   {row.gruenwald_chebyshev_error:13.4g}")

# increasing shifts s_k inside (-pi/2n, pi/2n)
f = get_function("runge_cos")
theta = np.linspace(0, math.pi, 2001)
inner = (theta > 0.1) & (theta < math.pi - 0.1)
print("\nper-node shifts s_k = linspace(-pi/4n, pi/4n)")
print("    n   sup on [0, pi]   sup on [0.1, pi-0.1]")
for n in (16, 64, 256):
    grid = per_node_shift_angles(n, np.linspace(-math.pi / (4 * n), math.pi / (4 * n), n))
    err = np.abs(generalized_gruenwald_eval(sample(f, grid), grid, theta) - f.eval(theta))
    print(f"  {n:3d}   {err.max():14.3e}   {err[inner].max():20.3e}")
