"""
Convergence rates against the modulus-of-continuity bound
=========================================================

The error of G_n is controlled by (c2 + 1) * omega(f, mu_n).  For smooth
functions the finite-n quantity n^(1/3) |G_n f(theta) - f(theta)| is also
bounded by a combination of |f'|, |f''| and sup |f''|.
"""

import math

from gruenwald import experiments as ex

ns = [8, 16, 32, 64, 128, 256, 512]
for name in ("abs_cos", "hat", "runge_cos", "sin3"):
    table = ex.convergence_study(name, n_list=ns)
    print(f"\n{name}")
    print("     n    sup_error    rate    bound")
    for row in table.rows:
        rate = "" if row.observed_rate is None else f"{row.observed_rate:6.2f}"
        print(f"  {row.n:4d}  {row.sup_error:10.3e}  {rate:>6}  {row.bound:8.3f}")

# the bound is far from tight at desk-scale n because mu_n > pi
print("\nVoronovskaja-type proxy for runge_cos at theta = pi/4")
for r in ex.voronovskaja_study("runge_cos", [math.pi / 4], [8, 64, 512]):
    print(f"  n={r.n:4d}  scaled={r.scaled_error:.3e}  bound={r.bound:.1f}")
