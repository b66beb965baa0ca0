"""Gruenwald interpolation operators on Chebyshev and perturbed Chebyshev nodes.

The Gruenwald operator averages the Lagrange interpolant at
``theta - pi/(2n)`` and ``theta + pi/(2n)``::

    G_n(f)(theta) = 1/2 sum_k f(eta_k) [l_k(theta - pi/2n) + l_k(theta + pi/2n)]

Submodules:

``grids``        node families in angle space
``basis``        trigonometric closed forms of the fundamental polynomials
``operators``    L_n, G_n, the per-node-shift variant, Lambda_n, far-node estimate
``functions``    registry of test functions with analytic side information
``smoothness``   c2, mu_n, modulus of continuity, Voronovskaja-type bound
``experiments``  bound sweeps and convergence studies
``reporting``    CSV / JSON output
``cli``          command-line front end (``python -m gruenwald``)
"""

__version__ = "0.1.0"

from .basis import (
    BasisValue,
    cheb_fundamental,
    generalized_fundamental,
    perturbed_fundamental,
    s_factor,
    stable_cos_diff,
)
from .functions import FunctionSpec, function_names, get_function
from .grids import (
    AngleGrid,
    chebyshev_angles,
    equidistant_shifted_angles,
    make_grid,
    per_node_shift_angles,
    perturbed_angles,
    uniform_spacing_deviation,
)
from .operators import (
    OperatorKind,
    SampleVector,
    far_node_bound,
    generalized_gruenwald_eval,
    gruenwald_eval,
    lagrange_eval,
    lebesgue_like,
    sample,
)
from .smoothness import (
    RateConstants,
    c2_constant,
    epsilon_n,
    modulus_estimate,
    mu_n,
    rate_constants,
    voronovskaja_bound,
)
