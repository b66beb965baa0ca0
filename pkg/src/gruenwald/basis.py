"""Trigonometric closed forms of the fundamental polynomials.

Every family shares one kernel::

    B_k(theta) = (-1)**(k+1) * cos(n*(theta + phi_k)) * sin(eta_k)
                 / (n * (cos(theta) - cos(eta_k)))

with node angle ``eta_k`` and phase ``phi_k`` chosen so that
``cos(n*(eta_k + phi_k)) = 0``:

=====================  ==================  =============
family                 eta_k               phi_k
=====================  ==================  =============
Chebyshev ``P_k``      theta_k             0
perturbed ``l_k``      theta_k - theta0    theta0
per-node ``Pt_k``      theta_k + s_k       -s_k
=====================  ==================  =============

Denominators go through :func:`stable_cos_diff`.  Within ``SINGULAR_TAU`` of
a zero of the denominator the quotient is replaced by its l'Hopital limit
``sign * sin(n*(theta + phi_k)) * sin(eta_k) / sin(theta)``, but only where
the numerator vanishes too.  Where it does not (mirror points
``theta = -eta_k mod 2pi`` whenever ``phi_k != 0``) the formula has a genuine
pole: array kernels return a signed ``inf`` there and the scalar API raises
:class:`SingularEvaluationError`.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import InvalidArgumentError, OutOfRangeShiftError, SingularEvaluationError
from .grids import AngleGrid, half_spacing, per_node_shift_angles

SINGULAR_TAU = 1e-9
S_FACTOR_FLOOR = 1e-14


class BasisValue(NamedTuple):
    value: float
    near_singular: bool


def stable_cos_diff(a, b):
    """``cos(a) - cos(b)`` as ``-2 sin((a+b)/2) sin((a-b)/2)``."""
    return -2.0 * np.sin(0.5 * (a + b)) * np.sin(0.5 * (a - b))


def _alternating_sign(k):
    return np.where(np.asarray(k) % 2 == 1, 1.0, -1.0)


def trig_kernel(theta, eta, phase, sign, n: int):
    """Evaluate the shared kernel with broadcasting.

    ``theta`` may be shaped ``(m, 1)`` against per-node ``(1, n)`` arrays;
    factors that depend on only one side are computed on that side alone.
    Returns ``(values, near_singular, pole)`` arrays.
    """
    theta = np.asarray(theta, dtype=float)
    eta = np.asarray(eta, dtype=float)
    arg = n * (theta + np.asarray(phase, dtype=float))
    cos_arg = np.cos(arg)
    sin_eta = np.sin(eta)
    d_minus = np.sin(0.5 * (theta - eta))
    d_plus = np.sin(0.5 * (theta + eta))
    num = (np.asarray(sign, dtype=float) * sin_eta) * cos_arg
    den = d_plus * d_minus
    den *= -2.0 * n
    with np.errstate(divide="ignore", invalid="ignore"):
        values = num / den

    at_node = np.abs(d_minus) < SINGULAR_TAU
    at_mirror = np.abs(d_plus) < SINGULAR_TAU
    near = at_node | at_mirror
    pole = np.zeros(values.shape, dtype=bool)
    if near.any():
        cos_arg, sin_arg = np.broadcast_arrays(cos_arg, np.sin(arg), values)[:2]
        # numerator is O(n * distance) near a removable zero
        removable = near & (np.abs(cos_arg) <= 10.0 * n * SINGULAR_TAU)
        # sin(eta)/sin(theta) -> +1 at theta = eta, -1 at theta = -eta (mod 2pi)
        ratio = np.where(at_node, 1.0, -1.0)
        limit = np.asarray(sign, dtype=float) * sin_arg * ratio
        pole = near & ~removable
        values = np.where(removable, limit, values)
        values = np.where(pole, np.copysign(np.inf, num), values)
    degenerate = np.abs(sin_eta) < 1e-15
    if np.any(degenerate):
        # a node at x = 1 or x = -1: the formula vanishes identically
        degenerate = np.broadcast_to(degenerate, values.shape)
        values = np.where(degenerate, 0.0, values)
        pole = pole & ~degenerate
    return values, near, pole


def _check_k(n: int, k: int) -> int:
    if isinstance(k, bool) or int(k) != k or not 1 <= k <= n:
        raise InvalidArgumentError(f"k must lie in 1..{n}, got {k!r}")
    return int(k)


def _check_theta0(n: int, theta0: float) -> float:
    if not abs(theta0) < half_spacing(n):
        raise OutOfRangeShiftError(f"|theta0| must be < pi/(2n) for n={n}")
    return float(theta0)


def _scalar(n, k, theta, eta, phase) -> BasisValue:
    sign = 1.0 if k % 2 == 1 else -1.0
    v, near, pole = trig_kernel(theta, eta, phase, sign, n)
    if pole:
        raise SingularEvaluationError(
            f"k={k}: theta={theta!r} is a pole of the trigonometric formula"
        )
    return BasisValue(float(v), bool(near))


def cheb_fundamental(n: int, k: int, theta: float) -> BasisValue:
    """``P_k(theta)`` on the Chebyshev angles, valid for any real theta."""
    k = _check_k(n, k)
    eta = (2 * k - 1) * math.pi / (2 * n)
    return _scalar(n, k, float(theta), eta, 0.0)


def perturbed_fundamental(n: int, k: int, theta: float, theta0: float) -> BasisValue:
    """``l_k(theta)`` on the nodes ``theta_k - theta0``, evaluated directly."""
    k = _check_k(n, k)
    theta0 = _check_theta0(n, theta0)
    eta = (2 * k - 1) * math.pi / (2 * n) - theta0
    return _scalar(n, k, float(theta), eta, theta0)


def generalized_fundamental(n: int, k: int, theta: float, shifts) -> BasisValue:
    """Per-node-shift basis ``Pt_k`` with numerator ``cos(n(theta - s_k))``."""
    grid = per_node_shift_angles(n, shifts)
    k = _check_k(n, k)
    return _scalar(n, k, float(theta), grid.angles[k - 1], grid.phases[k - 1])


def s_factor(n: int, k: int, theta: float, theta0: float) -> BasisValue:
    """Correction factor ``S_k`` with ``l_k(theta) = P_k(theta + theta0) S_k(theta)``."""
    k = _check_k(n, k)
    theta0 = _check_theta0(n, theta0)
    v = s_factor_array(n, np.array([k]), np.array([float(theta)]), theta0)[0]
    if not np.isfinite(v):
        raise SingularEvaluationError(f"S_{k} denominator vanishes at theta={theta!r}")
    return BasisValue(float(v), False)


def s_factor_array(n: int, k, theta, theta0: float) -> np.ndarray:
    """Broadcasting version of :func:`s_factor`; ``inf`` where the denominator vanishes."""
    tk = (2 * np.asarray(k) - 1) * math.pi / (2 * n)
    theta = np.asarray(theta, dtype=float)
    num = np.sin(tk - theta0) * np.sin(0.5 * (theta + tk + theta0))
    den_sin = np.sin(0.5 * (theta + tk - theta0))
    den = np.sin(tk) * den_sin
    with np.errstate(divide="ignore", invalid="ignore"):
        out = num / den
    return np.where(np.abs(den_sin) < S_FACTOR_FLOOR, np.copysign(np.inf, num), out)


def basis_matrix(grid: AngleGrid, theta) -> np.ndarray:
    """Matrix ``B[i, k-1]`` of the grid's basis functions at ``theta[i]``.

    Uses the perturbed/Chebyshev form for those families and ``Pt_k`` for
    per-node-shift grids.  Genuine poles appear as ``inf``.
    """
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    k = np.arange(1, grid.n + 1)
    values, _, _ = trig_kernel(
        theta[:, None],
        grid.angles[None, :],
        grid.phases[None, :],
        _alternating_sign(k)[None, :],
        grid.n,
    )
    return values


def cheb_matrix(n: int, theta) -> np.ndarray:
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    k = np.arange(1, n + 1)
    eta = (2 * k - 1) * math.pi / (2 * n)
    values, _, _ = trig_kernel(
        theta[:, None], eta[None, :], 0.0, _alternating_sign(k)[None, :], n
    )
    return values


def basis_column(grid: AngleGrid, k: int, theta):
    """Values and limit-branch flags of the k-th basis function of ``grid``."""
    k = _check_k(grid.n, k)
    sign = 1.0 if k % 2 == 1 else -1.0
    values, near, _ = trig_kernel(
        np.asarray(theta, dtype=float), grid.angles[k - 1], grid.phases[k - 1], sign, grid.n
    )
    return values, near
