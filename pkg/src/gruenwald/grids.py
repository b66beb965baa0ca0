"""Node families in angle space.

All grids store the angles ``eta_k`` (0-based arrays, increasing) of the
nodes ``x_k = cos(eta_k)``; cosines are computed on demand.  Index ``k`` in
the formulas of the library is ``array index + 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import (
    InvalidArgumentError,
    InvalidConstructionError,
    InvalidShiftsError,
    OutOfRangeShiftError,
)

CHEBYSHEV = "chebyshev"
PERTURBED = "perturbed"
PER_NODE_SHIFT = "per_node_shift"

FAMILIES = (CHEBYSHEV, PERTURBED, PER_NODE_SHIFT)


@dataclass(frozen=True, eq=False)
class AngleGrid:
    """An immutable node family.

    ``theta0`` is the global shift of the ``perturbed`` family (nodes
    ``theta_k - theta0``); it is 0 for ``chebyshev``.  ``shifts`` holds the
    per-node offsets ``s_k`` of the ``per_node_shift`` family (nodes
    ``theta_k + s_k``).
    """

    n: int
    angles: np.ndarray
    family: str
    theta0: float = 0.0
    shifts: Optional[np.ndarray] = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.angles.setflags(write=False)
        if self.shifts is not None:
            self.shifts.setflags(write=False)

    @property
    def cosines(self) -> np.ndarray:
        return np.cos(self.angles)

    @property
    def chebyshev_reference(self) -> np.ndarray:
        """The unperturbed angles (2k-1)pi/(2n)."""
        return _cheb(self.n)

    @property
    def phases(self) -> np.ndarray:
        """Per-node phase ``phi_k`` with nodes solving ``cos(n(theta + phi_k)) = 0``."""
        if self.family == PER_NODE_SHIFT:
            return -self.shifts
        return np.full(self.n, self.theta0)

    def __eq__(self, other):
        if not isinstance(other, AngleGrid):
            return NotImplemented
        return (
            self.n == other.n
            and self.family == other.family
            and self.theta0 == other.theta0
            and np.array_equal(self.angles, other.angles)
        )

    def __hash__(self):
        return hash((self.n, self.family, self.theta0, self.angles.tobytes()))


def _check_n(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidArgumentError(f"n must be a positive integer, got {n!r}")
    return int(n)


def _cheb(n: int) -> np.ndarray:
    k = np.arange(1, n + 1)
    return (2 * k - 1) * math.pi / (2 * n)


def half_spacing(n: int) -> float:
    """pi/(2n): the admissible shift radius and the Gruenwald offset."""
    return math.pi / (2 * n)


def chebyshev_angles(n: int) -> AngleGrid:
    n = _check_n(n)
    return AngleGrid(n=n, angles=_cheb(n), family=CHEBYSHEV)


def perturbed_angles(n: int, theta0: float) -> AngleGrid:
    n = _check_n(n)
    theta0 = float(theta0)
    if not abs(theta0) < half_spacing(n):
        raise OutOfRangeShiftError(
            f"|theta0| = {abs(theta0)!r} must be < pi/(2n) = {half_spacing(n)!r}"
        )
    return AngleGrid(n=n, angles=_cheb(n) - theta0, family=PERTURBED, theta0=theta0)


def equidistant_shifted_angles(n: int, eta0: float, beta: float) -> AngleGrid:
    """Nodes ``eta_i + i*beta = eta0 + i*pi/n`` built from equidistant points.

    The original points ``eta_i = eta0 + i(pi/n - beta)`` have spacing
    ``pi/n - beta``; shifting the i-th one by ``i*beta`` restores spacing
    ``pi/n``.  The result coincides with a global shift
    ``theta0 = pi/(2n) - eta0`` of the Chebyshev angles.  The closed endpoints
    ``eta0 = 0`` and ``eta0 = pi/n`` are admitted; they put a node at 1 or -1.
    """
    n = _check_n(n)
    if n < 2:
        raise InvalidConstructionError("equidistant construction needs n >= 2")
    step = math.pi / n
    if not 0.0 <= eta0 <= step:
        raise InvalidConstructionError(f"eta0 must lie in [0, pi/n], got {eta0!r}")
    if not 0.0 <= beta < step:
        raise InvalidConstructionError(f"beta must lie in [0, pi/n), got {beta!r}")
    angles = eta0 + np.arange(n) * step
    return AngleGrid(
        n=n,
        angles=angles,
        family=PERTURBED,
        theta0=float(half_spacing(n) - eta0),
        meta={"eta0": float(eta0), "beta": float(beta)},
    )


def per_node_shift_angles(n: int, shifts) -> AngleGrid:
    n = _check_n(n)
    shifts = np.array(shifts, dtype=float).reshape(-1)
    if shifts.size != n:
        raise InvalidShiftsError(f"expected {n} shifts, got {shifts.size}")
    if n > 1 and not np.all(np.diff(shifts) > 0):
        raise InvalidShiftsError("shifts must be strictly increasing")
    if not np.all(np.abs(shifts) < half_spacing(n)):
        raise InvalidShiftsError("every shift must lie in (-pi/(2n), pi/(2n))")
    return AngleGrid(
        n=n, angles=_cheb(n) + shifts, family=PER_NODE_SHIFT, shifts=shifts
    )


def make_grid(
    family: str,
    n: int,
    *,
    theta0_frac: float = 0.0,
    eta0_frac: float = 0.5,
    beta_frac: float = 0.0,
    shifts_frac: float = 0.5,
    shifts=None,
) -> AngleGrid:
    """Build a grid from n-independent parameters.

    Fractions are relative to the admissible radius at this ``n``:
    ``theta0 = theta0_frac * pi/(2n)``, ``eta0 = eta0_frac * pi/n``,
    ``beta = beta_frac * pi/n``.  For ``per-node-shift`` without explicit
    ``shifts``, the shifts are ``linspace(-a, a, n)`` with
    ``a = shifts_frac * pi/(2n)``.
    """
    family = family.replace("-", "_")
    if family == CHEBYSHEV:
        return chebyshev_angles(n)
    if family == PERTURBED:
        if not abs(theta0_frac) < 1:
            raise OutOfRangeShiftError(f"|theta0_frac| must be < 1, got {theta0_frac!r}")
        return perturbed_angles(n, theta0_frac * half_spacing(n))
    if family == "equidistant_shifted":
        return equidistant_shifted_angles(
            n, eta0_frac * math.pi / n, beta_frac * math.pi / n
        )
    if family == PER_NODE_SHIFT:
        if shifts is None:
            if not 0 < shifts_frac < 1:
                raise InvalidShiftsError("shifts_frac must lie in (0, 1)")
            a = shifts_frac * half_spacing(n)
            shifts = np.linspace(-a, a, n) if n > 1 else np.zeros(1)
        return per_node_shift_angles(n, shifts)
    raise InvalidArgumentError(f"unknown family {family!r}")


def uniform_spacing_deviation(points, interval) -> float:
    """Literal sum ``sum_i | |I|/m - (p_i - p_{i-1}) |`` over the m gaps."""
    p = np.asarray(points, dtype=float)
    a, b = map(float, interval)
    if p.ndim != 1 or p.size < 2:
        raise InvalidArgumentError("need at least two points")
    gaps = np.diff(p)
    if np.any(gaps < 0):
        raise InvalidArgumentError("points must be sorted ascending")
    if p[0] < a or p[-1] > b:
        raise InvalidArgumentError("points must lie inside the interval")
    m = gaps.size
    return math.fsum(np.abs((b - a) / m - gaps))
