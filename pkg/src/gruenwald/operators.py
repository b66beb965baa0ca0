"""Lagrange, Gruenwald and generalized Gruenwald operators.

Operators accept a scalar or an array of evaluation angles and return a
float or an array accordingly.  The Gruenwald operators evaluate the basis
at ``theta -+ pi/(2n)``, which leaves [0, pi] near the endpoints; the
trigonometric formulas are used there as they stand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .basis import basis_matrix
from .errors import (
    InvalidArgumentError,
    InvalidFunctionError,
    InvalidKappaError,
    InvalidOperatorGridError,
    OutOfDomainError,
)
from .functions import FunctionSpec
from .grids import CHEBYSHEV, PER_NODE_SHIFT, PERTURBED, AngleGrid, half_spacing
from .smoothness import FAR_NODE_COEFF


class OperatorKind(str, Enum):
    LAGRANGE = "lagrange"
    GRUENWALD = "gruenwald"
    GENERALIZED = "generalized"


@dataclass(frozen=True)
class SampleVector:
    values: np.ndarray

    def __post_init__(self):
        self.values.setflags(write=False)

    def __len__(self):
        return self.values.size


def sample(f: FunctionSpec, grid: AngleGrid) -> SampleVector:
    values = np.array(f.eval(grid.angles), dtype=float).reshape(grid.n)
    if not np.all(np.isfinite(values)):
        raise InvalidFunctionError(f"{f.name} is not finite at the nodes")
    return SampleVector(values)


def _values(samples, grid: AngleGrid) -> np.ndarray:
    v = samples.values if isinstance(samples, SampleVector) else np.asarray(samples, float)
    if v.shape != (grid.n,):
        raise InvalidArgumentError(f"expected {grid.n} samples, got shape {v.shape}")
    return v


def check_operator_grid(grid: AngleGrid, kind: OperatorKind):
    ok = grid.family == PER_NODE_SHIFT if kind is OperatorKind.GENERALIZED else (
        grid.family in (CHEBYSHEV, PERTURBED)
    )
    if not ok:
        raise InvalidOperatorGridError(f"{kind.value} operator cannot use a {grid.family} grid")


def _angles(theta, check_domain: bool):
    arr = np.asarray(theta, dtype=float)
    flat = np.atleast_1d(arr).reshape(-1)
    if check_domain and (np.any(flat < 0) or np.any(flat > math.pi)):
        raise OutOfDomainError("theta must lie in [0, pi]")
    return flat, arr.ndim == 0, arr.shape


def _shape(out, scalar, shape):
    return float(out[0]) if scalar else out.reshape(shape)


def paired_matrix(grid: AngleGrid, theta) -> np.ndarray:
    """``B(theta - pi/2n) + B(theta + pi/2n)``, one column per node."""
    h = half_spacing(grid.n)
    theta = np.asarray(theta, dtype=float)
    return basis_matrix(grid, theta - h) + basis_matrix(grid, theta + h)


ROW_CHUNK = 64


def row_chunks(theta: np.ndarray, size: int = ROW_CHUNK):
    """Slices of ``theta`` small enough for the basis matrices to stay in cache."""
    for start in range(0, theta.size, size):
        yield theta[start:start + size]


def matvec(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    """``m @ v`` where a pole entry of ``m`` meeting a zero of ``v`` contributes 0."""
    with np.errstate(invalid="ignore", over="ignore"):
        out = m @ v
    bad = ~np.isfinite(out)
    if bad.any():
        with np.errstate(invalid="ignore"):
            prod = m[bad] * v
        prod[np.isnan(prod)] = 0.0
        out[bad] = prod.sum(axis=-1)
    return out


def lagrange_eval(samples, grid: AngleGrid, theta):
    check_operator_grid(grid, OperatorKind.LAGRANGE)
    v = _values(samples, grid)
    flat, scalar, shape = _angles(theta, check_domain=False)
    return _shape(matvec(basis_matrix(grid, flat), v), scalar, shape)


def _gruenwald(samples, grid, theta, kind):
    check_operator_grid(grid, kind)
    v = _values(samples, grid)
    flat, scalar, shape = _angles(theta, check_domain=True)
    out = np.concatenate([0.5 * matvec(paired_matrix(grid, part), v) for part in row_chunks(flat)])
    return _shape(out, scalar, shape)


def gruenwald_eval(samples, grid: AngleGrid, theta):
    return _gruenwald(samples, grid, theta, OperatorKind.GRUENWALD)


def generalized_gruenwald_eval(samples, grid: AngleGrid, theta):
    return _gruenwald(samples, grid, theta, OperatorKind.GENERALIZED)


def evaluate(kind, samples, grid: AngleGrid, theta):
    kind = OperatorKind(kind)
    if kind is OperatorKind.LAGRANGE:
        return lagrange_eval(samples, grid, theta)
    if kind is OperatorKind.GRUENWALD:
        return gruenwald_eval(samples, grid, theta)
    return generalized_gruenwald_eval(samples, grid, theta)


def lebesgue_like(grid: AngleGrid, theta):
    """``Lambda_n(theta) = 1/2 sum_k |l_k(theta - pi/2n) + l_k(theta + pi/2n)|``.

    Terms are paired per node before taking absolute values.  All summands
    are non-negative, so numpy's pairwise summation keeps the relative
    rounding error near ``eps * log2(n)``.
    """
    check_operator_grid(grid, OperatorKind.GRUENWALD)
    flat, scalar, shape = _angles(theta, check_domain=True)
    out = np.concatenate(
        [0.5 * np.abs(paired_matrix(grid, part)).sum(axis=1) for part in row_chunks(flat)]
    )
    return _shape(out, scalar, shape)


def far_node_bound(grid: AngleGrid, theta: float, kappa: float) -> Optional[float]:
    """Far-node estimate ``(9 pi^3 / 64 n^2) sum_k (theta - eta_k - pi/2n)^-2``.

    Returns ``None`` when some node lies within ``kappa`` of ``theta``.
    """
    check_operator_grid(grid, OperatorKind.GRUENWALD)
    n = grid.n
    h = half_spacing(n)
    if not kappa > h:
        raise InvalidKappaError(f"kappa must exceed pi/(2n) = {h!r}")
    theta = float(theta)
    if np.min(np.abs(grid.angles - theta)) <= kappa:
        return None
    gaps = theta - grid.angles - h
    return FAR_NODE_COEFF / n**2 * math.fsum(1.0 / gaps**2)
