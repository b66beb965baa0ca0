"""Rate constants and modulus-of-continuity estimates."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .errors import InsufficientSmoothnessError, InvalidArgumentError, InvalidFunctionError
from .functions import FunctionSpec

#: 9 pi^3 / 64, the prefactor of the far-node estimate (before 1/n^2)
FAR_NODE_COEFF = 9 * math.pi**3 / 64
VORONOVSKAJA_D1 = 9 * math.pi**4 / 64
VORONOVSKAJA_D2 = 9 * math.pi**5 / 128
VORONOVSKAJA_M = 9 * math.pi**5 / 64

DEFAULT_RESOLUTION = 4096


def c2_constant() -> float:
    """48/pi + (9 pi^3/64) (4/pi^2) (pi^2/6) = 48/pi + 3 pi^3 / 32."""
    return 48 / math.pi + 3 * math.pi**3 / 32


def epsilon_n(n: int) -> float:
    return n ** (-1.0 / 3.0)


def mu_n(n: int) -> float:
    if n < 1:
        raise InvalidArgumentError("n must be >= 1")
    eps = epsilon_n(n)
    return (math.pi / (2 * n) + eps) * c2_constant() + VORONOVSKAJA_D1 * eps


@dataclass(frozen=True)
class RateConstants:
    c2: float
    epsilon_n: float
    mu_n: float
    voronovskaja_coeff_d1: float
    voronovskaja_coeff_d2: float
    voronovskaja_const_coeff: float


def rate_constants(n: int) -> RateConstants:
    c2 = c2_constant()
    return RateConstants(
        c2=c2,
        epsilon_n=epsilon_n(n),
        mu_n=mu_n(n),
        voronovskaja_coeff_d1=VORONOVSKAJA_D1 + c2,
        voronovskaja_coeff_d2=VORONOVSKAJA_D2,
        voronovskaja_const_coeff=VORONOVSKAJA_M,
    )


def modulus_estimate(f: FunctionSpec, delta: float, resolution: int = DEFAULT_RESOLUTION) -> float:
    """Lower estimate of ``omega(f, delta)`` on [0, pi].

    Scans a uniform grid of ``resolution + 1`` points; the widest window of
    grid points whose spread is ``<= delta`` gives the largest admissible
    oscillation ``max - min``.
    """
    if not delta > 0:
        raise InvalidArgumentError("delta must be positive")
    if resolution < 64:
        raise InvalidArgumentError("resolution must be >= 64")
    t = np.linspace(0.0, math.pi, resolution + 1)
    v = f.eval(t)
    if not np.all(np.isfinite(v)):
        raise InvalidFunctionError(f"{f.name} is not finite on [0, pi]")
    h = math.pi / resolution
    width = min(int(math.floor(delta / h * (1 + 1e-12))), resolution)
    if width == 0:
        return 0.0
    windows = sliding_window_view(v, width + 1)
    return float(np.max(windows.max(axis=1) - windows.min(axis=1)))


def voronovskaja_bound(f: FunctionSpec, theta: float) -> float:
    """Right-hand side of the n^(1/3) asymptotic error estimate at ``theta``."""
    if not f.is_c2:
        raise InsufficientSmoothnessError(f"{f.name} lacks d1/d2/m_bound")
    d1 = abs(float(f.d1(np.asarray(theta))))
    d2 = abs(float(f.d2(np.asarray(theta))))
    return (VORONOVSKAJA_D1 + c2_constant()) * d1 + VORONOVSKAJA_D2 * d2 + VORONOVSKAJA_M * f.m_bound
