"""Registry of test functions on the angle domain [0, pi]."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import NotFoundError

Func = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class FunctionSpec:
    """A test function with optional analytic side information.

    ``modulus`` is an analytic upper bound for the modulus of continuity
    on [0, pi]; ``m_bound`` is ``sup |f''|``; ``sup_abs`` is ``sup |f|``.
    All callables accept and return numpy arrays.
    """

    name: str
    f: Func
    sup_abs: float
    d1: Optional[Func] = None
    d2: Optional[Func] = None
    modulus: Optional[Callable[[float], float]] = None
    m_bound: Optional[float] = None

    def eval(self, theta):
        return self.f(np.asarray(theta, dtype=float))

    @property
    def is_c2(self) -> bool:
        return self.d1 is not None and self.d2 is not None and self.m_bound is not None


def _const(c):
    return lambda t: np.full(np.shape(t), float(c))


def _runge(t):
    return 1.0 / (1.0 + 25.0 * np.cos(t) ** 2)


def _runge_d1(t):
    c, s = np.cos(t), np.sin(t)
    return 50.0 * c * s / (1.0 + 25.0 * c * c) ** 2


def _runge_d2(t):
    c, s = np.cos(t), np.sin(t)
    g = 1.0 + 25.0 * c * c
    return 50.0 * np.cos(2 * t) / g**2 + 2.0 * (50.0 * c * s) ** 2 / g**3


def _runge_lipschitz() -> float:
    res = minimize_scalar(
        lambda t: -abs(_runge_d1(t)), bounds=(0.0, math.pi / 2), method="bounded",
        options={"xatol": 1e-12},
    )
    return -res.fun * (1 + 1e-9)


_RUNGE_L = _runge_lipschitz()
_RUNGE_RANGE = 1.0 - 1.0 / 26.0


def _hat(t):
    return np.maximum(0.0, 1.0 - np.abs(t - math.pi / 2) / (math.pi / 2))


_REGISTRY = {
    spec.name: spec
    for spec in [
        FunctionSpec(
            "const1", _const(1.0), 1.0, d1=_const(0.0), d2=_const(0.0),
            modulus=lambda d: 0.0, m_bound=0.0,
        ),
        FunctionSpec(
            "e0", lambda t: np.asarray(t, dtype=float) * 1.0, math.pi,
            d1=_const(1.0), d2=_const(0.0),
            modulus=lambda d: min(d, math.pi), m_bound=0.0,
        ),
        FunctionSpec(
            "cosine", np.cos, 1.0, d1=lambda t: -np.sin(t), d2=lambda t: -np.cos(t),
            modulus=lambda d: 2.0 * math.sin(min(d, math.pi) / 2), m_bound=1.0,
        ),
        FunctionSpec(
            "abs_cos", lambda t: np.abs(np.cos(t)), 1.0,
            modulus=lambda d: min(d, 1.0),
        ),
        FunctionSpec(
            "runge_cos", _runge, 1.0, d1=_runge_d1, d2=_runge_d2,
            # sup |f''| = 50 is attained at pi/2
            modulus=lambda d: min(_RUNGE_L * d, _RUNGE_RANGE), m_bound=50.0,
        ),
        FunctionSpec(
            "hat", _hat, 1.0, modulus=lambda d: min(2.0 * d / math.pi, 1.0),
        ),
        FunctionSpec(
            "sin3", lambda t: np.sin(3 * np.asarray(t)), 1.0,
            d1=lambda t: 3 * np.cos(3 * np.asarray(t)),
            d2=lambda t: -9 * np.sin(3 * np.asarray(t)),
            modulus=lambda d: min(3.0 * d, 2.0), m_bound=9.0,
        ),
    ]
}


def function_names() -> list[str]:
    return list(_REGISTRY)


def get_function(name: str) -> FunctionSpec:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise NotFoundError(
            f"unknown function {name!r}; choose from {', '.join(_REGISTRY)}"
        ) from None
