"""Bound sweeps, convergence studies and rate checks.

Every routine returns plain dataclass rows so the results can be written to
CSV or JSON by :mod:`gruenwald.reporting` without further processing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.interpolate import BarycentricInterpolator

from .basis import basis_matrix, cheb_matrix, s_factor_array
from .errors import InsufficientSmoothnessError, InvalidArgumentError
from .functions import FunctionSpec, get_function
from .grids import chebyshev_angles, half_spacing, make_grid, perturbed_angles
from .operators import (
    OperatorKind,
    ROW_CHUNK,
    matvec,
    check_operator_grid,
    evaluate,
    far_node_bound,
    lebesgue_like,
    paired_matrix,
    sample,
)
from .smoothness import c2_constant, mu_n, voronovskaja_bound

BOUND_KINDS = ("pk", "sk", "lk", "lambda", "far_node")
FRACTIONS = (0.5, -0.5, 0.9, -0.9, 0.99, -0.99)
DEFAULT_GRID = 2001


@dataclass
class BoundReport:
    bound_name: str
    argmax_n: int
    theta0: float
    theoretical: float
    empirical_max: float
    argmax_theta: Optional[float]
    argmax_k: Optional[int]
    margin: float
    points: int

    @property
    def passed(self) -> bool:
        return self.margin >= -1e-10


@dataclass
class ConvergenceRow:
    n: int
    sup_error: float
    bound: Optional[float]
    observed_rate: Optional[float]


@dataclass
class ConvergenceTable:
    function: str
    family: str
    operator: str
    params: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)


@dataclass
class VoronovskajaRow:
    theta: float
    n: int
    scaled_error: float
    bound: float
    passed: bool


@dataclass
class QuantRow:
    n: int
    sup_error: float
    mu_n: float
    rhs: float
    passed: bool


@dataclass
class RungeRow:
    n: int
    lagrange_equidistant_error: float
    gruenwald_chebyshev_error: float
    gruenwald_equidistant_angle_error: Optional[float]


def theta_grid(size: int, lo: float = 0.0, hi: float = math.pi) -> np.ndarray:
    return np.linspace(lo, hi, size)


def _theta0_list(n: int, policy: str, fractions):
    if fractions is not None:
        return [f * half_spacing(n) for f in fractions]
    if policy == "zero":
        return [0.0]
    if policy == "fractions":
        return [f * half_spacing(n) for f in FRACTIONS]
    raise InvalidArgumentError(f"unknown theta0 policy {policy!r}")


def _argmax_report(name, n, theta0, bound, values, theta, with_k=True):
    """Fold a ``(len(theta), n)`` or ``(len(theta),)`` array into a report."""
    a = np.abs(values)
    flat = int(np.argmax(a))
    if a.ndim == 2:
        i, k = np.unravel_index(flat, a.shape)
        k = int(k) + 1 if with_k else None
    else:
        i, k = flat, None
    emp = float(a.flat[flat])
    return BoundReport(name, n, theta0, bound, emp, float(theta[i]), k, bound - emp, a.size)


def bound_sweep(
    kind: str,
    n_list: Sequence[int],
    theta_grid_size: int = DEFAULT_GRID,
    theta0_policy: str = "zero",
    fractions: Optional[Sequence[float]] = None,
    kappa_frac: float = 0.5,
) -> list[BoundReport]:
    """Empirical maxima of the bounded quantities against their bounds.

    ``pk`` sweeps the Chebyshev basis over [-pi, 2pi]; the other kinds sweep
    [0, pi] on perturbed grids with theta0 chosen by ``theta0_policy``
    (``zero`` or ``fractions``) or by explicit ``fractions`` of pi/(2n).

    For ``far_node`` the reported quantity is the ratio of Lambda_n to the
    far-node estimate over the points that satisfy the far-node hypothesis
    with ``kappa = (1 + kappa_frac) pi/(2n)``; the bound is 1.
    """
    if kind not in BOUND_KINDS:
        raise InvalidArgumentError(f"unknown bound kind {kind!r}")
    if not n_list:
        raise InvalidArgumentError("n_list is empty")
    if theta_grid_size < 101:
        raise InvalidArgumentError("theta_grid_size must be >= 101")
    reports = []
    for n in n_list:
        if kind == "pk":
            theta = theta_grid(theta_grid_size, -math.pi, 2 * math.pi)
            reports.append(
                _argmax_report("pk", n, 0.0, 4 / math.pi, cheb_matrix(n, theta), theta)
            )
            continue
        theta = theta_grid(theta_grid_size)
        for theta0 in _theta0_list(n, theta0_policy, fractions):
            if kind == "sk":
                k = np.arange(1, n + 1)
                vals = s_factor_array(n, k[None, :], theta[:, None], theta0)
                reports.append(_argmax_report("sk", n, theta0, 2.0, vals, theta))
            elif kind == "lk":
                vals = basis_matrix(perturbed_angles(n, theta0), theta)
                reports.append(_argmax_report("lk", n, theta0, 8 / math.pi, vals, theta))
            elif kind == "lambda":
                lam = lebesgue_like(perturbed_angles(n, theta0), theta)
                reports.append(
                    _argmax_report("lambda", n, theta0, c2_constant(), lam, theta)
                )
            else:
                reports.append(_far_node_report(n, theta0, theta, kappa_frac))
    return reports


def _far_node_report(n, theta0, theta, kappa_frac) -> BoundReport:
    grid = perturbed_angles(n, theta0)
    kappa = (1 + kappa_frac) * half_spacing(n)
    best, best_theta, count = 0.0, None, 0
    for t in theta:
        rhs = far_node_bound(grid, t, kappa)
        if rhs is None:
            continue
        count += 1
        lam = 0.5 * float(np.abs(paired_matrix(grid, np.array([t]))).sum())
        if lam / rhs > best:
            best, best_theta = lam / rhs, float(t)
    return BoundReport("far_node", n, theta0, 1.0, best, best_theta, None, 1.0 - best, count)


def _family_grid(family: str, n: int, params: dict):
    return make_grid(family, n, **params)


def sup_error(kind, f: FunctionSpec, grid, theta) -> float:
    """``max_theta |Op_n(f)(theta) - f(theta)|`` over the given angles."""
    kind = OperatorKind(kind)
    theta = np.asarray(theta, dtype=float)
    v = sample(f, grid)
    approx = evaluate(kind, v, grid, theta)
    return float(np.max(np.abs(approx - f.eval(theta))))


def quantitative_rhs(f: FunctionSpec, n: int) -> float:
    """``(c2 + 1) * min(omega(f, mu_n), 2 sup|f|)`` using the analytic modulus if any."""
    cap = 2.0 * f.sup_abs
    omega = cap if f.modulus is None else min(f.modulus(mu_n(n)), cap)
    return (c2_constant() + 1.0) * omega


def observed_rates(ns, errors):
    rates = [None]
    for (n0, e0), (n1, e1) in zip(zip(ns, errors), zip(ns[1:], errors[1:])):
        if e0 > 0 and e1 > 0 and np.isfinite(e0) and np.isfinite(e1):
            rates.append(math.log(e0 / e1) / math.log(n1 / n0))
        else:
            rates.append(None)
    return rates


def convergence_study(
    function: str,
    family: str = "chebyshev",
    operator: str = "gruenwald",
    n_list: Sequence[int] = (8, 16, 32, 64, 128, 256, 512),
    theta_grid_size: int = DEFAULT_GRID,
    **family_params,
) -> ConvergenceTable:
    f = get_function(function)
    ns = sorted(n_list)
    theta = theta_grid(theta_grid_size)
    errors = [sup_error(operator, f, _family_grid(family, n, family_params), theta) for n in ns]
    bounds = [quantitative_rhs(f, n) if f.modulus is not None else None for n in ns]
    rows = [
        ConvergenceRow(n, e, b, r)
        for n, e, b, r in zip(ns, errors, bounds, observed_rates(ns, errors))
    ]
    return ConvergenceTable(function, family, OperatorKind(operator).value, dict(family_params), rows)


def voronovskaja_study(
    function: str,
    theta_list: Sequence[float],
    n_list: Sequence[int],
    family: str = "chebyshev",
    **family_params,
) -> list[VoronovskajaRow]:
    """Finite-n proxy ``n^(1/3) |G_n f(theta) - f(theta)| <= bound``."""
    f = get_function(function)
    if not f.is_c2:
        raise InsufficientSmoothnessError(f"{function} lacks second-order data")
    theta = np.asarray(theta_list, dtype=float)
    bounds = [voronovskaja_bound(f, t) for t in theta]
    rows = []
    for t_idx, t in enumerate(theta):
        for n in n_list:
            grid = _family_grid(family, n, family_params)
            err = sup_error("gruenwald", f, grid, np.array([t]))
            scaled = n ** (1.0 / 3.0) * err
            b = bounds[t_idx]
            rows.append(VoronovskajaRow(float(t), n, scaled, b, bool(scaled <= b + 1e-9)))
    return rows


def gruenwald_sup_errors(functions: Sequence[FunctionSpec], grid, theta) -> np.ndarray:
    """Sup errors of G_n for several functions, sharing one basis evaluation."""
    theta = np.asarray(theta, dtype=float)
    check_operator_grid(grid, OperatorKind.GRUENWALD)
    samples = np.column_stack([sample(f, grid).values for f in functions])
    exact = np.column_stack([f.eval(theta) for f in functions])
    worst = np.zeros(len(functions))
    for start in range(0, theta.size, ROW_CHUNK):
        part = slice(start, start + ROW_CHUNK)
        approx = 0.5 * matvec(paired_matrix(grid, theta[part]), samples)
        worst = np.maximum(worst, np.abs(approx - exact[part]).max(axis=0))
    return worst


def quantitative_checks(
    functions: Sequence[str],
    n_list: Sequence[int],
    theta_grid_size: int = DEFAULT_GRID,
    family: str = "chebyshev",
    **family_params,
) -> dict[str, list[QuantRow]]:
    """:func:`quantitative_check` for several functions at once."""
    specs = [get_function(name) for name in functions]
    theta = theta_grid(theta_grid_size)
    out = {name: [] for name in functions}
    for n in n_list:
        errors = gruenwald_sup_errors(specs, _family_grid(family, n, family_params), theta)
        for f, err in zip(specs, errors):
            rhs = quantitative_rhs(f, n)
            out[f.name].append(QuantRow(n, float(err), mu_n(n), rhs, bool(err <= rhs + 1e-9)))
    return out


def quantitative_check(
    function: str,
    n_list: Sequence[int],
    theta_grid_size: int = DEFAULT_GRID,
    family: str = "chebyshev",
    **family_params,
) -> list[QuantRow]:
    """Rows ``(n, sup_error, mu_n, (c2+1) min(omega(f, mu_n), 2 sup|f|), pass)``."""
    return quantitative_checks(
        [function], n_list, theta_grid_size, family, **family_params
    )[function]


def _runge_x(x):
    return 1.0 / (1.0 + 25.0 * x * x)


def _interpolator(nodes, seed: int) -> BarycentricInterpolator:
    # scipy permutes the nodes at random while computing weights; seed it so
    # that the low-order digits are reproducible
    return BarycentricInterpolator(nodes, _runge_x(nodes), rng=np.random.default_rng(seed))


def equidistant_lagrange_error(n: int, theta, seed: int = 0) -> float:
    """Sup error of plain Lagrange interpolation of 1/(1+25x^2) at n equispaced x."""
    nodes = np.linspace(-1.0, 1.0, n) if n > 1 else np.zeros(1)
    x = np.cos(theta)
    p = _interpolator(nodes, seed)
    return float(np.max(np.abs(p(x) - _runge_x(x))))


def equidistant_angle_gruenwald_error(n: int, theta, seed: int = 0) -> Optional[float]:
    """Gruenwald averaging of the Lagrange polynomial on angles j pi/(n-1)."""
    if n < 2:
        return None
    eta = np.arange(n) * math.pi / (n - 1)
    p = _interpolator(np.cos(eta), seed)
    h = half_spacing(n)
    g = 0.5 * (p(np.cos(theta - h)) + p(np.cos(theta + h)))
    return float(np.max(np.abs(g - _runge_x(np.cos(theta)))))


def runge_contrast(
    n_list: Sequence[int], theta_grid_size: int = DEFAULT_GRID, seed: int = 0
) -> list[RungeRow]:
    f = get_function("runge_cos")
    theta = theta_grid(theta_grid_size)
    return [
        RungeRow(
            n,
            equidistant_lagrange_error(n, theta, seed),
            sup_error("gruenwald", f, chebyshev_angles(n), theta),
            equidistant_angle_gruenwald_error(n, theta, seed),
        )
        for n in sorted(n_list)
    ]
