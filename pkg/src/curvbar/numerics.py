"""Shared numerical kernels: quadrature, dense ODE solutions, root scans,
finite differences with one Richardson level, elementary symmetric means.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import quad, solve_ivp
from scipy.optimize import brentq

from .errors import QuadratureError, RootNotBracketedError

#: default tolerances for the smooth desk-scale problems handled here
ODE_RTOL = 1e-12
ODE_ATOL = 1e-14
QUAD_TOL = 1e-10


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = QUAD_TOL,
    points: Sequence[float] | None = None,
) -> float:
    """Adaptive quadrature of f on [a, b]; raises if the error estimate is poor."""
    if a == b:
        return 0.0
    pts = None
    if points is not None:
        pts = [p for p in points if min(a, b) < p < max(a, b)]
        pts = pts or None
    val, err = quad(f, a, b, epsabs=tol, epsrel=tol, limit=400, points=pts)
    if err > 100 * tol * max(1.0, abs(val)):
        raise QuadratureError(
            f"integral on [{a:.6g}, {b:.6g}]: error estimate {err:.3g} "
            f"exceeds tolerance {tol:.3g}"
        )
    return val


def dense_solve(
    rhs: Callable[[float, np.ndarray], np.ndarray],
    t_span: tuple[float, float],
    y0: Sequence[float],
    rtol: float = ODE_RTOL,
    atol: float = ODE_ATOL,
    events=None,
):
    """solve_ivp wrapper (high-order explicit RK, dense output)."""
    sol = solve_ivp(
        rhs,
        t_span,
        np.asarray(y0, dtype=float),
        method="DOP853",
        rtol=rtol,
        atol=atol,
        dense_output=True,
        events=events,
    )
    if not (sol.success or sol.status == 1):
        raise RuntimeError(f"ODE integration failed: {sol.message}")
    return sol


def first_root(
    fn: Callable[[float], float],
    grid: np.ndarray,
    xtol: float = 1e-13,
) -> float | None:
    """First sign change of fn along grid, refined by Brent's method.

    Returns None when fn keeps the sign of its first grid value throughout.
    Exact zeros on grid points are returned directly.
    """
    vals = np.array([fn(t) for t in grid])
    s0 = math.copysign(1.0, vals[0])
    for k in range(len(grid)):
        v = vals[k]
        if v == 0.0:
            return float(grid[k])
        if math.copysign(1.0, v) != s0:
            if k == 0:
                return float(grid[0])
            return float(brentq(fn, grid[k - 1], grid[k], xtol=xtol, rtol=4e-16))
    return None


def bracketed_root(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    xtol: float = 1e-13,
) -> float:
    flo, fhi = fn(lo), fn(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0:
        raise RootNotBracketedError(
            f"no sign change on [{lo:.6g}, {hi:.6g}] "
            f"(f(lo)={flo:.3g}, f(hi)={fhi:.3g})"
        )
    return float(brentq(fn, lo, hi, xtol=xtol, rtol=4e-16))


def central_diff(f: Callable[[float], float], x: float, h: float) -> float:
    """First derivative, central difference with one Richardson level."""

    def d(step):
        return (f(x + step) - f(x - step)) / (2 * step)

    return (4 * d(h / 2) - d(h)) / 3


def central_diff2(f: Callable[[float], float], x: float, h: float) -> float:
    """Second derivative, central difference with one Richardson level."""

    def d(step):
        return (f(x + step) - 2 * f(x) + f(x - step)) / (step * step)

    return (4 * d(h / 2) - d(h)) / 3


def symmetric_means(eigenvalues: Sequence[float]) -> tuple[float, ...]:
    """Normalized elementary symmetric functions sigma_r / C(n, r), r = 1..n."""
    lam = list(map(float, eigenvalues))
    n = len(lam)
    e = [1.0] + [0.0] * n
    for x in lam:
        for r in range(min(n, len(e) - 1), 0, -1):
            e[r] += x * e[r - 1]
    return tuple(e[r] / math.comb(n, r) for r in range(1, n + 1))


def umbilic_symmetric_means(k_distinct: float, k_repeated: float, n: int) -> tuple[float, ...]:
    """Same as symmetric_means for the multiset {k_distinct, k_repeated x (n-1)}.

    Closed form keeps the r = 1 and r = n entries exactly equal to the
    mean-curvature and product formulas.
    """
    out = []
    for r in range(1, n + 1):
        sigma = math.comb(n - 1, r) * k_repeated**r
        sigma += math.comb(n - 1, r - 1) * k_repeated ** (r - 1) * k_distinct
        out.append(sigma / math.comb(n, r))
    return tuple(out)
