"""Rotationally symmetric manifolds ``dt^2 + phi(t)^2 g0`` in polar coordinates.

A manifold is described by its warping function phi together with analytic
first and second derivatives.  Space forms of constant curvature c use

    phi = sn_c:  t           (c = 0)
                 sinh(at)/a  (c = -a^2 < 0)
                 sin(at)/a   (c = a^2 > 0, domain capped below pi/a)

All radial planes at distance t share the sectional curvature -phi''/phi,
so the radial Ricci curvature is (n-1) times that value.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Literal

import numpy as np

from .errors import DomainError, InvalidWarpError
from .numerics import central_diff

__all__ = [
    "ModelManifold",
    "BaseSpec",
    "space_form",
    "named_warp",
    "warp_names",
    "manifold_from_config",
    "manifold_from_string",
    "default_t_max",
]

#: below this radius, space-form warps switch to their Taylor expansion
_SERIES_CUTOFF = 1e-6
#: fraction of pi/sqrt(c) kept inside the domain for positively curved bases
_SPHERE_CAP = 1.0 - 1e-9


def default_t_max() -> float:
    """Domain cap for unbounded manifolds (env CURVBAR_TMAX overrides)."""
    raw = os.environ.get("CURVBAR_TMAX")
    if raw is None:
        return 30.0
    cap = float(raw)
    if not math.isfinite(cap) or cap <= 0:
        raise ValueError(f"CURVBAR_TMAX must be a positive finite number, got {raw!r}")
    return cap


@dataclass(frozen=True, eq=False)
class ModelManifold:
    """Immutable rotationally symmetric manifold; all methods are pure."""

    n: int
    warp: Callable[[float], float]
    warp_d1: Callable[[float], float]
    warp_d2: Callable[[float], float]
    t_max: float
    space_form_c: float | None = None
    name: str = "custom"

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 2:
            raise ValueError(f"dimension must be an integer >= 2, got {self.n!r}")
        if not math.isfinite(self.t_max) or self.t_max <= 0:
            raise ValueError(f"t_max must be positive and finite, got {self.t_max!r}")
        self._validate_polar_smoothness()
        self._validate_derivatives()

    def _validate_polar_smoothness(self):
        t = 1e-4
        phi = self.warp(t)
        if not (abs(phi / t - 1.0) < 1e-6):
            raise InvalidWarpError(
                f"warp is not polar-smooth: phi({t}) / {t} = {phi / t!r}, expected 1"
            )
        if not (abs(self.warp_d1(t) - 1.0) < 1e-6):
            raise InvalidWarpError("warp derivative at the pole must tend to 1")

    def _validate_derivatives(self):
        # curvature involves phi'', so the analytic closures are checked once
        # here instead of differentiating numerically at use sites
        for t in np.linspace(0.02, 0.8, 9) * self.t_max:
            h = 1e-5 * max(1.0, t)
            for got, ref, label in (
                (self.warp_d1(t), central_diff(self.warp, t, h), "phi'"),
                (self.warp_d2(t), central_diff(self.warp_d1, t, h), "phi''"),
            ):
                if abs(got - ref) > 1e-6 * max(1.0, abs(got), abs(ref)):
                    raise InvalidWarpError(
                        f"{label}({t:.4g}) = {got!r} disagrees with finite "
                        f"difference {ref!r}"
                    )
            if self.warp(t) <= 0:
                raise InvalidWarpError(f"warp must stay positive, phi({t:.4g}) <= 0")

    def _check_radius(self, t: float, allow_zero: bool = False):
        lo_ok = t >= 0 if allow_zero else t > 0
        if not (lo_ok and t < self.t_max and math.isfinite(t)):
            raise DomainError(
                f"radius t={t!r} outside (0, {self.t_max}) of {self.name}"
            )

    def phi(self, t: float) -> float:
        return self.warp(t)

    def phi_d1(self, t: float) -> float:
        return self.warp_d1(t)

    def phi_d2(self, t: float) -> float:
        return self.warp_d2(t)

    def metric_coefficient(self, t: float) -> float:
        """Coefficient of the spherical part of the metric, phi(t)^2."""
        return self.warp(t) ** 2

    def radial_sectional_curvature(self, t: float) -> float:
        """Sectional curvature of any plane containing the radial direction."""
        self._check_radius(t)
        if self.space_form_c is not None:
            return self.space_form_c
        return -self.warp_d2(t) / self.warp(t)

    def radial_ricci(self, t: float) -> float:
        """Ricci curvature of the radial direction: sum of n-1 radial planes."""
        return (self.n - 1) * self.radial_sectional_curvature(t)

    def geodesic_sphere_curvature(
        self, rho: float, orientation: Literal["outward", "inward"] = "outward"
    ) -> float:
        """Umbilic principal curvature of the geodesic sphere of radius rho.

        Sign convention II(X, Y) = <-D_X N, Y>: the outward normal gives
        -phi'(rho)/phi(rho); the inward normal exactly negates it.
        """
        self._check_radius(rho)
        outward = -self.warp_d1(rho) / self.warp(rho)
        if orientation == "outward":
            return outward
        if orientation == "inward":
            return -outward
        raise ValueError(f"orientation must be 'outward' or 'inward', got {orientation!r}")

    def describe(self) -> dict:
        d: dict = {"name": self.name, "n": self.n, "t_max": self.t_max}
        if self.space_form_c is not None:
            d["kind"] = "space_form"
            d["c"] = self.space_form_c
        else:
            d["kind"] = "custom"
        return d


@dataclass(frozen=True)
class BaseSpec:
    """Base of the radial foliation: a point, or a geodesic sphere with a
    chosen unit normal driving the outgoing geodesics."""

    kind: Literal["polar_point", "geodesic_sphere"]
    rho: float = 0.0
    orientation: Literal["outward", "inward"] = "outward"

    @classmethod
    def polar(cls) -> "BaseSpec":
        return cls(kind="polar_point")

    @classmethod
    def sphere(cls, rho: float, orientation: str = "outward") -> "BaseSpec":
        if not (math.isfinite(rho) and rho > 0):
            raise ValueError(f"sphere radius must be positive, got {rho!r}")
        if orientation not in ("outward", "inward"):
            raise ValueError(f"unknown orientation {orientation!r}")
        return cls(kind="geodesic_sphere", rho=rho, orientation=orientation)

    @property
    def is_polar(self) -> bool:
        return self.kind == "polar_point"

    def validate_for(self, manifold: ModelManifold):
        if not self.is_polar and not (0 < self.rho < manifold.t_max):
            raise DomainError(
                f"sphere radius rho={self.rho} outside (0, {manifold.t_max})"
            )

    def offset(self) -> float:
        """Radial coordinate of the base: geodesics start at this distance."""
        return 0.0 if self.is_polar else self.rho

    def describe(self) -> dict:
        if self.is_polar:
            return {"kind": "polar_point"}
        return {"kind": "geodesic_sphere", "rho": self.rho, "orientation": self.orientation}


def _sn_triple(c: float):
    """Warping function of the space form of curvature c with derivatives."""
    if c == 0.0:

        def f(t):
            return t

        def d1(t):
            return 1.0

        def d2(t):
            return 0.0

        return f, d1, d2

    a = math.sqrt(abs(c))

    def series(t):
        # 3-term Taylor near the pole avoids evaluating sinh/sin at tiny args
        return t * (1.0 - c * t * t / 6.0 + c * c * t**4 / 120.0)

    def series_d1(t):
        return 1.0 - c * t * t / 2.0 + c * c * t**4 / 24.0

    if c < 0:

        def f(t):
            return series(t) if abs(t) < _SERIES_CUTOFF else math.sinh(a * t) / a

        def d1(t):
            return series_d1(t) if abs(t) < _SERIES_CUTOFF else math.cosh(a * t)

    else:

        def f(t):
            return series(t) if abs(t) < _SERIES_CUTOFF else math.sin(a * t) / a

        def d1(t):
            return series_d1(t) if abs(t) < _SERIES_CUTOFF else math.cos(a * t)

    def d2(t):
        return -c * f(t)

    return f, d1, d2


@lru_cache(maxsize=None)
def space_form(c: float, n: int, t_max: float | None = None) -> ModelManifold:
    """Complete simply connected space of constant curvature c, dimension n."""
    c = float(c)
    if not math.isfinite(c):
        raise ValueError(f"curvature must be finite, got {c!r}")
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {n!r}")
    if t_max is None:
        t_max = default_t_max()
        if c > 0:
            t_max = min(t_max, _SPHERE_CAP * math.pi / math.sqrt(c))
    elif c > 0 and t_max >= math.pi / math.sqrt(c):
        raise ValueError(
            f"t_max={t_max} reaches the antipodal point pi/sqrt(c)={math.pi / math.sqrt(c)}"
        )
    f, d1, d2 = _sn_triple(c)
    label = f"space_form(c={c:g}, n={n})"
    return ModelManifold(
        n=int(n), warp=f, warp_d1=d1, warp_d2=d2, t_max=float(t_max),
        space_form_c=c, name=label,
    )


# --- named builtin warps -----------------------------------------------------
#
# The CLI never parses warp expressions; custom manifolds come from this
# registry of analytic triples (phi, phi', phi'').

def _sinh_cubic():
    def f(t):
        return math.sinh(t) + t**3 / 6.0

    def d1(t):
        return math.cosh(t) + t * t / 2.0

    def d2(t):
        return math.sinh(t) + t

    # radial curvature decreases from -2 at the pole toward -1
    return f, d1, d2


_RIPPLE_A = 0.8
_RIPPLE_EPS = 0.008
_RIPPLE_OMEGA = 2.0


def _ripple():
    a, eps, w = _RIPPLE_A, _RIPPLE_EPS, _RIPPLE_OMEGA

    def f(t):
        return math.sinh(a * t) / a + eps * t**3 * math.sin(w * t) ** 2

    def d1(t):
        return math.cosh(a * t) + eps * (
            3 * t * t * math.sin(w * t) ** 2 + w * t**3 * math.sin(2 * w * t)
        )

    def d2(t):
        return a * math.sinh(a * t) + eps * (
            6 * t * math.sin(w * t) ** 2
            + 6 * w * t * t * math.sin(2 * w * t)
            + 2 * w * w * t**3 * math.cos(2 * w * t)
        )

    # radial curvature oscillates through [-0.93, -0.36] around -a^2 = -0.64,
    # staying strictly above -1
    return f, d1, d2


_WARP_BUILDERS = {
    "sinh_cubic": _sinh_cubic,
    "ripple": _ripple,
}


def warp_names() -> list[str]:
    return sorted(_WARP_BUILDERS)


@lru_cache(maxsize=None)
def named_warp(name: str, n: int, t_max: float | None = None) -> ModelManifold:
    try:
        builder = _WARP_BUILDERS[name]
    except KeyError:
        raise ValueError(
            f"unknown warp {name!r}; available: {', '.join(warp_names())}"
        ) from None
    f, d1, d2 = builder()
    if t_max is None:
        t_max = default_t_max()
    return ModelManifold(
        n=int(n), warp=f, warp_d1=d1, warp_d2=d2, t_max=float(t_max),
        name=f"{name}(n={n})",
    )


def manifold_from_config(cfg: dict) -> ModelManifold:
    """Build a manifold from the JSON object form.

    {"kind": "space_form", "c": -1.0, "n": 3}
    {"kind": "custom", "n": 3, "warp": "ripple"}
    """
    kind = cfg.get("kind")
    t_max = cfg.get("t_max")
    if kind == "space_form":
        return space_form(float(cfg["c"]), int(cfg["n"]), t_max)
    if kind == "custom":
        return named_warp(str(cfg["warp"]), int(cfg["n"]), t_max)
    raise ValueError(f"manifold kind must be 'space_form' or 'custom', got {kind!r}")


def manifold_from_string(spec: str) -> ModelManifold:
    """Parse the compact CLI form 'space_form:C:N' or 'custom:WARP:N'."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(
            f"manifold spec {spec!r} must be 'space_form:C:N' or 'custom:WARP:N'"
        )
    kind, middle, n = parts
    if kind == "space_form":
        return space_form(float(middle), int(n))
    if kind == "custom":
        return named_warp(middle, int(n))
    raise ValueError(f"unknown manifold kind {kind!r} in {spec!r}")
