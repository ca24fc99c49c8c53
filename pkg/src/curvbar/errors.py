"""Exception hierarchy.

Mathematical non-solvability (no compact sphere, gradient blowup, conjugate
point, ...) is distinguished from usage errors so the CLI can map it to its
own exit code.
"""

from __future__ import annotations


class CurvbarError(Exception):
    """Base class for all library errors."""


class DomainError(CurvbarError, ValueError):
    """A radius or parameter lies outside the manifold's radial domain."""


class InvalidWarpError(CurvbarError, ValueError):
    """Warping-function closures fail the construction-time consistency checks."""


class ConjugatePointError(CurvbarError):
    """Jacobi amplitude hit zero inside the working range."""

    def __init__(self, t_root: float, bracket: tuple[float, float]):
        self.t_root = t_root
        self.bracket = bracket
        super().__init__(
            f"conjugate point near t={t_root:.12g} (bracketed in {bracket})"
        )


class NoCompactSphereError(CurvbarError):
    """No compact rotational CMC sphere exists for the requested mean curvature."""


class RootNotBracketedError(CurvbarError):
    """A required root was not bracketed inside the radial domain cap."""


class GradientBlowupError(CurvbarError):
    """The tilt reached 1 before the boundary: the graph ceases to exist."""

    def __init__(self, t_star: float, marginal: bool = False):
        self.t_star = t_star
        self.marginal = marginal
        tag = " (marginal)" if marginal else ""
        super().__init__(f"gradient blowup at t={t_star:.12g}{tag}")


class ConvexityLossError(CurvbarError):
    """Strict convexity failed while integrating a Gauss-Kronecker graph."""


class QuadratureError(CurvbarError):
    """Adaptive quadrature did not reach the requested tolerance."""


class InternalConsistencyError(CurvbarError):
    """An invariant that should hold by construction was violated."""


#: Errors that a scenario runner reports as data (exit code 2), not a crash.
NONSOLVABLE_ERRORS = (
    NoCompactSphereError,
    RootNotBracketedError,
    GradientBlowupError,
    ConvexityLossError,
    ConjugatePointError,
)
