"""Radial reduction: vector proxes of ``phi1d(||x||)`` from scalar proxes.

For an even scalar ``phi1d`` with 0 interior to its domain, the prox of
the radial lift acts along the ray through ``x``, so one scalar prox at
``||x||`` suffices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import INF, ProxCapable, Vec, as_vec, norm, scale, zeros_like
from .scaled import scaled_prox

# below this, x is treated as the zero vector (subnormal guard, not a loose tol)
_ZERO_NORM = 1e-300


@dataclass(frozen=True)
class RadialFunction:
    """The lift ``x -> phi1d(||x||)`` of an even scalar function."""

    phi1d: ProxCapable

    def __post_init__(self):
        for t in (0.25, 1.0, 3.5):
            left, right = self.phi1d.eval(-t), self.phi1d.eval(t)
            if left != right:
                raise ValueError(f"phi1d must be even; differs at +-{t}")
        if self.phi1d.eval(0.0) == INF:
            raise ValueError("phi1d must be finite near 0")

    def eval(self, x) -> float:
        return self.phi1d.eval(norm(x))

    def prox(self, gamma: float, x) -> Vec:
        return radial_prox(self, gamma, x)

    def proj_cl_dom(self, x) -> Vec:
        x = as_vec(x)
        r = norm(x)
        if r < _ZERO_NORM:
            return zeros_like(x)
        return scale(x, self.phi1d.proj_cl_dom(r) / r)

    def conj_eval(self, t) -> float:
        return self.phi1d.conj_eval(norm(t))

    def conjugate(self) -> "RadialFunction":
        return RadialFunction(self.phi1d.conjugate())


def radial_prox(phi: RadialFunction, gamma: float, x) -> Vec:
    """Prox of ``gamma (.) phi`` at ``x``, scaling ``x`` by the scalar prox at ``||x||``."""
    x = as_vec(x)
    r = norm(x)
    if r < _ZERO_NORM:
        return zeros_like(x)
    t = scaled_prox(phi.phi1d, gamma, r)
    return scale(x, t / r)


def radial_prox_value(phi: RadialFunction, gamma: float, x) -> float:
    """Value of ``phi`` at the radial prox, computed on the scalar side."""
    r = norm(as_vec(x))
    if r < _ZERO_NORM:
        return phi.phi1d.eval(0.0)
    return phi.phi1d.eval(scaled_prox(phi.phi1d, gamma, r))
