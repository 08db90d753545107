"""The scaled prox family ``gamma (.) f`` and its certificates.

``gamma (.) f`` means ``gamma * f`` for ``gamma > 0`` and the indicator of
``cl dom f`` for ``gamma == 0``, so its prox interpolates between the prox
of ``gamma * f`` and the projection onto ``cl dom f``.  The zero branch is
taken only for an exact ``0.0`` weight.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    INF,
    CaseKind,
    ProxCapable,
    ScalingFunction,
    dist,
    dot,
    norm,
    scale,
    sub,
)

# identity checks use absolute 1e-12 plus relative 1e-10 * (1 + magnitude)
ABS_TOL = 1e-12
REL_TOL = 1e-10


def scaled_prox(f: ProxCapable, gamma: float, x):
    """Prox of ``gamma (.) f`` at ``x``; the projection onto ``cl dom f`` at 0."""
    if gamma < 0.0:
        raise ValueError(f"weight must be nonnegative, got {gamma}")
    if gamma == 0.0:
        return f.proj_cl_dom(x)
    return f.prox(gamma, x)


def moreau_decompose(f: ProxCapable, gamma: float, x):
    """Split ``x = p + gamma * d`` with ``p`` the prox of ``gamma*f`` and
    ``d`` the prox of ``f*/gamma``, both computed independently.

    ``f`` must expose ``conjugate()`` returning a prox-capable conjugate.
    """
    if gamma <= 0.0:
        raise ValueError(f"weight must be positive, got {gamma}")
    conj_of = getattr(f, "conjugate", None)
    if conj_of is None:
        raise ValueError(f"{f!r} does not expose a conjugate prox")
    fstar = conj_of()
    p = f.prox(gamma, x)
    d = fstar.prox(1.0 / gamma, scale(x, 1.0 / gamma))
    return p, d


def prox_characterization_gap(f: ProxCapable, gamma: float, x, p, probes=()) -> float:
    """Fenchel residual certifying ``p`` as the prox of ``gamma (.) f`` at ``x``.

    Returns ``(g(.)f)(p) + (g(.)f)*(x-p) - <p, x-p>``; nonnegative, and
    below round-off exactly at the prox.  When the conjugate of ``f`` is
    not evaluable the variational inequality is sampled over ``probes``
    (points of the ambient space) instead, giving only a lower bound.
    """
    if gamma < 0.0:
        raise ValueError(f"weight must be nonnegative, got {gamma}")
    w = sub(x, p)
    val = _scaled_value(f, gamma, p)
    conj = _scaled_conj_value(f, gamma, w)
    if conj is not None:
        if val == INF or conj == INF:
            return INF
        return val + conj - dot(p, w)
    # fallback: sup over probes of <y - p, x - p> + (g(.)f)(p) - (g(.)f)(y)
    lb = 0.0
    for y in probes:
        fy = _scaled_value(f, gamma, y)
        if fy == INF:
            continue
        lb = max(lb, dot(sub(y, p), w) + val - fy)
    return lb


def _scaled_value(f: ProxCapable, gamma: float, p) -> float:
    if gamma == 0.0:
        inside = dist(p, f.proj_cl_dom(p)) <= ABS_TOL + REL_TOL * (1.0 + norm(p))
        return 0.0 if inside else INF
    v = f.eval(p)
    return INF if v == INF else gamma * v


def _scaled_conj_value(f: ProxCapable, gamma: float, w) -> float | None:
    if gamma == 0.0:
        support = getattr(f, "support_cl_dom", None)
        return None if support is None else support(w)
    conj_eval = getattr(f, "conj_eval", None)
    if conj_eval is None:
        return None
    v = conj_eval(scale(w, 1.0 / gamma))
    return INF if v == INF else gamma * v


def prox_value_curve(f: ProxCapable, x, gammas) -> list[float]:
    """Values ``f(prox of gamma (.) f at x)`` along ascending ``gammas``.

    The curve is nonincreasing and continuous in the weight.
    """
    gammas = list(gammas)
    if any(b < a for a, b in zip(gammas, gammas[1:])):
        raise ValueError("weights must be sorted ascending")
    return [f.eval(scaled_prox(f, g, x)) for g in gammas]


@dataclass(frozen=True)
class EnvelopeProvider:
    """Adapter exposing a scaling function's envelope as a prox-capable object."""

    scaling: ScalingFunction

    def eval(self, y: float) -> float:
        return self.scaling.env_eval(y)

    def prox(self, gamma: float, y: float) -> float:
        return self.scaling.prox_env(gamma, y)

    def proj_cl_dom(self, y: float) -> float:
        if self.scaling.case_kind is CaseKind.NEG_S_LOWER:
            return self.scaling.proj_cl_S(y)
        return self.scaling.proj_cl_conv_S(y)

    def conj_eval(self, t: float) -> float:
        return self.scaling.env_conj_eval(t)

    def support_cl_dom(self, t: float) -> float:
        # support of cl S and of cl conv S coincide
        return self.scaling.support_cl_conv_S(t)


@dataclass(frozen=True)
class ConjugateProvider:
    """The conjugate ``phi*`` of a base function as a prox-capable object."""

    base: object

    def eval(self, x):
        return self.base.conj_eval(x)

    def prox(self, gamma: float, x):
        return self.base.prox_conj(gamma, x)

    def proj_cl_dom(self, x):
        return self.base.proj_dom_conj(x)

    def conj_eval(self, x):
        return self.base.eval(x)

    def conjugate(self):
        return PrimalProvider(self.base)


@dataclass(frozen=True)
class PrimalProvider:
    """A catalog base function ``phi`` as a prox-capable object.

    Assumes ``dom phi`` is the whole space (true of every catalog base).
    """

    base: object

    def eval(self, x):
        return self.base.eval(x)

    def prox(self, gamma: float, x):
        return self.base.prox_primal(gamma, x)

    def proj_cl_dom(self, x):
        return x

    def conj_eval(self, x):
        return self.base.conj_eval(x)

    def support_cl_dom(self, x):
        return 0.0 if norm(x) == 0.0 else INF

    def conjugate(self):
        return ConjugateProvider(self.base)
