"""Shared vocabulary: points, extended reals, function contracts, sign classes.

Points of the base and scaling spaces are tuples of finite floats; a bare
float stands for a point of a one-dimensional space.  Extended-real values
use ``math.inf`` directly.  Proper convex functions never return ``-inf``;
raw scaling evaluations may.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Protocol, Sequence, runtime_checkable

INF = math.inf

Vec = tuple[float, ...]


class DimensionMismatch(ValueError):
    """Two operands live in spaces of different dimension."""


def as_vec(x: float | Sequence[float]) -> Vec:
    """Coerce ``x`` to a tuple of finite floats (a scalar becomes length 1)."""
    if isinstance(x, (int, float)):
        entries = (float(x),)
    else:
        entries = tuple(float(c) for c in x)
    if not entries:
        raise ValueError("a vector needs at least one entry")
    for c in entries:
        if not math.isfinite(c):
            raise ValueError(f"vector entries must be finite, got {c!r}")
    return entries


def norm(x: float | Sequence[float]) -> float:
    if isinstance(x, (int, float)):
        return abs(float(x))
    return math.hypot(*x)


def dot(x, y) -> float:
    xs = isinstance(x, (int, float))
    ys = isinstance(y, (int, float))
    if xs and ys:
        return float(x) * float(y)
    if xs or ys or len(x) != len(y):
        raise DimensionMismatch(f"incompatible operands: {x!r} vs {y!r}")
    return sum(a * b for a, b in zip(x, y))


def add(x, y):
    if isinstance(x, (int, float)):
        return float(x) + float(y)
    if len(x) != len(y):
        raise DimensionMismatch(f"incompatible operands: {x!r} vs {y!r}")
    return tuple(a + b for a, b in zip(x, y))


def sub(x, y):
    if isinstance(x, (int, float)):
        return float(x) - float(y)
    if len(x) != len(y):
        raise DimensionMismatch(f"incompatible operands: {x!r} vs {y!r}")
    return tuple(a - b for a, b in zip(x, y))


def scale(x, a: float):
    if isinstance(x, (int, float)):
        return float(x) * a
    return tuple(c * a for c in x)


def dist(x, y) -> float:
    return norm(sub(x, y))


def zeros_like(x):
    if isinstance(x, (int, float)):
        return 0.0
    return tuple(0.0 for _ in x)


class SignClass(Enum):
    """Range class of the conjugate of a base function.

    The class decides which branch of the perspective-prox machinery
    applies: nonnegative conjugates pair with lower-semicontinuous ``-s``,
    nonpositive ones with lower-semicontinuous ``s``, and zero-or-infinity
    conjugates use the decoupled product formula.
    """

    NONNEGATIVE_CONJUGATE = "nonnegative"
    ZERO_INFTY_CONJUGATE = "zero-infinity"
    NONPOSITIVE_CONJUGATE = "nonpositive"


class CaseKind(Enum):
    NEG_S_LOWER = "neg-s-lower"  # -s is proper lsc convex
    S_LOWER = "s-lower"          # s is proper lsc convex


@runtime_checkable
class ProxCapable(Protocol):
    """A convex function together with its scaled prox family.

    ``prox(gamma, x)`` is the proximal point of ``gamma * f`` at ``x`` for
    ``gamma > 0``; ``proj_cl_dom`` is the projection onto the closure of
    the domain, which is the ``gamma -> 0`` member of the family.
    """

    def eval(self, x): ...

    def prox(self, gamma: float, x): ...

    def proj_cl_dom(self, x): ...


@runtime_checkable
class BaseFunction(Protocol):
    """Contract for a base function phi supplied to a perspective pair.

    Only conjugate-side ingredients are required by the solver: phi itself
    and phi* evaluations, the prox of ``gamma * phi*``, the projection
    onto ``cl dom phi*``, the recession function, and the declared sign
    class of phi*.  Catalog instances also expose ``prox_primal`` (the
    prox of ``gamma * phi``), used by the decoupled case and by the
    Moreau-identity cross-checks.
    """

    sign_class: SignClass

    def eval(self, x: Vec) -> float: ...

    def conj_eval(self, xstar: Vec) -> float: ...

    def prox_conj(self, gamma: float, xstar: Vec) -> Vec: ...

    def proj_dom_conj(self, xstar: Vec) -> Vec: ...

    def rec_eval(self, x: Vec) -> float: ...


@runtime_checkable
class ScalingFunction(Protocol):
    """Contract for a scaling function s on a one-dimensional scale space.

    ``env_eval`` is the convex envelope the solver works with: the lower
    envelope of ``-s`` when ``case_kind`` is NEG_S_LOWER, the upper
    envelope of ``s`` when it is S_LOWER.  ``prox_env(w, y)`` is the prox
    of ``w * envelope`` (projection onto the closed envelope domain when
    ``w == 0``), and ``env_conj_eval`` is the envelope's convex conjugate,
    needed to evaluate the conjugate of the perspective.
    """

    case_kind: CaseKind

    def eval(self, y: float) -> float: ...

    def env_eval(self, y: float) -> float: ...

    def env_conj_eval(self, ystar: float) -> float: ...

    def prox_env(self, weight: float, y: float) -> float: ...

    def proj_cl_S(self, y: float) -> float: ...

    def proj_cl_conv_S(self, y: float) -> float: ...

    def support_cl_conv_S(self, ystar: float) -> float: ...


def fenchel_young_gap(f, x, xstar) -> float:
    """Return ``f(x) + f*(x*) - <x, x*>``.

    Nonnegative for any proper ``f``; zero exactly when ``x*`` is a
    subgradient of ``f`` at ``x``.  ``f`` must expose ``eval`` and
    ``conj_eval``.
    """
    inner = dot(x, xstar)  # raises on dimension mismatch before any eval
    val = f.eval(x)
    conj = f.conj_eval(xstar)
    if val == INF or conj == INF:
        return INF
    return val + conj - inner
