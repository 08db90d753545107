"""Forward-backward demo: location fitting with a concomitant scale.

Minimizes a smooth least-squares term plus a quadratic scale anchor plus
the (nonsmooth) perspective coupling of residual size and scale, by the
standard gradient-step / prox-step iteration.  The smooth gradient is
analytic; the prox step is the perspective prox at the step size.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .perspective import PerspectivePair, perspective_eval
from .solver import RootConfig, prox_perspective


@dataclass(frozen=True)
class DemoSpec:
    """Problem data for the concomitant-scale fit.

    The smooth part is ``0.5*||A w - b||^2 + 0.5*kappa*(sigma - y0)^2``;
    its gradient Lipschitz constant is ``max(lambda_max(A^T A), kappa)``
    and the step size must satisfy ``tau * L <= 1``.
    """

    a_matrix: tuple[tuple[float, ...], ...]
    b: tuple[float, ...]
    y0: float = 1.0
    kappa: float = 1.0
    tau: float = 0.5
    iterations: int = 500
    w0: tuple[float, ...] | None = None
    sigma0: float = 0.0
    seed: int = 0

    @staticmethod
    def from_dict(data: dict) -> "DemoSpec":
        a = tuple(tuple(float(v) for v in row) for row in data["a"])
        b = tuple(float(v) for v in data["b"])
        w0 = data.get("w0")
        return DemoSpec(
            a_matrix=a,
            b=b,
            y0=float(data.get("y0", 1.0)),
            kappa=float(data.get("kappa", 1.0)),
            tau=float(data.get("tau", 0.5)),
            iterations=int(data.get("iterations", 500)),
            w0=None if w0 is None else tuple(float(v) for v in w0),
            sigma0=float(data.get("sigma0", 0.0)),
            seed=int(data.get("seed", 0)),
        )


class StepSizeError(ValueError):
    """tau exceeds the stability bound 1/L of the smooth part."""


@dataclass(frozen=True)
class DemoTrace:
    rows: tuple[tuple[int, float, float], ...]  # (iteration, objective, step_norm)
    w: tuple[float, ...]
    sigma: float


def smooth_lipschitz(spec: DemoSpec) -> float:
    a = np.asarray(spec.a_matrix, dtype=float)
    gram_top = float(np.linalg.eigvalsh(a.T @ a)[-1]) if a.size else 0.0
    return max(gram_top, spec.kappa)


def run_concomitant_demo(
    pair: PerspectivePair, spec: DemoSpec, cfg: RootConfig = RootConfig()
) -> DemoTrace:
    """Run the forward-backward iteration and record objective and step size.

    The objective is nonincreasing for admissible step sizes; the step
    norm tends to zero as the iterates approach the unique minimizer.
    """
    a = np.asarray(spec.a_matrix, dtype=float)
    b = np.asarray(spec.b, dtype=float)
    if a.ndim != 2 or a.shape[0] != b.shape[0]:
        raise ValueError("design matrix and observations disagree on rows")
    n = a.shape[1]
    if n != pair.n:
        raise ValueError(f"pair expects base dimension {pair.n}, design has {n}")
    lip = smooth_lipschitz(spec)
    if spec.tau <= 0.0 or spec.tau * lip > 1.0 + 1e-12:
        raise StepSizeError(f"tau*L = {spec.tau * lip} exceeds 1")

    w = np.zeros(n) if spec.w0 is None else np.asarray(spec.w0, dtype=float)
    sigma = float(spec.sigma0)

    def objective(wv: np.ndarray, sv: float) -> float:
        resid = a @ wv - b
        smooth = 0.5 * float(resid @ resid) + 0.5 * spec.kappa * (sv - spec.y0) ** 2
        return smooth + perspective_eval(pair, tuple(wv), sv)

    rows = [(0, objective(w, sigma), 0.0)]
    for it in range(1, spec.iterations + 1):
        grad_w = a.T @ (a @ w - b)
        grad_sigma = spec.kappa * (sigma - spec.y0)
        res = prox_perspective(
            pair, spec.tau,
            tuple(w - spec.tau * grad_w), sigma - spec.tau * grad_sigma,
            cfg,
        )
        new_w = np.asarray(res.p, dtype=float)
        step = _step_norm(new_w - w, res.q - sigma)
        w, sigma = new_w, res.q
        rows.append((it, objective(w, sigma), step))
    return DemoTrace(tuple(rows), tuple(float(v) for v in w), sigma)


def _step_norm(dw: np.ndarray, dsigma: float) -> float:
    return float(np.sqrt(float(dw @ dw) + dsigma * dsigma))
