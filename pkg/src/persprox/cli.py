"""Command-line front end.

Subcommands: ``eval``, ``prox``, ``trace-root``, ``validate``,
``demo-concomitant``.  Problem and point descriptions are JSON, inline or
from a file, or a single document on standard input with keys ``spec``,
``point``, ``demo``.  Infinite values serialize as the strings "+inf" /
"-inf".  Exit codes: 0 ok, 1 validation failure, 2 bad input, 3 solver
failure, 4 oracle failure.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from .catalog import HuberBase, SqrtScaling, make_base, make_scaling
from .core import INF, SignClass
from .oracle import OracleConfig, OracleError, brute_force_prox
from .perspective import (
    PairMismatch,
    PerspectivePair,
    perspective_conj_eval,
    perspective_eval,
    preperspective_eval,
)
from .roots import RootFindError
from .solver import (
    CaseLabel,
    RootConfig,
    classify_case_i,
    classify_case_iii,
    prox_perspective,
    solve_eta_case_i,
    solve_eta_case_iii,
)
from .splitting import DemoSpec, StepSizeError, run_concomitant_demo

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_BAD_INPUT = 2
EXIT_SOLVER = 3
EXIT_ORACLE = 4

_ROOT_KEYS = {"eta_tol": float, "residual_tol": float, "max_iter": int, "classify_tol": float}
_ORACLE_KEYS = {
    "radius_factor": float,
    "coarse_points_per_dim": int,
    "refine_tol": float,
    "max_refine_iters": int,
}

DEVIATION_LIMIT = 5e-4


class InputError(ValueError):
    pass


def _load_json_arg(text: str | None):
    if text is None:
        return None
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        return json.loads(stripped)
    with open(text, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _jsonable(value):
    if isinstance(value, float):
        if value == INF:
            return "+inf"
        if value == -INF:
            return "-inf"
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def build_problem(data: dict) -> tuple[PerspectivePair, float]:
    try:
        base_cfg = dict(data["base"])
        scaling_cfg = dict(data["scaling"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"spec needs 'base' and 'scaling' objects: {exc}") from exc
    base = make_base(base_cfg.pop("name"), base_cfg)
    scaling = make_scaling(scaling_cfg.pop("name"), scaling_cfg)
    gamma = float(data.get("gamma", 1.0))
    if gamma <= 0.0:
        raise InputError(f"gamma must be positive, got {gamma}")
    dims = data.get("dims", [1, 1])
    n, m = int(dims[0]), int(dims[1])
    if m != 1:
        raise InputError("catalog scalings use a one-dimensional scale space")
    return PerspectivePair(base, scaling, n), gamma


def parse_point(data: dict) -> tuple[tuple[float, ...], float]:
    try:
        x = tuple(float(v) for v in data["x"])
        y = data["y"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"point needs 'x' (array) and 'y': {exc}") from exc
    if isinstance(y, list):
        if len(y) != 1:
            raise InputError("the scale component must be a scalar")
        y = y[0]
    return x, float(y)


def parse_tol_overrides(items) -> tuple[RootConfig, OracleConfig, set[str]]:
    root_kwargs, oracle_kwargs, seen = {}, {}, set()
    for item in items or ():
        key, _, raw = item.partition("=")
        key = key.strip()
        if key in _ROOT_KEYS:
            root_kwargs[key] = _ROOT_KEYS[key](raw)
        elif key in _ORACLE_KEYS:
            oracle_kwargs[key] = _ORACLE_KEYS[key](raw)
        else:
            raise InputError(f"unknown tolerance {key!r}")
        seen.add(key)
    return RootConfig(**root_kwargs), OracleConfig(**oracle_kwargs), seen


def _stdin_document(args) -> dict:
    if getattr(args, "_stdin_doc", None) is None:
        try:
            args._stdin_doc = json.load(sys.stdin)
        except json.JSONDecodeError as exc:
            raise InputError(f"stdin is not valid JSON: {exc}") from exc
    return args._stdin_doc


def _resolve(args, flag: str, key: str):
    data = _load_json_arg(getattr(args, flag, None))
    if data is not None:
        return data
    doc = _stdin_document(args)
    if key not in doc:
        raise InputError(f"missing --{flag} and no {key!r} key on stdin")
    return doc[key]


def _open_out(args):
    if args.out:
        return open(args.out, "w", encoding="utf-8", newline="")
    return sys.stdout


def _emit(args, text: str) -> None:
    out = _open_out(args)
    try:
        out.write(text)
    finally:
        if out is not sys.stdout:
            out.close()


def cmd_eval(args) -> int:
    pair, _ = build_problem(_resolve(args, "spec", "spec"))
    x, y = parse_point(_resolve(args, "point", "point"))
    record = {
        "value": perspective_eval(pair, x, y),
        "preperspective_value": preperspective_eval(pair, x, y),
        "conjugate_value_at_point": perspective_conj_eval(pair, x, y),
    }
    _emit(args, json.dumps(_jsonable(record), sort_keys=True) + "\n")
    return EXIT_OK


def cmd_prox(args) -> int:
    pair, gamma = build_problem(_resolve(args, "spec", "spec"))
    x, y = parse_point(_resolve(args, "point", "point"))
    cfg, _, _ = parse_tol_overrides(args.tol)
    res = prox_perspective(pair, gamma, x, y, cfg)
    record = {
        "p": list(res.p),
        "q": res.q,
        "eta": res.eta,
        "case_label": res.label.value,
        "iterations": res.root_iterations,
        "certificate_gap": res.certificate_gap,
    }
    _emit(args, json.dumps(_jsonable(record), sort_keys=True) + "\n")
    return EXIT_OK


def cmd_trace_root(args) -> int:
    pair, gamma = build_problem(_resolve(args, "spec", "spec"))
    x, y = parse_point(_resolve(args, "point", "point"))
    cfg, _, _ = parse_tol_overrides(args.tol)
    sc = pair.base.sign_class
    if sc is SignClass.ZERO_INFTY_CONJUGATE:
        _emit(args, "closed-form case, no root trace\n")
        return EXIT_OK
    rows: list[tuple[int, float, float, float, float]] = []

    def trace(it, lo, hi, mid, fmid):
        rows.append((it, lo, hi, mid, fmid))

    if sc is SignClass.NONNEGATIVE_CONJUGATE:
        label = classify_case_i(pair, gamma, x, y, cfg)
        if label is not CaseLabel.OMEGA4:
            _emit(args, "closed-form case, no root trace\n")
            return EXIT_OK
        solve_eta_case_i(pair, gamma, x, y, cfg, trace=trace)
    else:
        label = classify_case_iii(pair, gamma, x, y, cfg)
        if label is not CaseLabel.XI4:
            _emit(args, "closed-form case, no root trace\n")
            return EXIT_OK
        solve_eta_case_iii(pair, gamma, x, y, cfg, trace=trace)
    lines = ["iter,eta_lo,eta_hi,eta_mid,T_mid"]
    lines += [f"{it},{lo!r},{hi!r},{mid!r},{fmid!r}" for it, lo, hi, mid, fmid in rows]
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _default_validate_oracle(n: int, overrides: set[str], ocfg: OracleConfig) -> OracleConfig:
    # keep the coarse scan near 3e4 points total unless explicitly overridden;
    # accuracy comes from the golden-section refinement, not the scan
    if "coarse_points_per_dim" in overrides:
        return ocfg
    budget = int(round(3e4 ** (1.0 / (n + 1))))
    points = max(5, min(ocfg.coarse_points_per_dim, budget))
    return OracleConfig(
        radius_factor=ocfg.radius_factor,
        coarse_points_per_dim=points,
        refine_tol=ocfg.refine_tol,
        max_refine_iters=ocfg.max_refine_iters,
    )


def random_point(seed: int, n: int) -> tuple[tuple[float, ...], float]:
    rng = random.Random(seed)
    x = tuple(rng.uniform(-4.0, 4.0) for _ in range(n))
    return x, rng.uniform(-4.0, 4.0)


def _validate_seed(spec_data: dict, seed: int, root_kwargs: dict, oracle_kwargs: dict):
    pair, gamma = build_problem(spec_data)
    cfg = RootConfig(**root_kwargs)
    ocfg = OracleConfig(**oracle_kwargs)
    x, y = random_point(seed, pair.n)
    res = prox_perspective(pair, gamma, x, y, cfg)
    op, oq = brute_force_prox(
        lambda u, v: perspective_eval(pair, u, v), gamma, x, y, ocfg
    )
    dev = math.sqrt(
        sum((a - b) ** 2 for a, b in zip(res.p, op)) + (res.q - oq) ** 2
    )
    return seed, dev, res.certificate_gap, res.root_iterations


def cmd_validate(args) -> int:
    spec_data = _resolve(args, "spec", "spec")
    pair, _ = build_problem(spec_data)
    if pair.n > 3:
        raise InputError("validation supports base dimensions up to 3")
    cfg, ocfg, seen = parse_tol_overrides(args.tol)
    ocfg = _default_validate_oracle(pair.n, seen, ocfg)
    seeds = list(range(args.seeds))
    root_kwargs = {k: getattr(cfg, k) for k in _ROOT_KEYS}
    oracle_kwargs = {k: getattr(ocfg, k) for k in _ORACLE_KEYS}
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(
                pool.map(
                    _validate_seed_star,
                    [(spec_data, s, root_kwargs, oracle_kwargs) for s in seeds],
                )
            )
    else:
        results = [_validate_seed(spec_data, s, root_kwargs, oracle_kwargs) for s in seeds]
    results.sort(key=lambda row: row[0])
    devs = [row[1] for row in results]
    gaps = [row[2] for row in results]
    report = {
        "seeds": len(seeds),
        "max_deviation": max(devs),
        "mean_deviation": sum(devs) / len(devs),
        "worst_certificate_gap": max(gaps),
        "max_iterations": max(row[3] for row in results),
        "deviation_limit": DEVIATION_LIMIT,
    }
    _emit(args, json.dumps(_jsonable(report), sort_keys=True) + "\n")
    return EXIT_OK if report["max_deviation"] <= DEVIATION_LIMIT else EXIT_VALIDATION


def _validate_seed_star(packed):
    return _validate_seed(*packed)


def cmd_demo_concomitant(args) -> int:
    pair, _ = build_problem(_resolve(args, "spec", "spec"))
    demo_data = _load_json_arg(args.demo)
    if demo_data is None:
        demo_data = {"a": [[1.0, 0.0], [0.0, 1.0]], "b": [1.0, 1.0]}
    spec = DemoSpec.from_dict(demo_data)
    if not isinstance(pair.base, HuberBase) or not isinstance(pair.scaling, SqrtScaling):
        raise InputError("the concomitant demo runs on the huber/sqrt pair")
    cfg, _, _ = parse_tol_overrides(args.tol)
    trace = run_concomitant_demo(pair, spec, cfg)
    lines = ["iter,objective,step_norm"]
    lines += [f"{it},{obj!r},{step!r}" for it, obj, step in trace.rows]
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="persprox",
        description="Proximity operators of perspective functions with nonlinear scaling",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, point=True):
        p.add_argument("--spec", help="problem spec: inline JSON or a file path")
        if point:
            p.add_argument("--point", help="evaluation point: inline JSON or a file path")
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument(
            "--tol", action="append", metavar="KEY=VALUE",
            help="override a solver or oracle tolerance (repeatable)",
        )

    common(sub.add_parser("eval", help="evaluate the perspective and its conjugate"))
    common(sub.add_parser("prox", help="compute the perspective prox"))
    common(sub.add_parser("trace-root", help="CSV trace of the multiplier root-find"))

    v = sub.add_parser("validate", help="compare the solver against the brute-force oracle")
    common(v, point=False)
    v.add_argument("--seeds", type=int, default=200)
    v.add_argument("--workers", type=int, default=1)

    d = sub.add_parser("demo-concomitant", help="forward-backward location/scale fit")
    common(d, point=False)
    d.add_argument("--demo", help="demo problem: inline JSON or a file path")
    return parser


_HANDLERS = {
    "eval": cmd_eval,
    "prox": cmd_prox,
    "trace-root": cmd_trace_root,
    "validate": cmd_validate,
    "demo-concomitant": cmd_demo_concomitant,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._stdin_doc = None
    try:
        return _HANDLERS[args.command](args)
    except (InputError, PairMismatch, StepSizeError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except RootFindError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except OracleError as exc:
        print(f"oracle failure: {exc}", file=sys.stderr)
        return EXIT_ORACLE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
