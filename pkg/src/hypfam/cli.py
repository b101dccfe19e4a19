"""Command-line front end: evaluate, trace curves, decide order, verify.

Exit codes: 0 success/pass, 1 semantic negative (violated filtration,
failed verification), 2 usage or domain error, 3 numeric failure.
Output is CSV (header, comma separator, LF endings) for value streams and
JSON (stable key order) for reports; identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import List, Optional

import numpy as np

from .config import EvalConfig
from .curves import CurveKind, ParamPoint, s_star, sample_curve, t_backward, t_forward, t_sharp
from .errors import ConvergenceError, DomainError
from .order import ORDER_TOL, filtration_check, includes, quasi_extrema
from .special import F, g, hyp2f1_1s, psi1, psi2, xi0, xi0_prime, xi1, xi2, xi3
from . import verify as verify_mod

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

_SCALAR_FUNCS = {
    "xi0": xi0,
    "xi1": xi1,
    "xi2": xi2,
    "xi3": xi3,
    "xi0p": xi0_prime,
    "F": F,
    "g": g,
}


def _fmt(x: float, precision: int) -> str:
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if x == int(x):
        return str(int(x))
    return f"{x:.{precision}f}"


class _Writer:
    def __init__(self, path: Optional[str]):
        self._path = path
        self._own = False
        self._fh = None

    def __enter__(self):
        if self._path in (None, "-"):
            self._fh = sys.stdout
        else:
            self._fh = open(self._path, "w", newline="")
            self._own = True
        return self

    def __exit__(self, *exc):
        if self._own:
            self._fh.close()
        return False

    def line(self, text: str) -> None:
        self._fh.write(text + "\n")


def _env_float(name: str, fallback: float) -> float:
    raw = os.environ.get(name)
    return float(raw) if raw else fallback


def _build_config(args) -> EvalConfig:
    quad = args.quad_tol if args.quad_tol is not None else _env_float("QUAD_TOL", 1e-12)
    series = args.series_tol if args.series_tol is not None else _env_float("SERIES_TOL", 1e-15)
    return EvalConfig(quad_tol=quad, series_tol=series)


def _resolve_precision(args) -> int:
    if args.precision is not None:
        precision = args.precision
    else:
        raw = os.environ.get("PRECISION")
        precision = int(raw) if raw else 12
    if not 1 <= precision <= 17:
        raise DomainError("precision must be between 1 and 17")
    return precision


def _grid_from_args(args) -> List[float]:
    if args.s is not None:
        if args.smin is not None or args.smax is not None or args.n is not None:
            raise DomainError("give --s or the --smin/--smax/--n trio, not both")
        return [args.s]
    if args.smin is None or args.smax is None or args.n is None:
        raise DomainError("need --s or all of --smin/--smax/--n")
    if args.n < 1 or args.smax < args.smin:
        raise DomainError("bad grid specification")
    if args.n == 1:
        return [args.smin]
    space = np.geomspace if args.log else np.linspace
    return [float(v) for v in space(args.smin, args.smax, args.n)]


def _cmd_eval(args, cfg, precision, out) -> int:
    points = _grid_from_args(args)
    if args.which == "hyp":
        if args.z_re is None:
            raise DomainError("hyp needs --z-re (and optionally --z-im)")
        z = complex(args.z_re, args.z_im)
        for s in points:
            v = hyp2f1_1s(s, z, cfg)
            out.line(f"{_fmt(s, precision)},{_fmt(v.real, precision)},{_fmt(v.imag, precision)}")
    elif args.which in ("psi1", "psi2"):
        fn = psi1 if args.which == "psi1" else psi2
        for s in points:
            v = complex(fn(s, cfg))
            out.line(f"{_fmt(s, precision)},{_fmt(v.real, precision)},{_fmt(v.imag, precision)}")
    else:
        fn = _SCALAR_FUNCS[args.which]
        for s in points:
            out.line(f"{_fmt(s, precision)},{_fmt(fn(s, cfg), precision)}")
    return EXIT_OK


def _cmd_curve(args, cfg, precision, out) -> int:
    base = ParamPoint(args.s0, args.t0)
    kind = CurveKind(args.kind)
    if args.n < 1:
        raise DomainError("--n must be positive")
    star = None
    if args.n == 1:
        if args.smin != args.smax:
            raise DomainError("--n 1 requires --smin == --smax")
        t_of = {CurveKind.FORWARD: t_forward, CurveKind.BACKWARD: t_backward, CurveKind.SHARP: t_sharp}
        t = t_of[kind](base, args.smin, cfg)
        if not 0.0 <= t < 1.0:
            raise DomainError("curve leaves the parameter region")
        samples = ((args.smin, t),)
        if kind is CurveKind.BACKWARD:
            star = s_star(base, cfg)
    else:
        cs = sample_curve(kind, base, args.smin, args.smax, args.n, cfg, log_spaced=args.log)
        samples = cs.samples
        star = cs.s_star
    if kind is CurveKind.BACKWARD:
        out.line(f"# s_star={_fmt(star, precision)}")
    out.line("s,t")
    for sv, tv in samples:
        out.line(f"{_fmt(sv, precision)},{_fmt(tv, precision)}")
    return EXIT_OK


def _cmd_include(args, cfg, precision, out) -> int:
    result = includes(ParamPoint(args.s1, args.t1), ParamPoint(args.s2, args.t2), cfg)
    out.line(f"{result.relation.value} margin={_fmt(result.margin, precision)}")
    return EXIT_OK


def _read_path_csv(path: str) -> List[tuple]:
    if path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        try:
            with open(path) as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            raise DomainError(f"cannot read {path}: {exc}") from exc
    rows = [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or rows[0].lower() != "s,t":
        raise DomainError("expected CSV with header 's,t'")
    points = []
    for ln in rows[1:]:
        parts = ln.split(",")
        if len(parts) != 2:
            raise DomainError(f"malformed CSV row: {ln!r}")
        try:
            points.append((float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise DomainError(f"malformed CSV row: {ln!r}") from exc
    return points


def _cmd_filtration(args, cfg, precision, out) -> int:
    path = _read_path_csv(args.csv)
    report = filtration_check(path, cfg, tol=args.tol)
    violation = None
    if report.first_violation is not None:
        v = report.first_violation
        violation = {
            "index": v.index,
            "s_lo": v.s_lo,
            "s_hi": v.s_hi,
            "t_hi": v.t_hi,
            "threshold": v.threshold,
        }
    payload = {
        "suite": "filtration",
        "config": _config_json(cfg),
        "n_pairs_checked": report.n_pairs_checked,
        "first_violation": violation,
        "pass": report.is_filtration,
    }
    out.line(json.dumps(payload, indent=2))
    return EXIT_OK if report.is_filtration else EXIT_NEGATIVE


def _cmd_quasi(args, cfg, precision, out) -> int:
    kind = CurveKind.QUASI_SUP if args.kind == "sup" else CurveKind.QUASI_INF
    result = quasi_extrema(
        ParamPoint(args.s1, args.t1),
        ParamPoint(args.s2, args.t2),
        kind,
        s_min=args.smin,
        s_max=args.smax,
        n=args.n,
        cfg=cfg,
        log_spaced=args.log,
    )
    out.line("s,t")
    if result.comparable:
        p = result.extremum
        out.line(f"{_fmt(p.s, precision)},{_fmt(p.t, precision)}")
    else:
        for sv, tv in result.curve.samples:
            out.line(f"{_fmt(sv, precision)},{_fmt(tv, precision)}")
    return EXIT_OK


def _config_json(cfg: EvalConfig) -> dict:
    return {
        "quad_tol": cfg.quad_tol,
        "series_tol": cfg.series_tol,
        "max_terms": cfg.max_terms,
        "max_depth": cfg.max_depth,
    }


def _report_json(report: verify_mod.VerificationReport, cfg: EvalConfig) -> dict:
    return {
        "suite": report.suite,
        "config": _config_json(cfg),
        "grid": report.grid,
        "checks": [
            {"name": c.name, "margin": c.margin, "pass": c.passed} for c in report.checks
        ],
        "pass": report.passed,
    }


def _appendix_json(report: verify_mod.RootCountReport, cfg: EvalConfig) -> dict:
    s1, s2, s3 = report.step1, report.step2, report.step3
    checks = [
        {"name": "psi2-psi1 positive on (0,0.4]", "margin": s1.min_gap, "pass": s1.passed},
        {
            "name": "printed bracket at x=10",
            "margin": min(0.261 - s2.psi1_at_10, s2.psi2_at_10 - 0.266),
            "pass": s2.printed_bracket_ok,
        },
        {
            "name": "single sign change in (10,1e6]",
            "margin": float(1 - abs(len(s2.sign_brackets) - 1)),
            "pass": len(s2.sign_brackets) == 1,
        },
        {
            "name": "monotone transforms beyond 10",
            "margin": min(s2.transform_up_margin, s2.transform_down_margin),
            "pass": s2.transform_up_margin > 0 and s2.transform_down_margin > 0,
        },
        {
            "name": "rectangle count zero",
            "margin": 0.25 - abs(s3.contour_value - s3.rounded_count),
            "pass": s3.passed,
        },
    ]
    return {
        "suite": "appendix",
        "config": _config_json(cfg),
        "checks": checks,
        "details": {
            "step1": {
                "n_grid": s1.n_grid,
                "min_gap": s1.min_gap,
                "min_phi": s1.min_phi,
                "min_bound_margin": s1.min_bound_margin,
            },
            "step2": {
                "psi1_at_10": s2.psi1_at_10,
                "psi2_at_10": s2.psi2_at_10,
                "sign_brackets": [list(b) for b in s2.sign_brackets],
                "root": s2.root,
            },
            "step3": {
                "rectangle": list(s3.rectangle),
                "contour_value": {"re": s3.contour_value.real, "im": s3.contour_value.imag},
                "rounded_count": s3.rounded_count,
                "boundary_min_abs": s3.boundary_min_abs,
            },
            "total_count": report.total_count,
        },
        "pass": report.passed,
    }


def _cmd_verify(args, cfg, precision, out) -> int:
    names = ["appendix", "xi", "curves", "witness"] if args.suite == "all" else [args.suite]
    payloads = []
    ok = True
    for name in names:
        if name == "appendix":
            rep = verify_mod.appendix_pipeline(cfg)
            payloads.append(_appendix_json(rep, cfg))
            ok = ok and rep.passed
        elif name == "xi":
            rep = verify_mod.xi_theorem_suite(cfg=cfg)
            payloads.append(_report_json(rep, cfg))
            ok = ok and rep.passed
        elif name == "curves":
            rep = verify_mod.curve_order_suite(cfg=cfg)
            payloads.append(_report_json(rep, cfg))
            ok = ok and rep.passed
        else:
            rep = verify_mod.witness_boundary(2.0, 0.5, cfg=cfg)
            payloads.append(_report_json(rep, cfg))
            ok = ok and rep.passed
    if len(payloads) == 1:
        payload = payloads[0]
    else:
        payload = {"suite": "all", "config": _config_json(cfg), "reports": payloads, "pass": ok}
    out.line(json.dumps(payload, indent=2))
    return EXIT_OK if ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypfam",
        description="Evaluate the xi/psi special functions, trace inclusion "
        "curves, decide order queries and run verification suites.",
    )
    parser.add_argument("--quad-tol", type=float, default=None,
                        help="absolute quadrature tolerance (env QUAD_TOL, default 1e-12)")
    parser.add_argument("--series-tol", type=float, default=None,
                        help="series truncation tolerance (env SERIES_TOL, default 1e-15)")
    parser.add_argument("--precision", type=int, default=None,
                        help="output decimal digits, 1-17 (env PRECISION, default 12)")
    parser.add_argument("--out", default=None, help="output file (default stdout)")
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate one function on a point or grid")
    pe.add_argument("--which", required=True,
                    choices=["xi0", "xi1", "xi2", "xi3", "xi0p", "F", "g", "psi1", "psi2", "hyp"])
    pe.add_argument("--s", type=float, default=None, help="single evaluation point")
    pe.add_argument("--smin", type=float, default=None)
    pe.add_argument("--smax", type=float, default=None)
    pe.add_argument("--n", type=int, default=None)
    pe.add_argument("--log", action="store_true", help="log-spaced grid")
    pe.add_argument("--z-re", type=float, default=None, help="Re z for --which hyp")
    pe.add_argument("--z-im", type=float, default=0.0, help="Im z for --which hyp")

    pc = sub.add_parser("curve", help="emit curve samples as CSV")
    pc.add_argument("--kind", required=True, choices=["forward", "backward", "sharp"])
    pc.add_argument("--s0", type=float, required=True)
    pc.add_argument("--t0", type=float, required=True)
    pc.add_argument("--smin", type=float, required=True)
    pc.add_argument("--smax", type=float, required=True)
    pc.add_argument("--n", type=int, required=True)
    pc.add_argument("--log", action="store_true", help="log-spaced grid")

    pi = sub.add_parser("include", help="decide inclusion between two classes")
    pi.add_argument("s1", type=float)
    pi.add_argument("t1", type=float)
    pi.add_argument("s2", type=float)
    pi.add_argument("t2", type=float)

    pf = sub.add_parser("filtration", help="check a sampled path (CSV with header s,t)")
    pf.add_argument("csv", help="CSV path, or '-' for stdin")
    pf.add_argument("--tol", type=float, default=ORDER_TOL)

    pq = sub.add_parser("quasi", help="quasi-supremum/-infimum of a pair")
    pq.add_argument("kind", choices=["sup", "inf"])
    pq.add_argument("s1", type=float)
    pq.add_argument("t1", type=float)
    pq.add_argument("s2", type=float)
    pq.add_argument("t2", type=float)
    pq.add_argument("--smin", type=float, default=None)
    pq.add_argument("--smax", type=float, default=None)
    pq.add_argument("--n", type=int, default=50)
    pq.add_argument("--log", action="store_true")

    pv = sub.add_parser("verify", help="run a verification suite, JSON report")
    pv.add_argument("suite", choices=["appendix", "xi", "curves", "witness", "all"])

    return parser


_DISPATCH = {
    "eval": _cmd_eval,
    "curve": _cmd_curve,
    "include": _cmd_include,
    "filtration": _cmd_filtration,
    "quasi": _cmd_quasi,
    "verify": _cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        precision = _resolve_precision(args)
        cfg = _build_config(args)
        with _Writer(args.out) as out:
            return _DISPATCH[args.command](args, cfg, precision, out)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
