"""Extremal and sharp-inclusion curves in the (s, t) parameter region.

A class of the family is identified with its parameter point (s, t) in
[0, inf] x [0, 1).  Three curves organize the inclusion structure around a
base point P0 = (s0, t0):

* forward:  t0 + (1-t0)(1 - s0/s) xi0(s0) for s >= s0 -- the largest t at s
  whose class still contains the base class (inclusion sharp on the curve);
* backward: its inverse for s <= s0, clamped to 0 left of s_star, the root
  of (1 - s/s0) xi0(s) = t0;
* sharp:    the solution of dt/(1-t) = xi0(s) ds/s through P0, invariant
  under moving the base point along itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np
from numpy.polynomial import chebyshev

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import ConvergenceError, DomainError
from .quadrature import Bracket, find_root
from .special import xi0


class CurveKind(str, Enum):
    FORWARD = "forward"
    BACKWARD = "backward"
    SHARP = "sharp"
    QUASI_SUP = "quasi_sup"
    QUASI_INF = "quasi_inf"


@dataclass(frozen=True)
class ParamPoint:
    """A point (s, t) with s in [0, inf] and t in [0, 1].

    s = 0 or t = 1 denote the degenerate single-member class."""

    s: float
    t: float

    def __post_init__(self):
        if math.isnan(self.s) or self.s < 0.0:
            raise DomainError(f"s out of range: {self.s}")
        if math.isnan(self.t) or not 0.0 <= self.t <= 1.0:
            raise DomainError(f"t out of range: {self.t}")

    @property
    def degenerate(self) -> bool:
        return self.s == 0.0 or self.t == 1.0


@dataclass(frozen=True)
class CurveSamples:
    """Ordered samples of one named curve plus provenance metadata."""

    kind: CurveKind
    base: Tuple[ParamPoint, ...]
    samples: Tuple[Tuple[float, float], ...]
    cfg: EvalConfig
    s_star: Optional[float] = None  # backward curves only
    clamped: bool = False  # True when any backward sample was clipped at 0
    log_spaced: bool = False

    def __post_init__(self):
        ss = [p[0] for p in self.samples]
        if any(b < a for a, b in zip(ss, ss[1:])):
            raise DomainError("samples must be nondecreasing in s")
        if any(not 0.0 <= p[1] < 1.0 for p in self.samples):
            raise DomainError("curve samples must have t in [0, 1)")


def _require_base(p0: ParamPoint) -> None:
    if p0.degenerate or math.isinf(p0.s):
        raise DomainError("curve base point needs 0 < s < inf and t < 1")


def grid(lo: float, hi: float, n: int, log_spaced: bool = False) -> list[float]:
    """n-point sampling grid over [lo, hi], even or logarithmic."""
    if n < 2:
        raise DomainError("need at least two samples")
    if math.isnan(lo) or math.isnan(hi) or lo > hi:
        raise DomainError(f"bad sample range [{lo}, {hi}]")
    if log_spaced:
        if lo <= 0.0:
            raise DomainError("log spacing requires positive s")
        return [float(v) for v in np.geomspace(lo, hi, n)]
    return [float(v) for v in np.linspace(lo, hi, n)]


def t_forward(p0: ParamPoint, s: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """t0 + (1-t0)(1 - s0/s) xi0(s0) for s >= s0; s = inf gives the limit."""
    _require_base(p0)
    if math.isnan(s) or s < p0.s:
        raise DomainError(f"forward curve needs s >= {p0.s}, got {s}")
    if s == p0.s:
        return p0.t
    ratio = 0.0 if math.isinf(s) else p0.s / s
    return p0.t + (1.0 - p0.t) * (1.0 - ratio) * xi0(p0.s, cfg)


def t_backward(p0: ParamPoint, s: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Inverse of the forward relation on (0, s0], clamped to 0 below s_star.

    Solves t0 = t + (1-t)(1 - s/s0) xi0(s) for t; for s <= s_star the
    solution is negative and every t in [0, 1) already yields inclusion,
    so 0 is returned.
    """
    _require_base(p0)
    if math.isnan(s) or not 0.0 < s <= p0.s:
        raise DomainError(f"backward curve needs 0 < s <= {p0.s}, got {s}")
    if s == p0.s:
        return p0.t
    c = (1.0 - s / p0.s) * xi0(s, cfg)
    raw = (p0.t - c) / (1.0 - c)
    return raw if raw > 0.0 else 0.0


def s_star(p0: ParamPoint, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Left endpoint of the backward curve: root of (1 - s/s0) xi0(s) = t0."""
    _require_base(p0)
    if p0.t == 0.0:
        return p0.s

    def gap(s: float) -> float:
        return (1.0 - s / p0.s) * xi0(s, cfg) - p0.t

    lo = p0.s * 1e-9
    f_lo = gap(lo)
    while f_lo <= 0.0:
        lo *= 0.0625
        if lo < 1e-300:
            raise ConvergenceError("could not bracket s_star")
        f_lo = gap(lo)
    return find_root(gap, Bracket(lo, p0.s, f_lo, -p0.t), tol=1e-12 * max(1.0, p0.s))


class _SharpKernel:
    """Chebyshev antiderivative of sigma -> xi0(sigma)/sigma on a log window.

    In tau = ln(sigma) the weight disappears:
    int xi0(sigma)/sigma d sigma = int xi0(e^tau) d tau, and xi0(e^tau) is
    analytic, so interpolation converges geometrically.  The node count
    doubles until the full-window integral moves by less than the
    quadrature tolerance; xi0 values are memoized per invocation through
    the module-level cache.
    """

    _DEGREES = (16, 32, 64, 128, 256)

    def __init__(self, s_lo: float, s_hi: float, cfg: EvalConfig):
        if not (0.0 < s_lo <= s_hi) or math.isinf(s_hi):
            raise DomainError("sharp-curve window needs 0 < s_lo <= s_hi < inf")
        self._a = math.log(s_lo)
        self._b = math.log(s_hi)
        self._anti = None
        if self._a == self._b:
            return
        half = 0.5 * (self._b - self._a)
        mid = 0.5 * (self._b + self._a)

        def on_unit(u):
            return np.array([xi0(math.exp(mid + half * float(t)), cfg) for t in np.atleast_1d(u)])

        tol = max(cfg.quad_tol, 1e-14)
        prev = None
        for deg in self._DEGREES:
            coef = chebyshev.chebinterpolate(on_unit, deg)
            total = half * sum(2.0 * c / (1.0 - k * k) for k, c in enumerate(coef) if k % 2 == 0)
            if prev is not None and abs(total - prev) < tol:
                self._half = half
                self._mid = mid
                self._anti = chebyshev.chebint(coef)
                return
            prev = total
        raise ConvergenceError("sharp-curve kernel did not converge")

    def integral(self, s_from: float, s_to: float) -> float:
        """Signed int_{s_from}^{s_to} xi0(sigma)/sigma d sigma inside the window."""
        if self._anti is None or s_from == s_to:
            return 0.0
        u1 = (math.log(s_from) - self._mid) / self._half
        u2 = (math.log(s_to) - self._mid) / self._half
        return self._half * float(chebyshev.chebval(u2, self._anti) - chebyshev.chebval(u1, self._anti))


def t_sharp(p0: ParamPoint, s: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """1 - (1-t0) exp(-int_{s0}^{s} xi0(sigma)/sigma d sigma).

    Defined on both sides of s0 and strictly increasing in s.  Left of the
    curve's zero crossing the formula value is negative; it is returned as
    computed, the point then lies outside the parameter region.
    """
    _require_base(p0)
    if math.isnan(s) or not (0.0 < s < math.inf):
        raise DomainError(f"sharp curve needs finite s > 0, got {s}")
    if s == p0.s:
        return p0.t
    kern = _SharpKernel(min(s, p0.s), max(s, p0.s), cfg)
    return 1.0 - (1.0 - p0.t) * math.exp(-kern.integral(p0.s, s))


def sample_curve(
    kind: CurveKind,
    base: ParamPoint,
    s_min: float,
    s_max: float,
    n: int,
    cfg: EvalConfig = DEFAULT_CONFIG,
    log_spaced: bool = False,
) -> CurveSamples:
    """Evaluate one named curve on an n-point grid (n >= 2).

    The sharp curve builds a single integral kernel covering the whole
    range, so large n costs little more than one t_sharp call.
    """
    if kind not in (CurveKind.FORWARD, CurveKind.BACKWARD, CurveKind.SHARP):
        raise DomainError("quasi curves are produced by the order module")
    _require_base(base)
    if not (s_min > 0.0 and math.isfinite(s_max)):
        raise DomainError(f"bad sample range [{s_min}, {s_max}]")
    ss = grid(s_min, s_max, n, log_spaced)
    star = None
    clamped = False
    if kind is CurveKind.FORWARD:
        ts = [t_forward(base, v, cfg) for v in ss]
    elif kind is CurveKind.BACKWARD:
        star = s_star(base, cfg)
        ts = [t_backward(base, v, cfg) for v in ss]
        clamped = any(v < star for v in ss)
    else:
        kern = _SharpKernel(min(s_min, base.s), max(s_max, base.s), cfg)
        ts = [1.0 - (1.0 - base.t) * math.exp(-kern.integral(base.s, v)) for v in ss]
        for v, t in zip(ss, ts):
            if t < 0.0:
                raise DomainError(f"sharp curve leaves the parameter region at s={v}")
    return CurveSamples(
        kind,
        (base,),
        tuple(zip(ss, ts)),
        cfg,
        s_star=star,
        clamped=clamped,
        log_spaced=log_spaced,
    )
