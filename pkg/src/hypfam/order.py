"""Inclusion decisions, the filtration criterion and quasi-extrema.

Inclusion between two classes reduces to one threshold comparison: with
s1 < s2, the class at (s1, t1) sits inside the class at (s2, t2) exactly
when t2 <= t_forward((s1,t1), s2), and the reverse inclusion is never
possible.  Equal s orders by t alone (larger t, smaller class).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from .config import DEFAULT_CONFIG, EvalConfig
from .curves import CurveKind, CurveSamples, ParamPoint, grid, t_backward, t_forward
from .errors import DomainError

# absolute slack for deciding boundary equality on the threshold; inclusion
# holds at the exact threshold, so the comparison is inclusive
ORDER_TOL = 1e-10


class Relation(Enum):
    EQUAL = "Equal"
    SUBSET = "Subset"
    SUPERSET = "Superset"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class InclusionResult:
    """Relation plus the signed distance of the higher-s point's t from the
    inclusion threshold (>= 0 means the inclusion holds; inf for inclusions
    forced by a degenerate point)."""

    relation: Relation
    margin: float


def includes(
    p1: ParamPoint,
    p2: ParamPoint,
    cfg: EvalConfig = DEFAULT_CONFIG,
    tol: float = ORDER_TOL,
) -> InclusionResult:
    """Decide the inclusion relation between the classes at p1 and p2.

    Subset means p1's class is contained in p2's.  Degenerate points
    (s = 0 or t = 1) are the single-member class, inside everything.
    Points at s = inf are limit objects and not ordered here.
    """
    if math.isinf(p1.s) or math.isinf(p2.s):
        raise DomainError("inclusion queries exclude s = inf")
    if p1.degenerate or p2.degenerate:
        if p1.degenerate and p2.degenerate:
            return InclusionResult(Relation.EQUAL, 0.0)
        if p1.degenerate:
            return InclusionResult(Relation.SUBSET, math.inf)
        return InclusionResult(Relation.SUPERSET, math.inf)
    if p1 == p2:
        return InclusionResult(Relation.EQUAL, 0.0)
    # candidate inclusion always runs low-s to high-s (same s: high t first)
    if (p1.s, -p1.t) <= (p2.s, -p2.t):
        low, high, low_is_p1 = p1, p2, True
    else:
        low, high, low_is_p1 = p2, p1, False
    threshold = t_forward(low, high.s, cfg)
    margin = threshold - high.t
    if margin >= -tol:
        relation = Relation.SUBSET if low_is_p1 else Relation.SUPERSET
    else:
        relation = Relation.INCOMPARABLE
    return InclusionResult(relation, margin)


@dataclass(frozen=True)
class FiltrationViolation:
    index: int
    s_lo: float
    s_hi: float
    t_hi: float
    threshold: float


@dataclass(frozen=True)
class FiltrationReport:
    is_filtration: bool
    first_violation: Optional[FiltrationViolation]
    n_pairs_checked: int


def filtration_check(
    path: Sequence[Tuple[float, float]],
    cfg: EvalConfig = DEFAULT_CONFIG,
    tol: float = ORDER_TOL,
) -> FiltrationReport:
    """Is the sampled one-parameter family ordered by inclusion?

    Checks every consecutive pair against the sharp threshold
    t_{j+1} <= t_forward((s_j, t_j), s_{j+1}); for a finely sampled
    differentiable path this is the discrete form of the slope bound
    T'(s) <= (1 - T(s)) xi0(s)/s.  Stops at the first violation.
    """
    pts = [(float(s), float(t)) for s, t in path]
    if not pts:
        raise DomainError("empty path")
    for j, (s, t) in enumerate(pts):
        if not (0.0 < s and math.isfinite(s)) or not 0.0 <= t < 1.0:
            raise DomainError(f"path point {j} outside the parameter region")
    for (s1, _), (s2, _) in zip(pts, pts[1:]):
        if not s2 > s1:
            raise DomainError("path s-values must be strictly increasing")
    checked = 0
    for j in range(len(pts) - 1):
        s_lo, t_lo = pts[j]
        s_hi, t_hi = pts[j + 1]
        threshold = t_forward(ParamPoint(s_lo, t_lo), s_hi, cfg)
        checked += 1
        if t_hi > threshold + tol:
            return FiltrationReport(
                False, FiltrationViolation(j, s_lo, s_hi, t_hi, threshold), checked
            )
    return FiltrationReport(True, None, checked)


@dataclass(frozen=True)
class QuasiExtremaResult:
    """Either the single extremum (comparable pair) or a sampled tau curve."""

    kind: CurveKind
    comparable: bool
    extremum: Optional[ParamPoint]
    curve: Optional[CurveSamples]


def quasi_extrema(
    p1: ParamPoint,
    p2: ParamPoint,
    kind: CurveKind,
    s_min: Optional[float] = None,
    s_max: Optional[float] = None,
    n: int = 50,
    cfg: EvalConfig = DEFAULT_CONFIG,
    log_spaced: bool = False,
) -> QuasiExtremaResult:
    """Quasi-suprema or quasi-infima of a pair of classes.

    An ordered pair has its sup/inf inside the family and that single point
    is returned.  Otherwise (possible only with s1 < s2 and t2 above the
    forward threshold) the minimal upper bounds form the curve
    tau1(s) = min of the two forward curves on s >= s2, and the maximal
    lower bounds the curve tau2(s) = max of the two clamped backward curves
    on s <= s1.  Arguments are reordered canonically by (s, t), so the
    result does not depend on call order.
    """
    if kind not in (CurveKind.QUASI_SUP, CurveKind.QUASI_INF):
        raise DomainError("kind must be QUASI_SUP or QUASI_INF")
    a, b = sorted((p1, p2), key=lambda p: (p.s, p.t))
    relation = includes(a, b, cfg).relation
    if relation is not Relation.INCOMPARABLE:
        if relation is Relation.SUPERSET:
            small, big = b, a
        else:
            small, big = a, b
        extremum = big if kind is CurveKind.QUASI_SUP else small
        return QuasiExtremaResult(kind, True, extremum, None)
    # incomparable implies a.s < b.s strictly
    if kind is CurveKind.QUASI_SUP:
        lo = b.s if s_min is None else max(b.s, s_min)
        if s_max is None or not lo <= s_max:
            raise DomainError("quasi-supremum needs a sample range with s_max >= s2")
        ss = grid(lo, s_max, n, log_spaced)
        ts = [min(t_forward(a, v, cfg), t_forward(b, v, cfg)) for v in ss]
    else:
        hi = a.s if s_max is None else min(a.s, s_max)
        if s_min is None or not 0.0 < s_min <= hi:
            raise DomainError("quasi-infimum needs a sample range with 0 < s_min <= s1")
        ss = grid(s_min, hi, n, log_spaced)
        ts = [max(t_backward(a, v, cfg), t_backward(b, v, cfg)) for v in ss]
    curve = CurveSamples(kind, (a, b), tuple(zip(ss, ts)), cfg, log_spaced=log_spaced)
    return QuasiExtremaResult(kind, False, None, curve)
