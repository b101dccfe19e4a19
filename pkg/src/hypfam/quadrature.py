"""Adaptive quadrature, bracketed root finding and contour zero counting.

The integrator is a globally adaptive Gauss-Kronrod (G7/K15) scheme: the
panel with the largest K15-G7 discrepancy is bisected until the summed
discrepancy drops below the absolute tolerance.  It accepts real- or
complex-valued integrands of a real variable and never samples interval
endpoints, so integrable endpoint singularities (log-type and the
``s*x**(s-1)`` weight after substitution) are handled by refinement alone.

Everything here is a pure function of its arguments; panel sums are
reduced left to right so repeated runs give identical results.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import ConvergenceError, DomainError

# G7/K15 abscissae and weights on [-1, 1]: (node, Gauss weight, Kronrod weight)
_GK15 = (
    (-0.9914553711208126392069, 0.0, 0.0229353220105292249637),
    (-0.9491079123427585245262, 0.1294849661688696932706, 0.0630920926299785532907),
    (-0.8648644233597690727897, 0.0, 0.1047900103222501838399),
    (-0.7415311855993944398639, 0.2797053914892766679015, 0.1406532597155259187452),
    (-0.5860872354676911302941, 0.0, 0.1690047266392679028266),
    (-0.4058451513773971669066, 0.3818300505051189449504, 0.1903505780647854099133),
    (-0.2077849550078984676007, 0.0, 0.2044329400752988924142),
    (0.0, 0.4179591836734693877551, 0.2094821410847278280130),
    (0.2077849550078984676007, 0.0, 0.2044329400752988924142),
    (0.4058451513773971669066, 0.3818300505051189449504, 0.1903505780647854099133),
    (0.5860872354676911302941, 0.0, 0.1690047266392679028266),
    (0.7415311855993944398639, 0.2797053914892766679015, 0.1406532597155259187452),
    (0.8648644233597690727897, 0.0, 0.1047900103222501838399),
    (0.9491079123427585245262, 0.1294849661688696932706, 0.0630920926299785532907),
    (0.9914553711208126392069, 0.0, 0.0229353220105292249637),
)

_MAX_SEGMENTS = 20000


def _finite(v) -> bool:
    z = complex(v)
    return math.isfinite(z.real) and math.isfinite(z.imag)


def _gk15_panel(f, a: float, b: float):
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    gauss = 0.0
    kron = 0.0
    for x, wg, wk in _GK15:
        y = f(mid + half * x)
        if wg:
            gauss += wg * y
        kron += wk * y
    kron *= half
    gauss *= half
    return kron, abs(kron - gauss)


def integrate(f, a: float, b: float, cfg: EvalConfig = DEFAULT_CONFIG, tol: float | None = None):
    """Integrate f over the finite interval [a, b] to absolute accuracy tol.

    tol defaults to cfg.quad_tol.  Raises ConvergenceError when a panel
    would have to be split beyond cfg.max_depth, when the segment budget is
    exhausted, or when the integrand produces a non-finite sample.
    """
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise DomainError(f"invalid integration interval [{a}, {b}]")
    if tol is None:
        tol = cfg.quad_tol
    val, err = _gk15_panel(f, a, b)
    if not _finite(val):
        raise ConvergenceError("non-finite integrand sample")
    heap = [(-err, 0, a, b, val, 0)]
    total_err = err
    seq = 1
    while total_err > tol:
        neg_err, _, pa, pb, pval, depth = heapq.heappop(heap)
        err_parent = -neg_err
        if depth >= cfg.max_depth:
            raise ConvergenceError("adaptive quadrature depth exhausted")
        mid = 0.5 * (pa + pb)
        if not (pa < mid < pb):
            # interval at floating-point resolution: keep, drop its error claim
            total_err -= err_parent
            heapq.heappush(heap, (0.0, seq, pa, pb, pval, depth))
            seq += 1
            continue
        lval, lerr = _gk15_panel(f, pa, mid)
        rval, rerr = _gk15_panel(f, mid, pb)
        if not (_finite(lval) and _finite(rval)):
            raise ConvergenceError("non-finite integrand sample")
        heapq.heappush(heap, (-lerr, seq, pa, mid, lval, depth + 1))
        heapq.heappush(heap, (-rerr, seq + 1, mid, pb, rval, depth + 1))
        seq += 2
        total_err += lerr + rerr - err_parent
        if len(heap) > _MAX_SEGMENTS:
            raise ConvergenceError("adaptive quadrature segment budget exhausted")
    return sum(seg[4] for seg in sorted(heap, key=lambda seg: seg[2]))


def power_weight_integral(h, s: float, cfg: EvalConfig = DEFAULT_CONFIG, tol: float | None = None):
    """Integral of h(x) * s * x**(s-1) over [0, 1], weight removed exactly.

    The substitution u = x**s turns the integral into
    ``int_0^1 h(u**(1/s)) du`` so the weight's endpoint singularity
    (0 < s < 1) disappears before any adaptivity happens.  For small s the
    x-variation of h is compressed into a layer at u = 1 thinner than any
    fixed panel's node spacing, so the interval is pre-split at
    u = 2**(-k*s): each piece then covers a single octave of x.
    """
    if not (s > 0.0 and math.isfinite(s)):
        raise DomainError("power weight requires finite s > 0")
    if tol is None:
        tol = cfg.quad_tol
    inv = 1.0 / s

    def g(u):
        return h(u**inv)

    if s >= 0.1:
        return integrate(g, 0.0, 1.0, cfg, tol=tol)
    step = s * math.log(2.0)
    cuts = sorted({math.exp(-k * step) for k in range(1, 50)})
    pts = [0.0] + [c for c in cuts if 0.0 < c < 1.0] + [1.0]
    per_panel = tol / (len(pts) - 1)
    total = 0.0
    for lo, hi in zip(pts, pts[1:]):
        if hi > lo:
            total += integrate(g, lo, hi, cfg, tol=per_panel)
    return total


@dataclass(frozen=True)
class Bracket:
    """A certified sign-change interval for a scalar root."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError("bracket endpoints out of order")
        if not self.f_lo * self.f_hi < 0.0:
            raise DomainError("bracket does not change sign")


def bracket(f, lo: float, hi: float) -> Bracket:
    """Evaluate f at both ends and certify the sign change."""
    return Bracket(lo, hi, f(lo), f(hi))


def find_root(f, brk: Bracket, tol: float = 1e-12, max_iter: int = 200) -> float:
    """Brent's method on a certified bracket.

    Inverse-quadratic/secant steps guarded by bisection; the returned
    abscissa is within tol (plus a machine-epsilon floor proportional to
    the root) of the true zero.  Deterministic for fixed inputs.
    """
    if not tol > 0.0:
        raise DomainError("tolerance must be positive")
    a, b = brk.lo, brk.hi
    fa, fb = brk.f_lo, brk.f_hi
    c, fc = a, fa
    e = d = b - a
    eps = 2.220446049250313e-16
    for _ in range(max_iter):
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 2.0 * eps * abs(b) + 0.5 * tol
        m = 0.5 * (c - b)
        if abs(m) <= tol1 or fb == 0.0:
            return b
        if abs(e) < tol1 or abs(fa) <= abs(fb):
            e = d = m
        else:
            si = fb / fa
            if a == c:
                p = 2.0 * m * si
                q = 1.0 - si
            else:
                q = fa / fc
                r = fb / fc
                p = si * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (si - 1.0)
            if p > 0.0:
                q = -q
            else:
                p = -p
            si = e
            e = d
            if 2.0 * p < 3.0 * m * q - abs(tol1 * q) and p < abs(0.5 * si * q):
                d = p / q
            else:
                e = d = m
        a, fa = b, fb
        if abs(d) > tol1:
            b += d
        elif m > 0.0:
            b += tol1
        else:
            b -= tol1
        fb = f(b)
        if (fb > 0.0) == (fc > 0.0):
            c, fc = a, fa
            e = d = b - a
    raise ConvergenceError("root finder iteration cap reached")


def contour_log_residue(
    f,
    fprime,
    x0: float,
    x1: float,
    y_bound: float,
    n_panels: int = 256,
    cfg: EvalConfig = DEFAULT_CONFIG,
    max_panels: int = 65536,
    boundary_floor: float = 1e-8,
) -> complex:
    """(1/2*pi*i) * contour integral of f'/f around [x0, x1] x [-Y, Y].

    Composite trapezoid per edge, counterclockwise.  Panels double
    (n_panels, 2*n_panels, ... up to max_panels) until two successive
    estimates differ by less than 0.05 and the latest lies within 0.25 of
    an integer; the rounded integer is then the enclosed zero count.
    |f| is monitored at every node: a value below boundary_floor means a
    zero sits (numerically) on the contour and voids the count.
    """
    if not (x0 < x1 and y_bound > 0.0):
        raise DomainError("degenerate rectangle")
    if n_panels < 1:
        raise DomainError("n_panels must be positive")
    corners = (
        complex(x0, -y_bound),
        complex(x1, -y_bound),
        complex(x1, y_bound),
        complex(x0, y_bound),
    )
    two_pi_i = 2.0j * math.pi

    def estimate(n: int) -> complex:
        acc = 0.0j
        for k in range(4):
            za = corners[k]
            zb = corners[(k + 1) % 4]
            dz = (zb - za) / n
            prev = None
            for j in range(n + 1):
                z = za + dz * j
                fz = f(z)
                if abs(fz) < boundary_floor:
                    raise DomainError("f vanishes (or nearly) on the contour")
                quot = fprime(z) / fz
                if not _finite(quot):
                    raise ConvergenceError("non-finite contour sample")
                if prev is not None:
                    acc += 0.5 * (prev + quot) * dz
                prev = quot
        return acc / two_pi_i

    prev_est = None
    n = n_panels
    while n <= max_panels:
        est = estimate(n)
        if prev_est is not None and abs(est - prev_est) < 0.05:
            if abs(est - round(est.real)) < 0.25:
                return est
        prev_est = est
        n *= 2
    raise ConvergenceError("contour estimate did not settle within the panel cap")
