"""Special functions built on the zero-balanced hypergeometric value.

The family under study is controlled by 2F1(1, s; s+1; z) and four derived
functions of the parameter s:

    xi0(s) = 2*2F1(1,s;s+1;-1) - 1 = int_0^1 (1-x)/(1+x) * s*x**(s-1) dx
    xi1(s) = (1 - xi0(s)) / (2s)       (also int_0^1 x**s/(1+x) dx)
    xi2(s) = 2*s*xi0(s)
    xi3(s) = (1 - xi0(s)) / (2*s*xi0(s))

together with xi0's derivative, the combination g that controls xi3's
monotonicity, and the auxiliary pair psi1/psi2 whose unique crossing on
(0, inf) is certified by the verify module.  All functions are pure in
(arguments, config) and safe to call concurrently.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import ConvergenceError, DomainError
from .quadrature import integrate, power_weight_integral

LN2 = math.log(2.0)

# series/integral switchover for the hypergeometric value: the series tail
# degrades near |z| = 1 while the Euler integral stays uniformly stable
_SERIES_RADIUS = 0.95
# below this |x| the psi1 closed form cancels catastrophically (x**2 in the
# denominator); a short series in w = x^2/(4(1+x)) is exact to ~1e-60 there
_PSI_SERIES_RADIUS = 1e-4
# above this x the closed forms would overflow in x**2 / (2+x)**2
_PSI_BIG = 1e150


def _require_s(s, allow_zero: bool = False, allow_inf: bool = False) -> float:
    s = float(s)
    if math.isnan(s) or s < 0.0:
        raise DomainError(f"s must be nonnegative, got {s}")
    if s == 0.0 and not allow_zero:
        raise DomainError("s must be strictly positive")
    if math.isinf(s) and not allow_inf:
        raise DomainError("s must be finite")
    return s


def hyp2f1_1s(s: float, z, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Gauss hypergeometric value 2F1(1, s; s+1; z) on the closed unit disk.

    Power series 1 + sum_n s/(s+n) z**n inside |z| < 0.95, truncated once
    the geometric tail bound falls below cfg.series_tol; Euler integral
    int_0^1 s*x**(s-1)/(1 - z*x) dx otherwise.  z = 1 is the pole of the
    zero-balanced case and is rejected, as is |z| > 1.
    """
    s = _require_s(s)
    z = complex(z)
    if z == 1:
        raise DomainError("z = 1 is outside the domain")
    az = abs(z)
    if az > 1.0 + 1e-12:
        raise DomainError(f"|z| = {az} exceeds 1")
    if az < _SERIES_RADIUS:
        total = complex(1.0)
        term = z * (s / (s + 1.0))
        n = 1
        while True:
            total += term
            if abs(term) * az / (1.0 - az) < cfg.series_tol:
                return total
            n += 1
            if n > cfg.max_terms:
                raise ConvergenceError("hypergeometric series term cap reached")
            term *= z * ((s + n - 1.0) / (s + n))
    val = power_weight_integral(lambda x: 1.0 / (1.0 - z * x), s, cfg)
    return complex(val)


def F(s: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """2F1(1, s; s+1; -1); decreasing from 1 to 1/2, equals (xi0(s)+1)/2."""
    s = _require_s(s)
    return hyp2f1_1s(s, -1.0, cfg).real


@lru_cache(maxsize=65536)
def _xi0_quad(s: float, cfg: EvalConfig) -> float:
    return power_weight_integral(lambda x: (1.0 - x) / (1.0 + x), s, cfg)


def xi0(s: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """int_0^1 (1-x)/(1+x) * s*x**(s-1) dx, decreasing from 1 to 0.

    The endpoints s = 0 and s = inf return the continuity extensions 1 and
    0 exactly, without quadrature.
    """
    s = _require_s(s, allow_zero=True, allow_inf=True)
    if s == 0.0:
        return 1.0
    if math.isinf(s):
        return 0.0
    return _xi0_quad(s, cfg)


def xi0_prime(s: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """int_0^1 2 x**s ln x / (1+x)**2 dx, the derivative of xi0 (negative).

    Evaluated from its own integral representation, never by differencing
    xi0.  The substitution u = x**(s+1) gives a fixed log profile at u = 0,
    uniform in s:  (2/(s+1)^2) * int_0^1 ln u / (1 + u**(1/(s+1)))**2 du.
    """
    s = _require_s(s)
    p = s + 1.0
    pref = 2.0 / (p * p)
    inv = 1.0 / p

    def integrand(u: float) -> float:
        root = u**inv
        return math.log(u) / ((1.0 + root) * (1.0 + root))

    val = integrate(integrand, 0.0, 1.0, cfg, tol=cfg.quad_tol / pref)
    return pref * val


def xi1(s: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """(1 - xi0(s))/(2s), decreasing from ln 2 to 0.

    For finite positive s the independent route int_0^1 x**s/(1+x) dx is
    also evaluated and both must agree within the combined quadrature
    budget; a persistent gap means an integral converged to a wrong value.
    """
    s = _require_s(s, allow_zero=True, allow_inf=True)
    if s == 0.0:
        return LN2
    if math.isinf(s):
        return 0.0
    by_xi0 = (1.0 - xi0(s, cfg)) / (2.0 * s)
    direct = integrate(lambda x: x**s / (1.0 + x), 0.0, 1.0, cfg)
    # xi0's absolute tolerance is amplified by 1/(2s) on this route
    budget = 10.0 * cfg.quad_tol * (1.0 + 1.0 / (2.0 * s))
    if abs(by_xi0 - direct) > budget:
        raise ConvergenceError(
            f"xi1 cross-check failed at s={s}: {by_xi0} vs {direct}"
        )
    return by_xi0


def xi2(s: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """2*s*xi0(s), increasing from 0 to 1."""
    s = _require_s(s, allow_zero=True, allow_inf=True)
    if s == 0.0:
        return 0.0
    if math.isinf(s):
        return 1.0
    return 2.0 * s * xi0(s, cfg)


def xi3(s: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """(1 - xi0(s))/(2*s*xi0(s)), increasing from ln 2 to 1."""
    s = _require_s(s, allow_zero=True, allow_inf=True)
    if s == 0.0:
        return LN2
    if math.isinf(s):
        return 1.0
    v = xi0(s, cfg)
    return (1.0 - v) / (2.0 * s * v)


def g(s: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """(1 - xi0(s))*xi0(s) + s*xi0'(s); strictly negative on (0, inf)."""
    s = _require_s(s)
    v = xi0(s, cfg)
    return (1.0 - v) * v + s * xi0_prime(s, cfg)


def _check_right_half_plane(z: complex) -> None:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("psi functions require finite x")
    if z != 0 and z.real <= 0.0:
        raise DomainError("psi functions require Re x > 0 (or x = 0)")


def psi1(x, cfg: EvalConfig = DEFAULT_CONFIG):
    """2(1+x)/x**2 * log(1 + x**2/(4(1+x))), with psi1(0) = 1/2.

    Real input gives a float, complex input a complex value (principal
    log; the log argument must stay in the right half plane).  Below
    |x| = 1e-4 the prefactor and the log cancel to O(1), so a short series
    in w = x**2/(4(1+x)) is used instead; on the real line log1p keeps the
    standard form accurate down to that crossover.
    """
    if isinstance(x, complex):
        z = x
        if z == 0:
            return complex(0.5)
        _check_right_half_plane(z)
        w = z * z / (4.0 * (1.0 + z))
        if abs(z) < _PSI_SERIES_RADIUS:
            return 0.5 * (
                1.0
                + w
                * (-1.0 / 2.0 + w * (1.0 / 3.0 + w * (-1.0 / 4.0 + w * (1.0 / 5.0 + w * (-1.0 / 6.0)))))
            )
        if (1.0 + w).real <= 0.0:
            raise DomainError("principal log branch crossed in psi1")
        return 2.0 * (1.0 + z) / (z * z) * cmath.log(1.0 + w)
    xr = float(x)
    if not math.isfinite(xr) or xr < 0.0:
        raise DomainError("psi functions require finite Re x > 0 (or x = 0)")
    if xr == 0.0:
        return 0.5
    if xr < _PSI_SERIES_RADIUS:
        w = xr * xr / (4.0 * (1.0 + xr))
        return 0.5 * (
            1.0
            + w * (-1.0 / 2.0 + w * (1.0 / 3.0 + w * (-1.0 / 4.0 + w * (1.0 / 5.0 + w * (-1.0 / 6.0)))))
        )
    if xr > _PSI_BIG:
        # x**2 would overflow; expand the log argument instead
        log_term = 2.0 * math.log(xr + 2.0) - math.log(4.0 * (1.0 + xr))
        return (2.0 * (1.0 + xr) / xr) * (log_term / xr)
    w = xr * xr / (4.0 * (1.0 + xr))
    return 2.0 * (1.0 + xr) / (xr * xr) * math.log1p(w)


def psi2(x, cfg: EvalConfig = DEFAULT_CONFIG):
    """(2 + x + (1+x) log(1+x)) / (2+x)**2, with psi2(0) = 1/2."""
    if isinstance(x, complex):
        z = x
        if z == 0:
            return complex(0.5)
        _check_right_half_plane(z)
        return (2.0 + z + (1.0 + z) * cmath.log(1.0 + z)) / (2.0 + z) ** 2
    xr = float(x)
    if not math.isfinite(xr) or xr < 0.0:
        raise DomainError("psi functions require finite Re x > 0 (or x = 0)")
    if xr == 0.0:
        return 0.5
    lg = math.log1p(xr)
    if xr > _PSI_BIG:
        # (2+x)**2 would overflow; factor the quotient instead
        return 1.0 / (2.0 + xr) + ((1.0 + xr) / (2.0 + xr)) * (lg / (2.0 + xr))
    return (2.0 + xr + (1.0 + xr) * lg) / ((2.0 + xr) * (2.0 + xr))


def psi1_prime(x, cfg: EvalConfig = DEFAULT_CONFIG):
    """d psi1/dx = 2/(x(x+2)) - 2(x+2) log(1 + x**2/(4(1+x)))/x**3."""
    if isinstance(x, complex):
        z = x
        if z == 0:
            return complex(0.0)
        _check_right_half_plane(z)
    else:
        xr = float(x)
        if not math.isfinite(xr) or xr < 0.0:
            raise DomainError("psi functions require finite Re x > 0 (or x = 0)")
        if xr == 0.0:
            return 0.0
        z = complex(xr)
    w = z * z / (4.0 * (1.0 + z))
    if abs(z) < _PSI_SERIES_RADIUS:
        wp = z * (2.0 + z) / (4.0 * (1.0 + z) ** 2)
        val = 0.5 * wp * (
            -1.0 / 2.0 + w * (2.0 / 3.0 + w * (-3.0 / 4.0 + w * (4.0 / 5.0 + w * (-5.0 / 6.0))))
        )
    else:
        if (1.0 + w).real <= 0.0:
            raise DomainError("principal log branch crossed in psi1'")
        val = 2.0 / (z * (z + 2.0)) - 2.0 * (z + 2.0) * cmath.log(1.0 + w) / z**3
    return val if isinstance(x, complex) else val.real


def psi2_prime(x, cfg: EvalConfig = DEFAULT_CONFIG):
    """d psi2/dx = -x log(1+x) / (2+x)**3."""
    if isinstance(x, complex):
        z = x
        if z == 0:
            return complex(0.0)
        _check_right_half_plane(z)
        return -z * cmath.log(1.0 + z) / (2.0 + z) ** 3
    xr = float(x)
    if not math.isfinite(xr) or xr < 0.0:
        raise DomainError("psi functions require finite Re x > 0 (or x = 0)")
    if xr == 0.0:
        return 0.0
    return -xr * math.log1p(xr) / (2.0 + xr) ** 3


def phi_poly(x: float) -> float:
    """6 + 2x^2 - x^4 - 10x - 24x^3 by Horner; decreasing, positive up to 0.4."""
    x = float(x)
    return 6.0 + x * (-10.0 + x * (2.0 + x * (-24.0 - x)))
