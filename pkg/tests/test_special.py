"""Tests for the hypergeometric value and the xi/psi function family."""

import cmath
import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hypfam import (
    ConvergenceError,
    DomainError,
    EvalConfig,
    F,
    LN2,
    g,
    hyp2f1_1s,
    phi_poly,
    psi1,
    psi1_prime,
    psi2,
    psi2_prime,
    xi0,
    xi0_prime,
    xi1,
    xi2,
    xi3,
)

PI = math.pi

# mid-range parameters where every quadrature regime is exercised
s_values = st.floats(min_value=1e-3, max_value=1e3)


class TestHyp2f1:
    def test_log_case_at_minus_one(self):
        # 2F1(1,1;2;z) = -ln(1-z)/z
        assert hyp2f1_1s(1.0, -1.0).real == pytest.approx(LN2, abs=1e-12)

    def test_log_case_inside_disk(self):
        for z in (0.5, -0.7, complex(0.2, 0.6)):
            expect = -cmath.log(1 - z) / z
            assert abs(hyp2f1_1s(1.0, z) - expect) < 1e-12

    def test_s2_closed_form(self):
        # 2F1(1,2;3;z) = -2 (ln(1-z) + z)/z^2
        z = 0.3
        expect = -2.0 * (math.log(1.0 - z) + z) / z**2
        assert hyp2f1_1s(2.0, z).real == pytest.approx(expect, abs=1e-12)

    def test_at_zero(self):
        assert hyp2f1_1s(2.0, 0.0) == 1.0

    def test_series_and_integral_paths_agree(self):
        # cross-oracle: series value vs (xi0+1)/2 from the quadrature path
        val = hyp2f1_1s(0.5, -1.0).real
        assert abs(val - (xi0(0.5) + 1.0) / 2.0) < 1e-10
        # and both equal the elementary value pi/4
        assert val == pytest.approx(PI / 4.0, abs=1e-12)

    def test_boundary_point_on_circle(self):
        z = cmath.exp(1.0j * 2.0)
        val = hyp2f1_1s(1.0, z)
        expect = -cmath.log(1 - z) / z
        assert abs(val - expect) < 1e-10

    def test_against_mpmath(self):
        mp = pytest.importorskip("mpmath")
        for s, z in [(0.7, -0.5), (3.2, 0.9), (1.5, complex(0.2, 0.6)), (2.0, complex(-0.6, 0.77))]:
            expect = complex(mp.hyp2f1(1, s, s + 1, z))
            assert abs(hyp2f1_1s(s, z) - expect) < 1e-10

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            hyp2f1_1s(1.0, 1.0)
        with pytest.raises(DomainError):
            hyp2f1_1s(1.0, 1.5)
        with pytest.raises(DomainError):
            hyp2f1_1s(0.0, 0.5)
        with pytest.raises(DomainError):
            hyp2f1_1s(-1.0, 0.5)

    def test_series_cap(self):
        tight = EvalConfig(series_tol=1e-30, max_terms=3)
        with pytest.raises(ConvergenceError):
            hyp2f1_1s(1.0, 0.5, tight)


class TestXiClosedForms:
    def test_xi0(self):
        assert xi0(1.0) == pytest.approx(2.0 * LN2 - 1.0, abs=1e-12)
        assert xi0(2.0) == pytest.approx(3.0 - 4.0 * LN2, abs=1e-12)
        assert xi0(0.5) == pytest.approx(PI / 2.0 - 1.0, abs=1e-12)
        assert xi0(0.0) == 1.0
        assert xi0(math.inf) == 0.0

    def test_F(self):
        assert F(1.0) == pytest.approx(LN2, abs=1e-12)
        assert F(2.0) == pytest.approx(2.0 - 2.0 * LN2, abs=1e-12)
        assert F(0.5) == pytest.approx(PI / 4.0, abs=1e-12)

    @pytest.mark.parametrize("s", [0.1, 1.0, 10.0, 100.0])
    def test_F_strict_bounds(self, s):
        assert 0.5 < F(s) < 1.0

    def test_xi0_prime(self):
        assert xi0_prime(1.0) == pytest.approx(2.0 * LN2 - PI**2 / 6.0, abs=1e-11)
        assert xi0_prime(2.0) == pytest.approx(PI**2 / 3.0 - 2.0 - 2.0 * LN2, abs=1e-11)

    def test_xi0_prime_finite_difference(self):
        h = 1e-5
        fd = (xi0(1.0 + h) - xi0(1.0 - h)) / (2.0 * h)
        assert xi0_prime(1.0) == pytest.approx(fd, abs=1e-8)

    def test_s2_xi0_prime_decreasing_spot(self):
        assert 1.0 * xi0_prime(1.0) > 4.0 * xi0_prime(2.0)

    def test_xi1(self):
        assert xi1(1.0) == pytest.approx(1.0 - LN2, abs=1e-12)
        assert xi1(0.5) == pytest.approx(2.0 - PI / 2.0, abs=1e-12)
        assert xi1(0.0) == LN2
        assert xi1(math.inf) == 0.0

    def test_xi2(self):
        assert xi2(2.0) == pytest.approx(12.0 - 16.0 * LN2, abs=1e-11)
        assert xi2(0.0) == 0.0
        assert xi2(math.inf) == 1.0

    def test_xi3(self):
        assert xi3(1.0) == pytest.approx((1.0 - LN2) / (2.0 * LN2 - 1.0), abs=1e-11)
        assert xi3(2.0) == pytest.approx((4.0 * LN2 - 2.0) / (4.0 * (3.0 - 4.0 * LN2)), abs=1e-11)
        assert xi3(0.0) == LN2
        assert xi3(math.inf) == 1.0
        assert LN2 < xi3(1.0) < 1.0

    def test_g_closed_form(self):
        expect = (2.0 - 2.0 * LN2) * (2.0 * LN2 - 1.0) + 2.0 * LN2 - PI**2 / 6.0
        assert g(1.0) == pytest.approx(expect, abs=1e-11)

    @pytest.mark.parametrize("s", [0.01, 1.0, 100.0])
    def test_g_negative(self, s):
        assert g(s) < 0.0

    def test_domain_errors(self):
        for fn in (xi0, xi1, xi2, xi3):
            with pytest.raises(DomainError):
                fn(-0.5)
        for fn in (xi0_prime, g, F):
            with pytest.raises(DomainError):
                fn(0.0)
            with pytest.raises(DomainError):
                fn(math.inf)


class TestXiProperties:
    @settings(max_examples=30, deadline=None)
    @given(s1=s_values, s2=s_values)
    def test_xi0_monotone(self, s1, s2):
        lo, hi = min(s1, s2), max(s1, s2)
        # below ~1e-6 relative separation the true gap drops under the
        # quadrature tolerance and strictness is unresolvable in doubles
        assume(hi >= lo * (1.0 + 1e-6))
        assert xi0(lo) > xi0(hi)

    @settings(max_examples=30, deadline=None)
    @given(s=s_values)
    def test_ranges(self, s):
        assert 0.0 < xi0(s) < 1.0
        assert 0.0 < xi1(s) < LN2
        assert 0.0 < xi2(s) < 1.0
        assert LN2 < xi3(s) < 1.0

    @settings(max_examples=30, deadline=None)
    @given(s=s_values)
    def test_identity_xi3_xi2(self, s):
        assert abs(xi3(s) * xi2(s) - (1.0 - xi0(s))) <= 1e-11

    @settings(max_examples=20, deadline=None)
    @given(s=s_values)
    def test_dual_path(self, s):
        assert abs(2.0 * F(s) - 1.0 - xi0(s)) < 1e-10


class TestPsi:
    def test_at_zero(self):
        assert psi1(0.0) == 0.5
        assert psi2(0.0) == 0.5
        assert psi1(0j) == complex(0.5)

    def test_paper_bracket_at_10(self):
        assert psi1(10.0) < 0.261
        assert psi2(10.0) > 0.266

    def test_against_mpmath_near_crossover(self):
        mp = pytest.importorskip("mpmath")
        mp.mp.dps = 40
        for x in (9e-5, 1.1e-4, 5e-4, 0.01, 0.4):
            expect = float(2 * (1 + mp.mpf(x)) / mp.mpf(x) ** 2 * mp.log(1 + mp.mpf(x) ** 2 / (4 * (1 + mp.mpf(x)))))
            assert psi1(x) == pytest.approx(expect, abs=1e-15)

    def test_ratio_limit(self):
        # psi1/psi2 -> 2, approached logarithmically from below
        ratios = [psi1(10.0**k) / psi2(10.0**k) for k in (2, 4, 6, 8, 300)]
        assert all(b > a for a, b in zip(ratios, ratios[1:]))
        assert all(r < 2.0 for r in ratios)
        assert ratios[-1] == pytest.approx(2.0, rel=0.05)

    def test_ratio_matches_log_law(self):
        # at 1e6 the ratio agrees with 2 ln(x/4) / (1 + ln x) to ~1e-5
        x = 1e6
        law = 2.0 * math.log(x / 4.0) / (1.0 + math.log(x))
        assert psi1(x) / psi2(x) == pytest.approx(law, rel=1e-4)

    @settings(max_examples=40, deadline=None)
    @given(re=st.floats(1e-3, 20.0), im=st.floats(-20.0, 20.0))
    def test_conjugate_symmetry(self, re, im):
        z = complex(re, im)
        for fn in (psi1, psi2):
            a = fn(z.conjugate())
            b = fn(z).conjugate()
            assert cmath.isclose(a, b, rel_tol=1e-12, abs_tol=1e-14)

    def test_domain_errors(self):
        for fn in (psi1, psi2, psi1_prime, psi2_prime):
            with pytest.raises(DomainError):
                fn(-1.0)
            with pytest.raises(DomainError):
                fn(complex(-0.1, 2.0))
            with pytest.raises(DomainError):
                fn(math.inf)
            with pytest.raises(DomainError):
                fn(float("nan"))

    @pytest.mark.parametrize("x", [0.4, 2.0, 10.0, complex(0.4, 2.0), complex(10.0, -1.5)])
    def test_derivatives_match_central_differences(self, x):
        h = 1e-6
        for fn, fnp in ((psi1, psi1_prime), (psi2, psi2_prime)):
            fd = (fn(x + h) - fn(x - h)) / (2.0 * h)
            assert abs(fnp(x) - fd) < 1e-8

    def test_derivative_series_branch(self):
        # small-x series branch against a wider-step central difference
        x = 5e-5
        fd = (psi1(x + 1e-6) - psi1(x - 1e-6)) / 2e-6
        assert psi1_prime(x) == pytest.approx(fd, abs=1e-9)
        assert psi1_prime(x) == pytest.approx(-x / 8.0, rel=1e-3)


class TestPhiPoly:
    def test_values(self):
        assert phi_poly(0.0) == 6.0
        assert phi_poly(0.4) == pytest.approx(0.7584, abs=1e-12)
        assert phi_poly(1.0) == -27.0

    def test_decreasing(self):
        xs = [0.05 * k for k in range(21)]
        vals = [phi_poly(x) for x in xs]
        assert all(b < a for a, b in zip(vals, vals[1:]))
