"""Tests for inclusion decisions, filtration checking and quasi-extrema."""

import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypfam import (
    CurveKind,
    DomainError,
    ParamPoint,
    Relation,
    filtration_check,
    includes,
    quasi_extrema,
    sample_curve,
    t_forward,
)

LN2 = math.log(2.0)
THRESHOLD_1_TO_2 = (2.0 * LN2 - 1.0) / 2.0  # t_forward((1,0), 2)

points = st.builds(
    ParamPoint,
    s=st.floats(0.1, 10.0),
    t=st.floats(0.0, 0.95),
)


class TestIncludes:
    def test_same_s_orders_by_t(self):
        assert includes(ParamPoint(1, 0.2), ParamPoint(1, 0.1)).relation is Relation.SUBSET
        assert includes(ParamPoint(1, 0.1), ParamPoint(1, 0.2)).relation is Relation.SUPERSET

    def test_equal(self):
        r = includes(ParamPoint(1.5, 0.3), ParamPoint(1.5, 0.3))
        assert r.relation is Relation.EQUAL
        assert r.margin == 0.0

    def test_forward_threshold(self):
        assert includes(ParamPoint(1, 0), ParamPoint(2, 0.19)).relation is Relation.SUBSET
        assert includes(ParamPoint(1, 0), ParamPoint(2, 0.20)).relation is Relation.INCOMPARABLE

    def test_margin_value(self):
        r = includes(ParamPoint(1, 0), ParamPoint(2, 0.19))
        assert r.margin == pytest.approx(THRESHOLD_1_TO_2 - 0.19, abs=1e-12)

    def test_larger_s_never_inside_smaller(self):
        # even t2 = 0 cannot put the larger-s class inside the smaller-s one
        assert includes(ParamPoint(2, 0.5), ParamPoint(1, 0.0)).relation is Relation.INCOMPARABLE
        for t2 in (0.0, 0.3, 0.9):
            assert includes(ParamPoint(2, 0.0), ParamPoint(1, t2)).relation is not Relation.SUBSET

    def test_inclusive_at_threshold(self):
        r = includes(ParamPoint(1, 0), ParamPoint(2, THRESHOLD_1_TO_2))
        assert r.relation is Relation.SUBSET
        r = includes(ParamPoint(1, 0), ParamPoint(2, THRESHOLD_1_TO_2 + 1e-9))
        assert r.relation is Relation.INCOMPARABLE

    def test_degenerate_points(self):
        ident = ParamPoint(0.0, 0.3)
        assert includes(ident, ParamPoint(1, 0.5)).relation is Relation.SUBSET
        assert includes(ParamPoint(1, 0.5), ident).relation is Relation.SUPERSET
        assert includes(ident, ParamPoint(2.0, 1.0)).relation is Relation.EQUAL

    def test_infinite_s_rejected(self):
        with pytest.raises(DomainError):
            includes(ParamPoint(math.inf, 0.1), ParamPoint(1, 0.1))

    @settings(max_examples=40, deadline=None)
    @given(p1=points, p2=points)
    def test_antisymmetry(self, p1, p2):
        a = includes(p1, p2)
        b = includes(p2, p1)
        swap = {
            Relation.SUBSET: Relation.SUPERSET,
            Relation.SUPERSET: Relation.SUBSET,
            Relation.EQUAL: Relation.EQUAL,
            Relation.INCOMPARABLE: Relation.INCOMPARABLE,
        }
        assert b.relation is swap[a.relation]
        assert b.margin == pytest.approx(a.margin, abs=1e-14)

    def test_transitivity_on_random_chains(self):
        rng = random.Random(987123)
        for _ in range(200):
            s1 = math.exp(rng.uniform(math.log(0.2), math.log(5.0)))
            t1 = rng.uniform(0.0, 0.9)
            s2 = s1 * math.exp(rng.uniform(0.0, math.log(4.0)))
            thr12 = t_forward(ParamPoint(s1, t1), s2)
            t2 = rng.uniform(0.0, thr12)
            s3 = s2 * math.exp(rng.uniform(0.0, math.log(4.0)))
            thr23 = t_forward(ParamPoint(s2, t2), s3)
            t3 = rng.uniform(0.0, thr23)
            assert includes(ParamPoint(s1, t1), ParamPoint(s2, t2)).relation is not Relation.INCOMPARABLE
            assert includes(ParamPoint(s2, t2), ParamPoint(s3, t3)).relation is not Relation.INCOMPARABLE
            assert includes(ParamPoint(s1, t1), ParamPoint(s3, t3)).relation in (
                Relation.SUBSET,
                Relation.EQUAL,
            )

    def test_subset_necessary_condition(self):
        # (1-t2) s2 >= (1-t1) s1 whenever the low class sits inside the high one
        rng = random.Random(555)
        for _ in range(300):
            s1 = math.exp(rng.uniform(math.log(0.1), math.log(10.0)))
            t1 = rng.uniform(0.0, 0.95)
            s2 = s1 * math.exp(rng.uniform(1e-9, math.log(5.0)))
            t2 = rng.uniform(0.0, t_forward(ParamPoint(s1, t1), s2))
            r = includes(ParamPoint(s1, t1), ParamPoint(s2, t2))
            assert r.relation is Relation.SUBSET
            assert (1.0 - t2) * s2 >= (1.0 - t1) * s1 - 1e-12


class TestFiltration:
    def test_constant_path(self):
        path = [(s, 0.25) for s in np.linspace(0.5, 5.0, 40)]
        rep = filtration_check(path)
        assert rep.is_filtration
        assert rep.first_violation is None
        assert rep.n_pairs_checked == 39

    def test_sharp_curve_is_filtration(self):
        cs = sample_curve(CurveKind.SHARP, ParamPoint(1.0, 0.0), 1.0, 4.0, 50)
        rep = filtration_check(cs.samples)
        assert rep.is_filtration

    def test_s_over_1_plus_s_fails_immediately(self):
        path = [(s, s / (1.0 + s)) for s in np.linspace(1.0, 2.0, 50)]
        rep = filtration_check(path)
        assert not rep.is_filtration
        assert rep.first_violation.index == 0
        assert rep.first_violation.t_hi > rep.first_violation.threshold
        assert rep.n_pairs_checked == 1

    def test_forward_curve_is_not_a_filtration(self):
        # the forward extremal curve of a fixed base point rises faster than
        # the sharp curve, so consecutive samples stop including each other
        # right after the base pair
        cs = sample_curve(CurveKind.FORWARD, ParamPoint(1.0, 0.1), 1.0, 6.0, 30)
        rep = filtration_check(cs.samples)
        assert not rep.is_filtration
        assert rep.first_violation.index == 1

    def test_malformed_paths(self):
        with pytest.raises(DomainError):
            filtration_check([])
        with pytest.raises(DomainError):
            filtration_check([(1.0, 0.1), (1.0, 0.2)])
        with pytest.raises(DomainError):
            filtration_check([(1.0, 0.1), (0.5, 0.2)])
        with pytest.raises(DomainError):
            filtration_check([(1.0, 1.2)])


class TestQuasiExtrema:
    P1 = ParamPoint(1.0, 0.0)
    P2 = ParamPoint(2.0, 0.5)

    def test_comparable_pair(self):
        p2 = ParamPoint(2.0, 0.19)
        sup = quasi_extrema(self.P1, p2, CurveKind.QUASI_SUP)
        assert sup.comparable and sup.extremum == p2
        inf = quasi_extrema(self.P1, p2, CurveKind.QUASI_INF)
        assert inf.comparable and inf.extremum == self.P1

    def test_tau1_values(self):
        res = quasi_extrema(self.P1, self.P2, CurveKind.QUASI_SUP, s_max=4.0, n=3)
        assert not res.comparable
        s0, t0 = res.curve.samples[0]
        assert s0 == 2.0
        assert t0 == pytest.approx(THRESHOLD_1_TO_2, abs=1e-12)

    def test_tau2_values(self):
        res = quasi_extrema(self.P1, self.P2, CurveKind.QUASI_INF, s_min=0.5, n=2)
        assert not res.comparable
        s_last, t_last = res.curve.samples[-1]
        assert s_last == 1.0
        assert t_last == pytest.approx(2.0 * (1.0 - LN2) / (3.0 - 2.0 * LN2), abs=1e-12)

    def test_tau1_dominance_and_minimality(self):
        res = quasi_extrema(self.P1, self.P2, CurveKind.QUASI_SUP, s_max=6.0, n=9)
        for s, t in res.curve.samples:
            pt = ParamPoint(s, t)
            for p in (self.P1, self.P2):
                assert includes(p, pt).relation in (Relation.SUBSET, Relation.EQUAL)
            bumped = ParamPoint(s, t + 1e-6)
            rels = {includes(p, bumped).relation for p in (self.P1, self.P2)}
            assert Relation.INCOMPARABLE in rels

    def test_tau2_dominance_and_maximality(self):
        res = quasi_extrema(self.P1, self.P2, CurveKind.QUASI_INF, s_min=0.55, n=7)
        for s, t in res.curve.samples:
            pt = ParamPoint(s, t)
            for p in (self.P1, self.P2):
                assert includes(pt, p).relation in (Relation.SUBSET, Relation.EQUAL)
            if t > 1e-6:
                dropped = ParamPoint(s, t - 1e-6)
                rels = {includes(dropped, p).relation for p in (self.P1, self.P2)}
                assert Relation.INCOMPARABLE in rels

    def test_non_lattice_witness(self):
        res = quasi_extrema(self.P1, self.P2, CurveKind.QUASI_SUP, s_max=4.0, n=3)
        a = ParamPoint(*res.curve.samples[0])
        b = ParamPoint(*res.curve.samples[-1])
        assert includes(a, b).relation is Relation.INCOMPARABLE

    def test_argument_order_independence(self):
        r1 = quasi_extrema(self.P1, self.P2, CurveKind.QUASI_SUP, s_max=4.0, n=5)
        r2 = quasi_extrema(self.P2, self.P1, CurveKind.QUASI_SUP, s_max=4.0, n=5)
        assert r1.curve.samples == r2.curve.samples

    def test_missing_range_rejected(self):
        with pytest.raises(DomainError):
            quasi_extrema(self.P1, self.P2, CurveKind.QUASI_SUP)
        with pytest.raises(DomainError):
            quasi_extrema(self.P1, self.P2, CurveKind.QUASI_INF)
        with pytest.raises(DomainError):
            quasi_extrema(self.P1, self.P2, CurveKind.FORWARD, s_max=4.0)
