import pytest
from hypothesis import given, settings, strategies as st

from clifford3 import (
    BundleInvariants,
    Curve,
    Rank3Query,
    h0_line_bound,
    h0_prop21_bound,
    h0_rank2_bound,
    h0_rank3_semistable_bound,
    h0_rank3_unstable_bound,
    serre_dual,
    slope_bound,
    suggested_min_s1f,
)
from clifford3.errors import (
    CongruenceViolation,
    HypothesisFailed,
    MissingS1F,
    NotSemistable,
    NotUnstable,
    SlopeOutOfRange,
)


def rank3_query(g, d, s1, s2, **kw):
    hyper = kw.pop("hyperelliptic", False)
    return Rank3Query(Curve(g, hyper), BundleInvariants(3, d, (s1, s2)), **kw)


class TestLineBound:
    def test_clifford_plateau(self):
        assert h0_line_bound(Curve(2), 2).value == 2

    def test_riemann_roch_tail(self):
        r = h0_line_bound(Curve(3), 8)
        assert r.value == 6 and r.exact

    def test_negative_degree(self):
        r = h0_line_bound(Curve(4), -1)
        assert r.value == 0 and r.exact

    def test_clifford_not_exact(self):
        assert not h0_line_bound(Curve(3), 2).exact


class TestRank2Bound:
    def test_hyperelliptic_refinement(self):
        assert h0_rank2_bound(Curve(5, True), 12, 2).value == 6

    def test_vanishing_below_s1(self):
        r = h0_rank2_bound(Curve(4), 2, 4)
        assert r.value == 0 and r.exact

    def test_base_value(self):
        assert h0_rank2_bound(Curve(3), 10, 2).value == 6

    def test_congruence_checked(self):
        with pytest.raises(CongruenceViolation):
            h0_rank2_bound(Curve(3), 10, 1)

    def test_semistability_checked(self):
        with pytest.raises(NotSemistable):
            h0_rank2_bound(Curve(3), 10, -2)

    def test_riemann_roch_tail(self):
        g, s1 = 3, 2
        d = 4 * g - 4 + 2  # above the special window
        r = h0_rank2_bound(Curve(g), d, s1)
        assert r.value == d + 2 - 2 * g and r.exact

    def test_delta_refinement_nonzero_coefficient(self):
        # g=3, d=6, s1=0: coefficient index 4 in (1-z^2)^3 gives 3 != 0,
        # so delta = 0 and the refinement shaves 1 off the base bound
        assert h0_rank2_bound(Curve(3), 6, 0).value == 5
        assert h0_rank2_bound(Curve(3), 6, 0, use_delta=True).value == 4

    def test_delta_refinement_zero_coefficient(self):
        # g=3, d=4, s1=0: coefficient index 3 in (1-z^2)^3 is an odd power,
        # so the coefficient vanishes and delta = 1 keeps the base value
        assert h0_rank2_bound(Curve(3), 4, 0).value == 4
        assert h0_rank2_bound(Curve(3), 4, 0, use_delta=True).value == 4

    @pytest.mark.parametrize("g", [2, 3, 4])
    def test_plateau_nondecreasing(self, g):
        c = Curve(g)
        for s1 in range(0, 2 * g, 2):
            vals = [
                h0_rank2_bound(c, d, s1).value for d in range(s1, 4 * g - 4 - s1 + 1, 2)
            ]
            assert vals == sorted(vals)


class TestRank3Query:
    def test_rejects_s1f_below_forced_minimum(self):
        with pytest.raises(HypothesisFailed):
            rank3_query(4, 4, 1, 8, s1f=1)

    def test_rejects_s1f_parity(self):
        # quotient degree (2*10+1)/3 = 7 is odd
        with pytest.raises(CongruenceViolation):
            rank3_query(3, 10, 1, 2, s1f=2)

    def test_suggested_min_s1f(self):
        inv = BundleInvariants(3, 10, (1, 2))
        s1f = suggested_min_s1f(inv)
        assert s1f == 1  # ceil(3/3) = 1, parity of 7
        inv = BundleInvariants(3, 4, (1, 8))
        assert suggested_min_s1f(inv) == 5  # ceil(15/3) = 5, parity of 3


class TestRank3SemistableBound:
    def test_sharp_hyperelliptic_value(self):
        q = rank3_query(3, 10, 1, 2, hyperelliptic=True, use_hyperelliptic_sharpening=True)
        assert h0_rank3_semistable_bound(q).value == 6

    def test_base_value(self):
        assert h0_rank3_semistable_bound(rank3_query(3, 10, 1, 2)).value == 7

    def test_line_only_case(self):
        r = h0_rank3_semistable_bound(rank3_query(4, 4, 1, 8))
        assert r.value == 2 and r.case == "RANK3-LINE-ONLY"

    def test_riemann_roch_tail(self):
        r = h0_rank3_semistable_bound(rank3_query(2, 13, 1, 2))
        assert r.value == 10 and r.exact

    def test_vanishing(self):
        r = h0_rank3_semistable_bound(rank3_query(3, 0, 3, 6))
        assert r.value == 0 and r.exact

    def test_no_sharpening_when_both_zero(self):
        q = rank3_query(3, 6, 0, 0, hyperelliptic=True, use_hyperelliptic_sharpening=True)
        r = h0_rank3_semistable_bound(q)
        assert r.case == "RANK3-MAIN"

    def test_delta_sharpening(self):
        # coefficient index 4, K_4(3,5) = (1-z)^3(1+z)^2 -> z^4 coeff 1 != 0
        q = rank3_query(3, 10, 1, 2, s1f=1, use_delta=True)
        r = h0_rank3_semistable_bound(q)
        assert r.value == 6 and "krawtchouk-nonzero" in r.assumptions

    def test_rejects_unstable(self):
        with pytest.raises(NotSemistable):
            h0_rank3_semistable_bound(rank3_query(3, 4, -2, 2))

    @settings(max_examples=200)
    @given(g=st.integers(2, 6), d=st.integers(0, 30), s1=st.integers(0, 12), s2=st.integers(0, 12))
    def test_edge_consistency(self, g, d, s1, s2):
        if (s1 - d) % 3 or (s2 - 2 * d) % 3:
            return
        r = h0_rank3_semistable_bound(rank3_query(g, d, s1, s2))
        if s1 <= d <= 6 * g - 6 - s2:
            # never below the exact values at the range edges
            assert r.value >= 0
            if d == 6 * g - 6 - s2:
                assert r.value >= d + 3 - 3 * g


class TestProp21Bound:
    def test_hyperelliptic_sharp_value(self):
        q = rank3_query(5, 18, 0, 0, s1f=2, hyperelliptic=True,
                        use_hyperelliptic_sharpening=True)
        assert h0_prop21_bound(q).value == 10

    def test_stable_example_value(self):
        q = rank3_query(4, 5, 2, 1, s1f=2, hyperelliptic=True,
                        use_hyperelliptic_sharpening=True)
        assert h0_prop21_bound(q).value == 3

    def test_requires_s1f(self):
        with pytest.raises(MissingS1F):
            h0_prop21_bound(rank3_query(5, 18, 0, 0))

    def test_window_enforced(self):
        with pytest.raises(HypothesisFailed):
            h0_prop21_bound(rank3_query(3, 0, 0, 0, s1f=4))

    def test_skew_hypothesis_enforced(self):
        with pytest.raises(HypothesisFailed):
            h0_prop21_bound(rank3_query(4, 11, 5, 1, s1f=1))

    def test_never_much_below_main_bound(self):
        # with the minimal admissible s1f, the quotient bound stays within 1
        # of the main semistable bound on the shared domain
        for g in range(2, 7):
            c = Curve(g)
            for s1 in range(0, 3 * g + 1, 3):
                for s2 in range(0, 3 * g + 1, 3):
                    if s1 > 2 * s2:
                        continue
                    for d in range(s1, 6 * g - 6 - s2 + 1, 3):
                        inv = BundleInvariants(3, d, (s1, s2))
                        q = Rank3Query(c, inv, s1f=suggested_min_s1f(inv))
                        try:
                            quot = h0_prop21_bound(q)
                        except HypothesisFailed:
                            continue
                        main = h0_rank3_semistable_bound(q)
                        assert quot.value >= main.value - 1


class TestUnstableBound:
    def test_semistable_quotient_value(self):
        q = rank3_query(4, 6, -3, 0, s1f=1)
        r = h0_rank3_unstable_bound(q, f_semistable=True)
        assert r.value == 5

    def test_rejects_semistable_input(self):
        with pytest.raises(NotUnstable):
            h0_rank3_unstable_bound(rank3_query(3, 6, 0, 0, s1f=0), True)

    def test_requires_s1f(self):
        with pytest.raises(MissingS1F):
            h0_rank3_unstable_bound(rank3_query(3, 4, -2, 2), True)

    def test_dual_reduction(self):
        g = 3
        c = Curve(g)
        inv = BundleInvariants(3, 4, (1, -1))
        dual = serre_dual(c, inv)
        assert dual.s[0] < 0
        direct = h0_rank3_unstable_bound(Rank3Query(c, inv, s1f=1), True)
        via_dual = h0_rank3_unstable_bound(Rank3Query(c, dual, s1f=1), True)
        assert direct.value == max(0, via_dual.value + inv.degree + 3 - 3 * g)
        assert "serre-dual-reduction" in direct.assumptions

    def test_vanishing_below_s1(self):
        r = h0_rank3_unstable_bound(rank3_query(3, -7, -4, 1, s1f=2), True)
        assert r.value == 0 and r.exact

    def test_f_flag_consistency(self):
        with pytest.raises(HypothesisFailed):
            h0_rank3_unstable_bound(rank3_query(4, 6, -3, 0, s1f=1), f_semistable=False)
        with pytest.raises(HypothesisFailed):
            h0_rank3_unstable_bound(rank3_query(3, 6, -6, -6, s1f=-2), f_semistable=True)

    def test_unstable_quotient_value(self):
        # invariants of pencil^2 + (trivial + pencil) at genus 3: the line
        # part gives 3, the unstable quotient's mid-range bound gives 3,
        # matching the exact split count 3 + 1 + 2
        q = rank3_query(3, 6, -6, -6, s1f=-2)
        r = h0_rank3_unstable_bound(q, f_semistable=False)
        assert r.value == 6


class TestSlopeBound:
    def test_genus3_value(self):
        assert slope_bound(3, 5).value == 3

    def test_genus2_value(self):
        assert slope_bound(2, 5).value == 4

    def test_floor_vanishes(self):
        assert slope_bound(10, 3).value == 3

    def test_range_enforced(self):
        with pytest.raises(SlopeOutOfRange):
            slope_bound(3, 6)
