"""Closed-form geometry against frozen values, properties and the oracle."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from frplane.classification import CONSERVATIVE, MODERATE, TOLERANT, build_grid
from frplane.domain import (
    Decision,
    DynamicFunction,
    InvalidIntervalError,
    NegativeAbscissaError,
)
from frplane.geometry import (
    NONE_ABOVE,
    NONE_BELOW,
    crossing,
    decision_matrix,
    deployment_frontier_w,
    eval_s,
    integral_s,
    split_block,
)

from conftest import make_block, oracle_subdivisions, riemann_b_r, sample_tuples

F_LINEAR = DynamicFunction(0.5, 1.0, 0.0)
F_SHIFTED = DynamicFunction(0.5, 1.0, 0.25)
F_MET = DynamicFunction(0.3, 0.85, 0.0)
F_QUARTER = DynamicFunction(0.25, 1.0, 0.0)


class TestEvalS:
    def test_linear_through_origin(self):
        assert eval_s(F_LINEAR, 1.0) == 0.5

    def test_duration_penalty_subtracts(self):
        assert eval_s(F_SHIFTED, 1.0) == 0.25
        assert eval_s(F_SHIFTED, 0.0) == -0.25  # negative near zero is by design

    def test_power_evaluation(self):
        # frozen from 50-digit arithmetic: 0.3 * 2**0.85
        assert eval_s(F_MET, 2.0) == pytest.approx(0.5407502775664981, abs=1e-12)

    def test_rejects_negative_abscissa(self):
        with pytest.raises(NegativeAbscissaError):
            eval_s(F_LINEAR, -0.01)


class TestCrossing:
    def test_linear_inversion(self):
        sol = crossing(F_SHIFTED, 0.25, 0.0, 2.0)
        assert sol.h_star == pytest.approx(1.0, abs=1e-15)

    def test_algebraic_inversion_and_round_trip(self):
        sol = crossing(F_QUARTER, 3 / 13, 0.0, 1.0)
        assert sol.h_star == pytest.approx(12 / 13, abs=1e-15)
        assert eval_s(F_QUARTER, sol.h_star) == pytest.approx(3 / 13, abs=1e-12)

    def test_curve_stays_below(self):
        sol = crossing(F_LINEAR, 0.75, 0.0, 1.0)
        assert sol.marker == NONE_ABOVE
        assert not sol.crossed

    def test_curve_stays_above(self):
        sol = crossing(F_LINEAR, 0.1, 0.5, 1.0)  # s(0.5) = 0.25 > 0.1 already
        assert sol.marker == NONE_BELOW

    def test_negative_target_below_penalty_floor(self):
        sol = crossing(F_SHIFTED, -0.3, 0.0, 1.0)  # s >= -t = -0.25 > -0.3
        assert sol.marker == NONE_BELOW

    def test_rejects_empty_interval(self):
        with pytest.raises(InvalidIntervalError):
            crossing(F_LINEAR, 0.2, 1.0, 1.0)

    @given(
        w=st.floats(0.05, 1.0),
        r=st.floats(0.3, 1.0),
        t=st.sampled_from([0.0, 0.25, 0.5]),
        p=st.floats(0.0, 1.5),
    )
    def test_round_trip_is_exact_when_crossed(self, w, r, t, p):
        f = DynamicFunction(w, r, t)
        sol = crossing(f, p, 0.0, 3.0)
        if sol.crossed:
            assert abs(eval_s(f, sol.h_star) - p) <= 1e-12


class TestIntegralS:
    def test_triangle_area(self):
        assert integral_s(F_LINEAR, 0.0, 2.0) == pytest.approx(1.0, abs=1e-15)

    def test_power_antiderivative(self):
        # frozen from independent 50-digit quadrature: 0.3 / 1.85
        assert integral_s(F_MET, 0.0, 1.0) == pytest.approx(0.1621621621621622, abs=1e-12)

    def test_clipped_triangle(self):
        # frozen: 0.125 * (12/13)**2 = 18/169
        assert integral_s(F_QUARTER, 0.0, 12 / 13) == pytest.approx(0.1065088757396450, abs=1e-12)

    def test_rejects_reversed_interval(self):
        with pytest.raises(InvalidIntervalError):
            integral_s(F_LINEAR, 1.0, 0.5)
        with pytest.raises(InvalidIntervalError):
            integral_s(F_LINEAR, -0.5, 0.5)


class TestSplitBlock:
    def test_partial_coverage_block(self):
        split = split_block(make_block(0.0, 1.0, 0.0, 3 / 13), F_QUARTER)
        assert split.b_r == pytest.approx(21 / 169, abs=1e-12)  # 0.124260...
        assert split.b_l == pytest.approx(18 / 169, abs=1e-12)  # 0.106509...
        assert split.decision is Decision.DEPLOY

    def test_top_corner_block(self):
        split = split_block(make_block(1.0, 2.0, 2 / 3, 1.0), F_LINEAR)
        assert split.b_r == pytest.approx(1 / 9, abs=1e-12)
        assert split.b_l == pytest.approx(2 / 9, abs=1e-12)
        assert split.decision is Decision.NOT_DEPLOY

    def test_fully_cleared_block(self):
        split = split_block(make_block(1.0, 2.0, 0.0, 3 / 13), F_QUARTER)
        assert split.b_r == pytest.approx(3 / 13, abs=1e-15)
        assert split.b_r == split.block.area
        assert split.decision is Decision.DEPLOY

    def test_untouched_block_is_empty(self):
        split = split_block(make_block(0.0, 1.0, 0.6, 0.9), F_QUARTER)  # max s = 0.25 < 0.6
        assert split.b_r == 0.0
        assert split.decision is Decision.NOT_DEPLOY

    def test_conservation_and_oracle_on_random_tuples(self):
        rng = np.random.default_rng(7)
        for h_lo, h_hi, p_lo, p_hi, w, r, t in sample_tuples(rng, 300):
            block = make_block(h_lo, h_hi, p_lo, p_hi)
            f = DynamicFunction(w, r, t, continuous_t=True)
            split = split_block(block, f)
            assert abs(split.b_l + split.b_r - block.area) <= 1e-12
            n = oracle_subdivisions(h_lo, h_hi, w, r)
            assert split.b_r == pytest.approx(
                riemann_b_r(h_lo, h_hi, p_lo, p_hi, w, r, t, n), abs=1e-9
            )

    def test_monotone_in_w_and_t(self):
        block = make_block(1.0, 2.0, 1 / 3, 2 / 3)
        for r in (0.7, 1.0):
            previous = -1.0
            for w in np.linspace(0.02, 1.0, 50):
                b_r = split_block(block, DynamicFunction(float(w), r, 0.25)).b_r
                assert b_r >= previous
                previous = b_r
            for w in (0.3, 0.8):
                values = [
                    split_block(block, DynamicFunction(w, r, t)).b_r for t in (0.0, 0.25, 0.5)
                ]
                assert values[0] >= values[1] >= values[2]

    def test_scale_invariance_linear_case(self):
        base = make_block(0.5, 1.5, 0.2, 0.7)
        f = DynamicFunction(0.6, 1.0, 0.0)
        split = split_block(base, f)
        for lam in (0.5, 2.0, 7.0):
            scaled = make_block(0.5 * lam, 1.5 * lam, 0.2 * lam, 0.7 * lam)
            scaled_split = split_block(scaled, f)
            assert scaled_split.b_r == pytest.approx(split.b_r * lam * lam, rel=1e-12)
            assert scaled_split.b_l == pytest.approx(split.b_l * lam * lam, rel=1e-12)
            assert scaled_split.decision is split.decision

    @settings(max_examples=200, deadline=None)
    @given(
        w=st.floats(0.05, 1.0),
        r=st.floats(0.5, 1.0),
        t=st.sampled_from([0.0, 0.25, 0.5]),
        h_lo=st.floats(0.0, 2.0),
        width=st.floats(0.1, 1.5),
        p_lo=st.floats(0.0, 1.5),
        height=st.floats(0.05, 1.0),
    )
    def test_conservation_property(self, w, r, t, h_lo, width, p_lo, height):
        block = make_block(h_lo, h_lo + width, p_lo, p_lo + height)
        split = split_block(block, DynamicFunction(w, r, t))
        assert abs(split.b_l + split.b_r - block.area) <= 1e-12
        assert split.b_l >= 0.0 and split.b_r >= 0.0
        assert (split.decision is Decision.DEPLOY) == (split.b_r > split.b_l)


class TestDecisionMatrix:
    @pytest.mark.parametrize(
        "context, w",
        [(TOLERANT, 0.25), (MODERATE, 0.5), (CONSERVATIVE, 0.75)],
        ids=["tolerant", "moderate", "conservative"],
    )
    def test_reference_pattern_across_contexts(self, context, w):
        grid = build_grid(context)
        splits = decision_matrix(grid, DynamicFunction(w, 1.0, 0.0))
        decisions = {
            (s.block.privacy.index, s.block.harm.index): s.decision for s in splits
        }
        assert decisions[(1, 1)] is Decision.DEPLOY
        assert decisions[(1, 2)] is Decision.DEPLOY
        assert decisions[(2, 2)] is Decision.DEPLOY
        assert decisions[(2, 1)] is Decision.NOT_DEPLOY
        assert decisions[(3, 2)] is Decision.NOT_DEPLOY

    def test_row_major_order(self):
        grid = build_grid(MODERATE)
        splits = decision_matrix(grid, F_LINEAR)
        cells = [(s.block.privacy.index, s.block.harm.index) for s in splits]
        assert cells == [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)]


class TestDeploymentFrontier:
    def test_known_linear_frontier(self):
        # block [1,2] x [0,3/13] with r=1, t=0: b_r = 1.5 w until saturation,
        # so the half-area frontier sits at w = (3/26) / 1.5 = 1/13.
        block = make_block(1.0, 2.0, 0.0, 3 / 13)
        w_star = deployment_frontier_w(block, 1.0, 0.0)
        assert w_star == pytest.approx(1 / 13, abs=1e-9)
        split = split_block(block, DynamicFunction(w_star, 1.0, 0.0))
        assert abs(split.b_r - split.b_l) <= 1e-10

    def test_frontier_balances_the_split(self):
        block = make_block(0.0, 1.0, 0.0, 3 / 13)
        w_star = deployment_frontier_w(block, 1.0, 0.0)
        split = split_block(block, DynamicFunction(w_star, 1.0, 0.0))
        assert abs(split.b_r - split.b_l) <= 1e-10

    def test_unreachable_block(self):
        # p3 x h1 on a conservative grid: even w=1 cannot cover half the block
        block = make_block(0.0, 1.0, 1.2, 1.8)
        assert deployment_frontier_w(block, 1.0, 0.0) is None

    def test_unreachable_matches_w1_decision(self):
        rng = np.random.default_rng(21)
        for h_lo, h_hi, p_lo, p_hi, w, r, t in sample_tuples(rng, 60):
            block = make_block(h_lo, h_hi, p_lo, p_hi)
            w_star = deployment_frontier_w(block, r, t)
            full = split_block(block, DynamicFunction(1.0, r, t, continuous_t=True))
            if w_star is None:
                assert full.decision is Decision.NOT_DEPLOY
            else:
                split = split_block(block, DynamicFunction(w_star, r, t, continuous_t=True))
                assert abs(split.b_r - split.b_l) <= 1e-10
