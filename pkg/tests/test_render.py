"""Drawing-instruction invariants for the plane renderer."""

import json

from frplane.classification import TOLERANT, build_grid
from frplane.domain import DynamicFunction
from frplane.geometry import decision_matrix, eval_s
from frplane.render import plane_render, render_svg, render_to_mapping


def _render(w=0.25, r=1.0, t=0.0):
    grid = build_grid(TOLERANT)
    f = DynamicFunction(w, r, t)
    splits = decision_matrix(grid, f)
    return plane_render(grid, f, splits), f, splits


class TestPlaneRender:
    def test_one_fill_state_per_block(self):
        render, _, splits = _render()
        assert len(render.blocks) == 6
        by_cell = {(s.block.privacy.index, s.block.harm.index): s for s in splits}
        for block in render.blocks:
            split = by_cell[(block.privacy_level, block.harm_level)]
            assert block.fill_fraction == split.b_r / split.block.area
            assert block.decision is split.decision

    def test_curve_samples_satisfy_the_curve(self):
        render, f, _ = _render(w=0.4, r=0.8, t=0.25)
        assert len(render.curve) >= 64
        for h, s in render.curve:
            assert abs(eval_s(f, h) - s) <= 1e-9

    def test_extents_cover_the_grid(self):
        render, _, _ = _render()
        assert render.h_max == 2.0
        assert render.p_max == 3 * TOLERANT.hw_ratio

    def test_mapping_is_json_able_and_stable(self):
        render, _, _ = _render()
        first = json.dumps(render_to_mapping(render), sort_keys=True)
        second = json.dumps(render_to_mapping(render), sort_keys=True)
        assert first == second

    def test_svg_deterministic_and_labelled(self):
        render, _, _ = _render()
        svg = render_svg(render)
        assert svg == render_svg(render)
        assert "Security Harm" in svg and "Privacy Loss" in svg
        assert svg.count("<rect") == 8  # background + six blocks + frame
