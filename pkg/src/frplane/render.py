"""Drawing instructions for the plane and a deterministic SVG renderer.

The renderer never recomputes any area or decision: it consumes the
splits produced by the geometry module and turns them into a declarative
:class:`PlaneRender` (grid extents, per-block fill state, curve
polyline), which then serializes either to JSON or to SVG. The SVG text
is a pure function of the render, byte-identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domain import BlockSplit, Decision, DynamicFunction, PlaneGrid
from .geometry import eval_s

CURVE_SAMPLES = 257  # enough for a visually smooth power curve on [0, 2]


@dataclass(frozen=True)
class BlockRender:
    """Fill state of one block: decision plus the fraction b_r / area."""

    privacy_level: int
    harm_level: int
    h_lo: float
    h_hi: float
    p_lo: float
    p_hi: float
    fill_fraction: float
    decision: Decision


@dataclass(frozen=True)
class PlaneRender:
    """Everything a drawing surface needs to depict one assessed plane."""

    h_max: float
    p_max: float
    hw_ratio: float
    context_label: str
    blocks: tuple[BlockRender, ...]
    curve: tuple[tuple[float, float], ...]
    x_label: str = "Security Harm"
    y_label: str = "Privacy Loss"


def plane_render(grid: PlaneGrid, f: DynamicFunction, splits: list[BlockSplit]) -> PlaneRender:
    """Assemble drawing instructions for a grid, curve and its block splits."""
    h_max = max(b.h_hi for b in grid.blocks)
    p_max = max(b.p_hi for b in grid.blocks)
    by_cell = {(s.block.privacy.index, s.block.harm.index): s for s in splits}
    blocks = []
    for block in grid.blocks:
        key = (block.privacy.index, block.harm.index)
        split = by_cell.get(key)
        if split is None:
            continue
        blocks.append(
            BlockRender(
                privacy_level=block.privacy.index,
                harm_level=block.harm.index,
                h_lo=block.h_lo,
                h_hi=block.h_hi,
                p_lo=block.p_lo,
                p_hi=block.p_hi,
                fill_fraction=split.b_r / block.area,
                decision=split.decision,
            )
        )
    step = h_max / (CURVE_SAMPLES - 1)
    curve = tuple((i * step, eval_s(f, i * step)) for i in range(CURVE_SAMPLES))
    return PlaneRender(
        h_max=h_max,
        p_max=p_max,
        hw_ratio=grid.hw_ratio,
        context_label=grid.context_label,
        blocks=tuple(blocks),
        curve=curve,
    )


def render_to_mapping(render: PlaneRender) -> dict:
    """JSON-able form of the drawing instructions."""
    return {
        "kind": "plane-render",
        "h_max": render.h_max,
        "p_max": render.p_max,
        "hw_ratio": render.hw_ratio,
        "context_label": render.context_label,
        "x_label": render.x_label,
        "y_label": render.y_label,
        "blocks": [
            {
                "privacy_level": b.privacy_level,
                "harm_level": b.harm_level,
                "h_lo": b.h_lo,
                "h_hi": b.h_hi,
                "p_lo": b.p_lo,
                "p_hi": b.p_hi,
                "fill_fraction": b.fill_fraction,
                "decision": b.decision.value,
            }
            for b in render.blocks
        ],
        "curve": [[h, s] for h, s in render.curve],
    }


# SVG layout constants (pixels).
_SCALE = 260.0
_MARGIN = 56.0
_DEPLOY_FILL = "#2e7d52"
_NOT_DEPLOY_FILL = "#b23a3a"


def _px(value: float) -> str:
    return f"{value:.4f}"


def render_svg(render: PlaneRender) -> str:
    """Serialize the plane to SVG; output is byte-stable for equal inputs."""
    width = render.h_max * _SCALE + 2 * _MARGIN
    height = render.p_max * _SCALE + 2 * _MARGIN

    def x(h: float) -> float:
        return _MARGIN + h * _SCALE

    def y(p: float) -> float:
        return _MARGIN + (render.p_max - p) * _SCALE

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_px(width)}" height="{_px(height)}" '
        f'viewBox="0 0 {_px(width)} {_px(height)}">',
        f'<rect x="0" y="0" width="{_px(width)}" height="{_px(height)}" fill="#ffffff"/>',
    ]
    for b in render.blocks:
        color = _DEPLOY_FILL if b.decision is Decision.DEPLOY else _NOT_DEPLOY_FILL
        opacity = 0.15 + 0.6 * b.fill_fraction
        parts.append(
            f'<rect x="{_px(x(b.h_lo))}" y="{_px(y(b.p_hi))}" '
            f'width="{_px((b.h_hi - b.h_lo) * _SCALE)}" height="{_px((b.p_hi - b.p_lo) * _SCALE)}" '
            f'fill="{color}" fill-opacity="{opacity:.4f}" stroke="#333333" stroke-width="1"/>'
        )
        label = "deploy" if b.decision is Decision.DEPLOY else "not deploy"
        parts.append(
            f'<text x="{_px(x(b.h_lo) + 6)}" y="{_px(y(b.p_hi) + 16)}" '
            f'font-family="sans-serif" font-size="12" fill="#222222">'
            f"p{b.privacy_level}h{b.harm_level}: {label} ({b.fill_fraction:.3f})</text>"
        )
    # grid frame
    parts.append(
        f'<rect x="{_px(x(0.0))}" y="{_px(y(render.p_max))}" '
        f'width="{_px(render.h_max * _SCALE)}" height="{_px(render.p_max * _SCALE)}" '
        f'fill="none" stroke="#000000" stroke-width="1.5"/>'
    )
    # the implementation curve, clamped into the plane
    points = " ".join(
        f"{_px(x(h))},{_px(y(min(max(s, 0.0), render.p_max)))}" for h, s in render.curve
    )
    parts.append(
        f'<polyline points="{points}" fill="none" stroke="#1a4d8f" stroke-width="2"/>'
    )
    parts.append(
        f'<text x="{_px(x(render.h_max / 2))}" y="{_px(height - 14)}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14" fill="#000000">{render.x_label}</text>'
    )
    parts.append(
        f'<text x="16" y="{_px(y(render.p_max / 2))}" '
        f'font-family="sans-serif" font-size="14" fill="#000000" '
        f'transform="rotate(-90 16 {_px(y(render.p_max / 2))})" text-anchor="middle">'
        f"{render.y_label}</text>"
    )
    parts.append(
        f'<text x="{_px(_MARGIN)}" y="24" font-family="sans-serif" font-size="13" fill="#000000">'
        f"context: {render.context_label} (H/W = {render.hw_ratio:.6g})</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
