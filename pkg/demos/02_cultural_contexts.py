"""Same deployment question, three societies.

The block height/width ratio encodes how much privacy a society trades
for security: 3/13 tolerant, 3/9 moderate, 3/5 conservative. Pairing
each ratio with a matching appearance probability (0.25 / 0.50 / 0.75)
keeps the qualitative decision pattern identical across all three
planes, which is the calibration anchor for the whole model.

Writes one SVG per context into --outdir (default demo-output/).
"""

import argparse
from pathlib import Path

from frplane import DynamicFunction, decision_matrix
from frplane.classification import CONSERVATIVE, MODERATE, TOLERANT, build_grid
from frplane.render import plane_render, render_svg

PAIRINGS = [(TOLERANT, 0.25), (MODERATE, 0.50), (CONSERVATIVE, 0.75)]
CELLS = ["p1h1", "p1h2", "p2h1", "p2h2", "p3h1", "p3h2"]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="demo-output")
    args = parser.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    print(f"{'context':<14}{'ratio':<10}{'w':<6}" + "".join(f"{c:<12}" for c in CELLS))
    for context, w in PAIRINGS:
        grid = build_grid(context)
        f = DynamicFunction(w, 1.0, 0.0)
        splits = decision_matrix(grid, f)
        marks = ["X" if s.decision.value == "deploy" else "." for s in splits]
        print(f"{context.name:<14}{context.hw_ratio:<10.4f}{w:<6.2f}"
              + "".join(f"{m:<12}" for m in marks))

        svg_path = outdir / f"plane-{context.name}.svg"
        svg_path.write_text(render_svg(plane_render(grid, f, splits)), encoding="utf-8")
        print(f"  wrote {svg_path}")

    print("\nX = deploy, . = not deploy. The pattern is the same in every row:")
    print("deploy at (p1,h1), (p1,h2), (p2,h2); reject (p2,h1), (p3,h1), (p3,h2).")


if __name__ == "__main__":
    main()
