"""Walk through the decision rule on a single plane block.

The plane puts Privacy Loss (p) on the y-axis and Security Harm (h) on
the x-axis. A deployment is scored by the curve s(h) = w * h**r - t;
inside each block the curve separates a left area B_l (privacy wins)
from a right area B_r (security wins), and deployment is proportional
exactly when B_r > B_l.
"""

from frplane import DynamicFunction, crossing, eval_s, integral_s, split_block
from frplane.classification import TOLERANT, build_grid


def main():
    f = DynamicFunction(w=0.25, r=1.0, t=0.0)
    print(f"curve parameters: w={f.w}, r={f.r}, t={f.t}")
    print(f"s(1.0) = {eval_s(f, 1.0):.6f}")
    print(f"s(2.0) = {eval_s(f, 2.0):.6f}")

    grid = build_grid(TOLERANT)
    block = grid.block_at(1, 1)  # lowest privacy row, first harm column
    print(f"\nblock (p1, h1): h in [{block.h_lo}, {block.h_hi}], "
          f"p in [{block.p_lo:.6f}, {block.p_hi:.6f}], area {block.area:.6f}")

    sol = crossing(f, block.p_hi, block.h_lo, block.h_hi)
    print(f"curve reaches the block ceiling at h* = {sol.h_star:.6f}")
    print(f"area under the raw curve on [0, h*]: {integral_s(f, 0.0, sol.h_star):.6f}")

    split = split_block(block, f)
    print(f"\nB_l = {split.b_l:.6f}")
    print(f"B_r = {split.b_r:.6f}")
    print(f"decision: {split.decision.value}  (deploy iff B_r > B_l, ties resolve against)")


if __name__ == "__main__":
    main()
