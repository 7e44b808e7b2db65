"""What-if exploration: where does each block flip to deploy?

For every block of the moderate grid, bisection finds the smallest
appearance probability w that satisfies the area rule (given r and t);
a sweep over w then confirms each block flips exactly once, at its
frontier.
"""

from frplane import DynamicFunction, deployment_frontier_w, split_block
from frplane.classification import MODERATE, build_grid


def main():
    r, t = 0.9, 0.0
    grid = build_grid(MODERATE)
    print(f"moderate grid, r={r}, t={t}\n")
    print(f"{'block':<10}{'frontier w':<14}{'check |B_r - B_l|':<20}")
    frontiers = {}
    for block in grid.blocks:
        cell = f"p{block.privacy.index}h{block.harm.index}"
        w_star = deployment_frontier_w(block, r, t)
        if w_star is None:
            print(f"{cell:<10}{'unreachable':<14}{'-':<20}")
            continue
        split = split_block(block, DynamicFunction(w_star, r, t))
        frontiers[cell] = w_star
        print(f"{cell:<10}{w_star:<14.8f}{abs(split.b_r - split.b_l):<20.2e}")

    print("\nsweep of w across [0.05, 1.0]:")
    ws = [0.05 + 0.05 * i for i in range(20)]
    header = f"{'w':<8}" + "".join(f"{f'p{p}h{h}':<8}" for p in (1, 2, 3) for h in (1, 2))
    print(header)
    for w in ws:
        f = DynamicFunction(min(w, 1.0), r, t)
        marks = []
        for block in grid.blocks:
            split = split_block(block, f)
            marks.append("X" if split.b_r > split.b_l else ".")
        print(f"{w:<8.2f}" + "".join(f"{m:<8}" for m in marks))
    print("\nEach column flips from . to X exactly once, at its frontier value.")


if __name__ == "__main__":
    main()
