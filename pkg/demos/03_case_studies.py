"""Run the three bundled real-world cases end to end.

Each case goes through classification, block splitting, the overall
verdict, the intervention-ladder fallback and the Article 5 checklist;
the full assessment documents land in --outdir (default demo-output/).
"""

import argparse
from pathlib import Path

from frplane import assess, builtin_scenarios, write_assessment


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="demo-output")
    args = parser.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    for scenario in builtin_scenarios():
        result = assess(scenario)
        print(f"=== {scenario.id} ===")
        print(f"  context: {result.context.name} (H/W = {result.context.hw_ratio:.4f}), "
              f"w={scenario.function.w}, r={scenario.function.r}, t={scenario.function.t}")
        for split in result.splits:
            cell = f"(p{split.block.privacy.index}, h{split.block.harm.index})"
            print(f"  {cell}: B_l={split.b_l:.6f}  B_r={split.b_r:.6f}  -> {split.decision.value}")
        if not result.splits:
            print("  no harm level assignable: the case never reaches the plane")
        print(f"  overall: {result.overall.value}")
        print(f"  ladder fallback: {result.ladder_fallback.value}")
        report = result.compliance
        print(f"  article 5 objective: {report.objective.value} -> {report.verdict.value}")
        for item in report.blocking_preconditions:
            print(f"    blocked: {item}")

        dest = outdir / f"{scenario.id}.assessment.json"
        if dest.exists():
            dest.unlink()  # write_assessment refuses to race, not to rerun
        write_assessment(result, dest)
        print(f"  wrote {dest}\n")


if __name__ == "__main__":
    main()
