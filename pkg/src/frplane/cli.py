"""Command-line front door: batch assessment, parameter sweeps, plane export.

The assess exit code is a gate for scripts and pipelines:

    0  intervention recommended
    2  non-intervention
    3  out of plane (threat never reaches the harm scale)
    1  any error (bad file, bad flags, IO failure)

Everything the commands print or write is deterministic for identical
inputs, so outputs can be diffed and archived.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Union

from .assessment import assess
from .classification import DEFAULT_TABLES, PRESET_CONTEXTS, build_grid, context_from_selector
from .domain import (
    CulturalContext,
    Decision,
    DomainError,
    DynamicFunction,
    OverallRecommendation,
    Scenario,
)
from .geometry import decision_matrix
from .render import plane_render, render_svg, render_to_mapping
from .store import (
    ScenarioDocument,
    StorageError,
    read_document,
    serialize_assessment,
    write_assessment,
    write_builtin_scenarios,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NON_INTERVENTION = 2
EXIT_OUT_OF_PLANE = 3

_OVERALL_EXIT = {
    OverallRecommendation.INTERVENTION: EXIT_OK,
    OverallRecommendation.NON_INTERVENTION: EXIT_NON_INTERVENTION,
    OverallRecommendation.OUT_OF_PLANE: EXIT_OUT_OF_PLANE,
}


class CliError(DomainError):
    pass


class RangeError(CliError):
    """A sweep range leaves the variable's admissible domain."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors, which would collide
    # with the non-intervention gate code; surface a CliError instead.
    def error(self, message):
        raise CliError(message)


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    """Decisions over the full grid at one sampled parameter value."""

    value: float
    decisions: tuple[Decision, ...]  # 6 entries, row-major
    overall: OverallRecommendation


def _sweep_values(lo: float, hi: float, steps: int) -> list[float]:
    if steps < 1:
        raise RangeError(f"steps must be >= 1, got {steps}")
    if lo > hi:
        raise RangeError(f"range must satisfy A <= B, got {lo}:{hi}")
    if steps == 1:
        return [lo]
    return [lo + i * (hi - lo) / (steps - 1) for i in range(steps)]


def sweep(scenario: Scenario, vary: str, lo: float, hi: float, steps: int) -> list[SweepRow]:
    """Sample one variable and report per-block decisions at every point."""
    if vary == "w":
        if not (0.0 < lo and hi <= 1.0):
            raise RangeError(f"w range must lie in (0, 1], got {lo}:{hi}")
    elif vary == "t":
        if not (0.0 <= lo and hi <= 0.5):
            raise RangeError(f"t range must lie in [0, 0.5], got {lo}:{hi}")
    elif vary == "ratio":
        if not lo > 0.0:
            raise RangeError(f"ratio range must be positive, got {lo}:{hi}")
    else:
        raise RangeError(f"cannot vary {vary!r}; choose w, t or ratio")

    rows = []
    for value in _sweep_values(lo, hi, steps):
        probe = scenario
        if vary == "w":
            f = scenario.function
            probe = dataclasses.replace(
                probe, function=DynamicFunction(value, f.r, f.t, continuous_t=True)
            )
        elif vary == "t":
            f = scenario.function
            probe = dataclasses.replace(
                probe, function=DynamicFunction(f.w, f.r, value, continuous_t=True)
            )
        else:
            probe = dataclasses.replace(probe, context=CulturalContext("custom", value))
        grid = build_grid(probe.context)
        splits = decision_matrix(grid, probe.function)
        overall = assess(probe).overall
        rows.append(
            SweepRow(
                value=value,
                decisions=tuple(s.decision for s in splits),
                overall=overall,
            )
        )
    return rows


_CELLS = ("p1h1", "p1h2", "p2h1", "p2h2", "p3h1", "p3h2")


def format_sweep_table(vary: str, rows: Sequence[SweepRow]) -> str:
    header = [f"{vary:<12}"] + [f"{c:<12}" for c in _CELLS] + ["overall"]
    lines = ["".join(header)]
    for row in rows:
        cells = [f"{row.value:<12.6f}"]
        cells += [f"{d.value:<12}" for d in row.decisions]
        cells.append(row.overall.value)
        lines.append("".join(cells))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# command implementations
# ---------------------------------------------------------------------------


def _load(scenario_path: str, ratio: Optional[str]) -> ScenarioDocument:
    doc = read_document(scenario_path)
    if ratio is not None:
        selector: Union[str, float]
        if ratio in PRESET_CONTEXTS:
            selector = ratio
        else:
            try:
                selector = float(ratio)
            except ValueError:
                raise CliError(
                    f"--ratio must be tolerant, moderate, conservative or a number, got {ratio!r}"
                ) from None
        context = context_from_selector(selector)
        doc = dataclasses.replace(doc, scenario=dataclasses.replace(doc.scenario, context=context))
    return doc


def cmd_assess(args) -> int:
    doc = _load(args.scenario, args.ratio)
    result = assess(
        doc.scenario,
        doc.tables if doc.tables is not None else DEFAULT_TABLES,
        authorization_obtained=doc.authorization_obtained,
        registration_done=doc.registration_done,
    )
    if args.out:
        write_assessment(result, args.out)
    else:
        sys.stdout.write(serialize_assessment(result))
    return _OVERALL_EXIT[result.overall]


def cmd_sweep(args) -> int:
    doc = _load(args.scenario, args.ratio)
    try:
        lo_s, hi_s = args.range.split(":", 1)
        lo, hi = float(lo_s), float(hi_s)
    except ValueError:
        raise CliError(f"--range must look like A:B, got {args.range!r}") from None
    rows = sweep(doc.scenario, args.vary, lo, hi, args.steps)
    table = format_sweep_table(args.vary, rows)
    if args.out:
        try:
            Path(args.out).write_text(table, encoding="utf-8")
        except OSError as exc:
            raise StorageError(f"cannot write sweep table to {args.out}: {exc}") from exc
    else:
        sys.stdout.write(table)
    return EXIT_OK


def cmd_export_plane(args) -> int:
    doc = _load(args.scenario, args.ratio)
    grid = build_grid(doc.scenario.context)
    splits = decision_matrix(grid, doc.scenario.function)
    render = plane_render(grid, doc.scenario.function, splits)
    if args.format == "vector":
        payload = render_svg(render)
    else:
        payload = json.dumps(render_to_mapping(render), indent=2, sort_keys=True) + "\n"
    try:
        Path(args.out).write_text(payload, encoding="utf-8")
    except OSError as exc:
        raise StorageError(f"cannot write plane to {args.out}: {exc}") from exc
    return EXIT_OK


def cmd_fixtures(args) -> int:
    paths = write_builtin_scenarios(args.outdir)
    for path in paths:
        sys.stdout.write(f"{path}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="frplane", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--scenario", required=True, help="path to a scenario document")
        p.add_argument(
            "--ratio",
            default=None,
            help="override the cultural context: tolerant|moderate|conservative|FLOAT",
        )

    p_assess = sub.add_parser("assess", help="assess one scenario file")
    add_common(p_assess)
    p_assess.add_argument("--out", default=None, help="write the assessment document here")
    p_assess.set_defaults(func=cmd_assess)

    p_sweep = sub.add_parser("sweep", help="sample one variable and tabulate the decisions")
    add_common(p_sweep)
    p_sweep.add_argument("--vary", required=True, choices=("w", "t", "ratio"))
    p_sweep.add_argument("--range", required=True, help="closed interval A:B")
    p_sweep.add_argument("--steps", required=True, type=int)
    p_sweep.add_argument("--out", default=None, help="write the table here instead of stdout")
    p_sweep.set_defaults(func=cmd_sweep)

    p_export = sub.add_parser("export-plane", help="export the assessed plane as a drawing")
    add_common(p_export)
    p_export.add_argument("--out", required=True)
    p_export.add_argument("--format", default="vector", choices=("document", "vector"))
    p_export.set_defaults(func=cmd_export_plane)

    p_fixtures = sub.add_parser("fixtures", help="write the bundled scenario files")
    p_fixtures.add_argument("--outdir", required=True)
    p_fixtures.set_defaults(func=cmd_fixtures)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
