"""Scenario assessment: classification + geometry + compliance in one pass."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from . import compliance
from .classification import DEFAULT_TABLES, LevelTables, build_grid, classify_harm
from .domain import (
    Assessment,
    BlockSplit,
    Decision,
    HarmLevel,
    InterventionLadder,
    MATERIAL_ONLY,
    OutOfRangeError,
    OverallRecommendation,
    Scenario,
    THREAT_NONE,
    THREAT_UNKNOWN,
)
from .geometry import split_block


@dataclass(frozen=True)
class LadderRecommendation:
    """A rung on the intervention ladder plus why the engine picked it."""

    level: InterventionLadder
    rationale: str


def ladder_fallback(
    overall: OverallRecommendation,
    scenario: Scenario,
    out_of_plane_level: InterventionLadder = InterventionLadder.CCTV,
) -> LadderRecommendation:
    """Pick the intervention rung implied by the overall verdict.

    Face recognition is reserved for intervention verdicts. A scenario
    that never reached the plane falls back to the configured site policy
    (CCTV by default, on-site agents where cameras are not an option),
    and a scenario with no security need at all gets no intervention.
    """
    if out_of_plane_level not in (InterventionLadder.CCTV, InterventionLadder.ON_SITE_AGENT):
        raise OutOfRangeError(
            "out_of_plane_level", out_of_plane_level, "site policy must be cctv or on-site-agent"
        )
    if overall is OverallRecommendation.INTERVENTION:
        return LadderRecommendation(
            InterventionLadder.FACE_RECOGNITION,
            "every evaluated block satisfies the area rule; deployment is proportional",
        )
    if overall is OverallRecommendation.NON_INTERVENTION:
        return LadderRecommendation(
            InterventionLadder.CCTV,
            "at least one evaluated block fails the area rule; fall back to camera "
            "surveillance without identification",
        )
    if scenario.threat_level == THREAT_NONE:
        return LadderRecommendation(
            InterventionLadder.NO_INTERVENTION,
            "no security need is declared for this site",
        )
    return LadderRecommendation(
        out_of_plane_level,
        "the threat never reaches the harm scale of the plane, so face recognition "
        "is not proportional; apply the site's conventional surveillance policy",
    )


def harm_levels_for_threat(
    threat_level, tables: LevelTables = DEFAULT_TABLES, density_class: int = 1
) -> list[HarmLevel]:
    """Harm columns a threat descriptor puts in play; empty means out of plane."""
    if threat_level in (MATERIAL_ONLY, THREAT_NONE):
        return []
    if threat_level == THREAT_UNKNOWN:
        # Harm class undetermined: assess every column so the verdict reads
        # "proportional provided the harm is on the scale at all".
        harms = [tables.harm_table[2], tables.harm_table[3]]
        return [h for h in harms if h is not None]
    level = classify_harm(density_class, threat_level, tables)
    return [] if level is None else [level]


def assess(
    scenario: Scenario,
    tables: LevelTables = DEFAULT_TABLES,
    *,
    authorization_obtained: bool = False,
    registration_done: bool = False,
    out_of_plane_level: InterventionLadder = InterventionLadder.CCTV,
) -> Assessment:
    """Assess one scenario end to end.

    Builds the grid for the scenario's cultural context, splits every
    (applicable privacy level x evaluated harm level) block, aggregates
    the strict all-blocks rule into an overall verdict, picks the ladder
    fallback and attaches the Article 5 checklist. Pure and deterministic:
    identical inputs produce bit-identical areas.
    """
    grid = build_grid(scenario.context)
    harm_levels = harm_levels_for_threat(scenario.threat_level, tables, scenario.density_class)

    splits: list[BlockSplit] = []
    for p_index in sorted(scenario.applicable_privacy_levels):
        for harm in sorted(harm_levels):
            block = grid.block_at(p_index, harm.index)
            splits.append(split_block(block, scenario.function))

    if not splits:
        overall = OverallRecommendation.OUT_OF_PLANE
    elif all(s.decision is Decision.DEPLOY for s in splits):
        overall = OverallRecommendation.INTERVENTION
    else:
        overall = OverallRecommendation.NON_INTERVENTION

    ladder = ladder_fallback(overall, scenario, out_of_plane_level)
    result = Assessment(
        scenario_id=scenario.id,
        splits=tuple(splits),
        overall=overall,
        ladder_fallback=ladder.level,
        context=scenario.context,
        ladder_rationale=ladder.rationale,
        compliance=None,
    )
    report = compliance.build_report(
        scenario,
        result,
        authorization_obtained=authorization_obtained,
        registration_done=registration_done,
    )
    return dataclasses.replace(result, compliance=report)
