"""EU AI Act Article 5 checklist for real-time remote biometric identification.

This is a checklist generator, not a legal engine: it records which
Article 5 conditions a scenario satisfies, as structured fields plus
human-readable notes, so the package's output can feed the authorization
decision of a judicial or administrative authority. It never turns a
non-intervention assessment into a green light.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .domain import (
    OutOfRangeError,
    OverallRecommendation,
    Scenario,
    ThreatCategory,
)

if TYPE_CHECKING:  # pragma: no cover
    from .domain import Assessment


class Objective(str, enum.Enum):
    """Article 5(1)(h) objectives that may permit real-time biometric identification."""

    VICTIM_SEARCH = "victim-search"  # 5(1)(h)(i): victims and missing persons
    IMMINENT_THREAT = "imminent-threat"  # 5(1)(h)(ii): threat to life / terrorist attack
    SUSPECT_LOCALISATION = "suspect-localisation"  # 5(1)(h)(iii): Annex II offences
    NONE = "none"


class ComplianceVerdict(str, enum.Enum):
    PERMITTED_SUBJECT_TO_AUTHORIZATION = "permitted-subject-to-authorization"
    PROHIBITED = "prohibited"


@dataclass(frozen=True)
class ComplianceReport:
    """Structured Article 5 checklist for one scenario and its assessment.

    ``verdict`` answers only the legality axis: is there a qualifying
    objective at all? Everything that must still happen before a lawful
    deployment (authorization, registration, a proportionality verdict of
    intervention) is listed in ``blocking_preconditions``.
    """

    objective: Objective
    element_a_note: str
    element_b_note: str
    authorization_obtained: bool
    registration_done: bool
    verdict: ComplianceVerdict
    blocking_preconditions: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "blocking_preconditions", tuple(self.blocking_preconditions))
        if self.objective is Objective.NONE and self.verdict is not ComplianceVerdict.PROHIBITED:
            raise OutOfRangeError(
                "verdict", self.verdict, "no qualifying objective forces a prohibited verdict"
            )

    @property
    def deployment_cleared(self) -> bool:
        """True only when nothing (legal or proportionality-wise) blocks deployment."""
        return (
            self.verdict is ComplianceVerdict.PERMITTED_SUBJECT_TO_AUTHORIZATION
            and not self.blocking_preconditions
        )


def match_objective(scenario: Scenario) -> Objective:
    """Map the scenario's threat category onto an Article 5(1)(h) objective."""
    category = scenario.threat_category
    if category is ThreatCategory.MISSING_PERSON:
        return Objective.VICTIM_SEARCH
    if category is ThreatCategory.IMMINENT_THREAT:
        return Objective.IMMINENT_THREAT
    if category is ThreatCategory.CRIMINAL_SUSPECT and scenario.annex_ii_qualifying:
        return Objective.SUSPECT_LOCALISATION
    return Objective.NONE


def _element_a_note(scenario: Scenario, assessment: "Assessment") -> str:
    # Article 5(2)(a): seriousness, probability and scale of the harm if
    # the system is not used.
    w = scenario.function.w
    harm_labels = sorted({s.block.harm.label for s in assessment.splits})
    if not harm_labels:
        return (
            "Article 5(2)(a): no harm level on the human-life scale is assignable "
            f"(threat descriptor {scenario.threat_level!r}); seriousness and scale do not "
            "reach the threshold the plane models."
        )
    return (
        f"Article 5(2)(a): harm assessed at level(s) {', '.join(harm_labels)} with "
        f"appearance probability w={w:g}; seriousness and scale enter the plane through "
        "the harm axis, probability through the curve height."
    )


def _element_b_note(scenario: Scenario, assessment: "Assessment") -> str:
    # Article 5(2)(b): consequences for the rights and freedoms of all
    # persons concerned.
    levels = ", ".join(f"p{i}" for i in sorted(scenario.applicable_privacy_levels))
    t = scenario.function.t
    duration = {0.0: "under one week", 0.25: "a couple of weeks"}.get(t, "over a month")
    if t not in (0.0, 0.25, 0.5):
        duration = f"penalty t={t:g}"
    return (
        f"Article 5(2)(b): rights impact assessed at privacy level(s) {levels}; "
        f"deployment duration {duration} (t={t:g}) shifts the curve down and with it "
        "every block decision."
    )


def build_report(
    scenario: Scenario,
    assessment: "Assessment",
    authorization_obtained: bool = False,
    registration_done: bool = False,
) -> ComplianceReport:
    """Assemble the Article 5 checklist for a completed assessment."""
    objective = match_objective(scenario)
    if objective is Objective.NONE:
        verdict = ComplianceVerdict.PROHIBITED
    else:
        verdict = ComplianceVerdict.PERMITTED_SUBJECT_TO_AUTHORIZATION

    blocking: list[str] = []
    if objective is Objective.NONE:
        blocking.append(
            "no Article 5(1)(h) objective matches the stated threat category; "
            "real-time biometric identification is prohibited for this use"
        )
    if not authorization_obtained:
        blocking.append(
            "prior express authorization by a judicial or independent administrative "
            "authority has not been obtained (Article 5(3))"
        )
    if not registration_done:
        blocking.append(
            "fundamental rights impact assessment / EU database registration not recorded"
        )
    if assessment.overall is not OverallRecommendation.INTERVENTION:
        blocking.append(
            f"the proportionality assessment is {assessment.overall.value}, "
            "not an intervention recommendation"
        )

    return ComplianceReport(
        objective=objective,
        element_a_note=_element_a_note(scenario, assessment),
        element_b_note=_element_b_note(scenario, assessment),
        authorization_obtained=bool(authorization_obtained),
        registration_done=bool(registration_done),
        verdict=verdict,
        blocking_preconditions=tuple(blocking),
    )
