"""Scenario file format, built-in case fixtures, and assessment persistence.

Documents are JSON with an explicit ``schema_version`` and a strict
schema: unknown fields, missing fields and wrong types are parse errors,
out-of-domain values are validation errors. Strictness is deliberate —
this tool feeds legally sensitive decisions, so a misspelled field must
fail loudly instead of silently falling back to a default.

Assessment output is deterministic byte-for-byte: keys are sorted and
split areas are serialized with 12 significant digits, matching the
1e-12 area-conservation tolerance of the geometry.
"""

from __future__ import annotations

import dataclasses
import json
import os
from dataclasses import dataclass
from numbers import Real
from pathlib import Path
from typing import Any, Mapping, Union

from .classification import (
    HARM_LEVELS,
    LevelTables,
    MODERATE,
    PRESET_CONTEXTS,
    PRIVACY_LEVELS,
    TOLERANT,
    context_from_selector,
)
from .domain import (
    Assessment,
    CulturalContext,
    DomainError,
    DynamicFunction,
    MATERIAL_ONLY,
    Scenario,
    THREAT_UNKNOWN,
    ThreatCategory,
)

SCHEMA_VERSION = 1


class ParseError(DomainError, ValueError):
    """The document is structurally invalid (syntax, unknown field, wrong type)."""

    def __init__(self, location: str, reason: str):
        self.location = location
        self.reason = reason
        super().__init__(f"{location}: {reason}")


class ValidationError(DomainError, ValueError):
    """A structurally fine field carries an out-of-domain value."""

    def __init__(self, field: str, reason: str):
        self.field = field
        self.reason = reason
        super().__init__(f"{field}: {reason}")


class StorageError(DomainError):
    """Reading or writing a document failed at the filesystem level."""


@dataclass(frozen=True)
class ScenarioDocument:
    """A parsed scenario file: the scenario plus optional per-file overrides."""

    schema_version: int
    scenario: Scenario
    tables: LevelTables | None = None
    authorization_obtained: bool = False
    registration_done: bool = False


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


def _require_object(value: Any, path: str) -> Mapping[str, Any]:
    if not isinstance(value, dict):
        raise ParseError(path, f"must be an object, got {type(value).__name__}")
    return value


def _check_fields(obj: Mapping[str, Any], path: str, required: set[str], optional: set[str] = frozenset()):
    for key in obj:
        if key not in required and key not in optional:
            raise ParseError(f"{path}.{key}", "unknown field")
    for key in required:
        if key not in obj:
            raise ParseError(f"{path}.{key}", "required field is missing")


def _get_number(obj: Mapping[str, Any], path: str, key: str) -> float:
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, Real):
        raise ParseError(f"{path}.{key}", f"must be a number, got {type(value).__name__}")
    return float(value)


def _get_int(obj: Mapping[str, Any], path: str, key: str) -> int:
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{path}.{key}", f"must be an integer, got {type(value).__name__}")
    return value


def _get_str(obj: Mapping[str, Any], path: str, key: str) -> str:
    value = obj[key]
    if not isinstance(value, str):
        raise ParseError(f"{path}.{key}", f"must be a string, got {type(value).__name__}")
    return value


def _get_bool(obj: Mapping[str, Any], path: str, key: str, default: bool) -> bool:
    if key not in obj:
        return default
    value = obj[key]
    if not isinstance(value, bool):
        raise ParseError(f"{path}.{key}", f"must be a boolean, got {type(value).__name__}")
    return value


def _parse_function(obj: Mapping[str, Any], path: str) -> DynamicFunction:
    _check_fields(obj, path, {"w", "r", "t"})
    w = _get_number(obj, path, "w")
    r = _get_number(obj, path, "r")
    t = _get_number(obj, path, "t")
    try:
        return DynamicFunction(w, r, t)
    except DomainError as exc:
        raise ValidationError(f"{path}.{getattr(exc, 'field_name', 't')}", str(exc)) from exc


def _parse_context(value: Any, path: str) -> CulturalContext:
    if isinstance(value, str) or (isinstance(value, Real) and not isinstance(value, bool)):
        try:
            return context_from_selector(value if isinstance(value, str) else float(value))
        except DomainError as exc:
            raise ValidationError(path, str(exc)) from exc
    raise ParseError(path, "must be a preset name or a positive H/W ratio")


def _parse_threat_level(value: Any, path: str) -> Union[int, str]:
    if isinstance(value, bool):
        raise ParseError(path, "must be 2, 3 or one of the threat sentinels")
    if isinstance(value, (int, str)):
        return value
    raise ParseError(path, f"must be an integer or string, got {type(value).__name__}")


def _parse_privacy_levels(value: Any, path: str) -> frozenset[int]:
    if not isinstance(value, list):
        raise ParseError(path, f"must be a list, got {type(value).__name__}")
    levels: list[int] = []
    for i, item in enumerate(value):
        if isinstance(item, bool) or not isinstance(item, int):
            raise ParseError(f"{path}[{i}]", "must be an integer")
        if item in levels:
            raise ValidationError(f"{path}[{i}]", f"duplicate privacy level {item}")
        levels.append(item)
    return frozenset(levels)


def _parse_scenario_section(obj: Mapping[str, Any], path: str) -> Scenario:
    _check_fields(
        obj,
        path,
        required={
            "id",
            "description",
            "density_class",
            "site_cost_class",
            "threat_level",
            "threat_category",
            "function",
            "context",
            "privacy_levels",
        },
        optional={"annex_ii_qualifying"},
    )
    function = _parse_function(_require_object(obj["function"], f"{path}.function"), f"{path}.function")
    context = _parse_context(obj["context"], f"{path}.context")
    category_raw = _get_str(obj, path, "threat_category")
    try:
        category = ThreatCategory(category_raw)
    except ValueError:
        raise ValidationError(
            f"{path}.threat_category",
            f"must be one of {[c.value for c in ThreatCategory]}, got {category_raw!r}",
        ) from None
    try:
        return Scenario(
            id=_get_str(obj, path, "id"),
            description=_get_str(obj, path, "description"),
            density_class=_get_int(obj, path, "density_class"),
            site_cost_class=_get_int(obj, path, "site_cost_class"),
            threat_level=_parse_threat_level(obj["threat_level"], f"{path}.threat_level"),
            threat_category=category,
            function=function,
            context=context,
            applicable_privacy_levels=_parse_privacy_levels(
                obj["privacy_levels"], f"{path}.privacy_levels"
            ),
            annex_ii_qualifying=_get_bool(obj, path, "annex_ii_qualifying", True),
        )
    except (ParseError, ValidationError):
        raise
    except DomainError as exc:
        raise ValidationError(f"{path}.{getattr(exc, 'field_name', 'scenario')}", str(exc)) from exc


def _parse_table_overrides(obj: Mapping[str, Any], path: str) -> LevelTables:
    privacy = dict(LevelTables().privacy_table)
    harm = dict(LevelTables().harm_table)
    by_privacy_index = {lvl.index: lvl for lvl in PRIVACY_LEVELS}
    by_harm_index = {lvl.index: lvl for lvl in HARM_LEVELS}
    if "privacy_table" in obj:
        rows = obj["privacy_table"]
        if not isinstance(rows, list):
            raise ParseError(f"{path}.privacy_table", "must be a list of {d, c, level} rows")
        for i, row in enumerate(rows):
            row_path = f"{path}.privacy_table[{i}]"
            row = _require_object(row, row_path)
            _check_fields(row, row_path, {"d", "c", "level"})
            level = _get_int(row, row_path, "level")
            if level not in by_privacy_index:
                raise ValidationError(f"{row_path}.level", "privacy level must be 1, 2 or 3")
            privacy[(_get_int(row, row_path, "d"), _get_int(row, row_path, "c"))] = by_privacy_index[level]
    if "harm_table" in obj:
        rows = obj["harm_table"]
        if not isinstance(rows, list):
            raise ParseError(f"{path}.harm_table", "must be a list of {l, level} rows")
        for i, row in enumerate(rows):
            row_path = f"{path}.harm_table[{i}]"
            row = _require_object(row, row_path)
            _check_fields(row, row_path, {"l", "level"})
            l = row["l"]
            if l not in (2, 3, MATERIAL_ONLY):
                raise ValidationError(f"{row_path}.l", "threat class must be 2, 3 or material-only")
            level = row["level"]
            if level is None:
                harm[l] = None
            elif isinstance(level, int) and not isinstance(level, bool) and level in by_harm_index:
                harm[l] = by_harm_index[level]
            else:
                raise ValidationError(f"{row_path}.level", "harm level must be 1, 2 or null")
    try:
        return LevelTables(privacy_table=privacy, harm_table=harm)
    except DomainError as exc:
        raise ValidationError(f"{path}", str(exc)) from exc


def document_from_mapping(data: Mapping[str, Any]) -> ScenarioDocument:
    """Validate a decoded scenario document (shared by file and HTTP paths)."""
    root = _require_object(data, "$")
    _check_fields(root, "$", {"schema_version", "scenario"}, {"overrides", "compliance_inputs"})
    version = _get_int(root, "$", "schema_version")
    if version != SCHEMA_VERSION:
        raise ValidationError("$.schema_version", f"unsupported version {version}, expected {SCHEMA_VERSION}")

    scenario = _parse_scenario_section(_require_object(root["scenario"], "$.scenario"), "$.scenario")

    tables = None
    if "overrides" in root:
        overrides = _require_object(root["overrides"], "$.overrides")
        _check_fields(overrides, "$.overrides", set(), {"hw_ratio", "privacy_table", "harm_table"})
        if "hw_ratio" in overrides:
            ratio = _get_number(overrides, "$.overrides", "hw_ratio")
            context = _parse_context(ratio, "$.overrides.hw_ratio")
            scenario = dataclasses.replace(scenario, context=context)
        if "privacy_table" in overrides or "harm_table" in overrides:
            tables = _parse_table_overrides(overrides, "$.overrides")

    authorization = False
    registration = False
    if "compliance_inputs" in root:
        comp = _require_object(root["compliance_inputs"], "$.compliance_inputs")
        _check_fields(comp, "$.compliance_inputs", set(), {"authorization_obtained", "registration_done"})
        authorization = _get_bool(comp, "$.compliance_inputs", "authorization_obtained", False)
        registration = _get_bool(comp, "$.compliance_inputs", "registration_done", False)

    return ScenarioDocument(
        schema_version=version,
        scenario=scenario,
        tables=tables,
        authorization_obtained=authorization,
        registration_done=registration,
    )


def load_document(text: str) -> ScenarioDocument:
    """Parse and validate a scenario document from JSON text."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}", exc.msg) from exc
    return document_from_mapping(data)


def read_document(path: Union[str, Path]) -> ScenarioDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise StorageError(f"cannot read scenario file {path}: {exc}") from exc
    return load_document(text)


def parse_scenario(text: str) -> Scenario:
    """Parse a scenario document and return just the validated scenario."""
    return load_document(text).scenario


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def _context_selector(context: CulturalContext) -> Union[str, float]:
    if context.name in PRESET_CONTEXTS:
        return context.name
    return context.hw_ratio


def scenario_to_mapping(scenario: Scenario) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "scenario": {
            "id": scenario.id,
            "description": scenario.description,
            "density_class": scenario.density_class,
            "site_cost_class": scenario.site_cost_class,
            "threat_level": scenario.threat_level,
            "threat_category": scenario.threat_category.value,
            "annex_ii_qualifying": scenario.annex_ii_qualifying,
            "function": {"w": scenario.function.w, "r": scenario.function.r, "t": scenario.function.t},
            "context": _context_selector(scenario.context),
            "privacy_levels": sorted(scenario.applicable_privacy_levels),
        },
    }


def serialize_scenario(scenario: Scenario) -> str:
    """Deterministic JSON for a scenario; ``parse_scenario`` round-trips it exactly."""
    return json.dumps(scenario_to_mapping(scenario), indent=2, sort_keys=True) + "\n"


def _sig12(x: float) -> float:
    # 12 significant digits: in step with the 1e-12 conservation tolerance.
    return float(f"{x:.12g}")


def assessment_to_mapping(assessment: Assessment) -> dict[str, Any]:
    splits = []
    for s in assessment.splits:
        splits.append(
            {
                "privacy_level": s.block.privacy.index,
                "harm_level": s.block.harm.index,
                "block": {
                    "h_lo": s.block.h_lo,
                    "h_hi": s.block.h_hi,
                    "p_lo": s.block.p_lo,
                    "p_hi": s.block.p_hi,
                },
                "b_l": _sig12(s.b_l),
                "b_r": _sig12(s.b_r),
                "decision": s.decision.value,
            }
        )
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "kind": "assessment",
        "scenario_id": assessment.scenario_id,
        "context": {"name": assessment.context.name, "hw_ratio": assessment.context.hw_ratio},
        "overall": assessment.overall.value,
        "ladder_fallback": {
            "level": assessment.ladder_fallback.value,
            "rationale": assessment.ladder_rationale,
        },
        "splits": splits,
    }
    if assessment.compliance is not None:
        c = assessment.compliance
        doc["compliance"] = {
            "objective": c.objective.value,
            "verdict": c.verdict.value,
            "element_a_note": c.element_a_note,
            "element_b_note": c.element_b_note,
            "authorization_obtained": c.authorization_obtained,
            "registration_done": c.registration_done,
            "blocking_preconditions": list(c.blocking_preconditions),
            "deployment_cleared": c.deployment_cleared,
        }
    return doc


def serialize_assessment(assessment: Assessment) -> str:
    return json.dumps(assessment_to_mapping(assessment), indent=2, sort_keys=True) + "\n"


def write_assessment(assessment: Assessment, destination: Union[str, Path]) -> Path:
    """Persist an assessment document; concurrent writers surface an error.

    A sibling ``.lock`` file taken with O_EXCL guards the destination:
    last-writer-wins overwrites between concurrent runs would silently
    drop a report, which this tool must never do.
    """
    dest = Path(destination)
    payload = serialize_assessment(assessment)
    lock = dest.with_name(dest.name + ".lock")
    try:
        fd = os.open(lock, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
    except FileExistsError:
        raise StorageError(f"destination is being written by another process: {lock} exists") from None
    except OSError as exc:
        raise StorageError(f"cannot write assessment to {dest}: {exc}") from exc
    try:
        tmp = dest.with_name(dest.name + ".tmp")
        try:
            tmp.write_text(payload, encoding="utf-8")
            os.replace(tmp, dest)
        except OSError as exc:
            raise StorageError(f"cannot write assessment to {dest}: {exc}") from exc
    finally:
        os.close(fd)
        try:
            os.unlink(lock)
        except OSError:  # pragma: no cover - lock vanished underneath us
            pass
    return dest


# ---------------------------------------------------------------------------
# Built-in case fixtures
# ---------------------------------------------------------------------------


def builtin_scenarios() -> list[Scenario]:
    """The three bundled real-world cases, in fixed order.

    The street-trials case pins the tolerant context: under the moderate
    ratio its (p1, h1) block lands marginally below the half-area
    threshold (b_r ~ 0.16216 against 0.16667), so the published verdict
    is only reproduced by a security-leaning plane. The escapee case's
    national-security charges are mapped to the top of the two-level harm
    scale.
    """
    met = Scenario(
        id="met-lfr-trials",
        description=(
            "Metropolitan Police live facial recognition street trials "
            "(Stratford Westfield 2018, Romford 2019): public open space with "
            "moderate people flow, watchlists filtered by geographic area; the "
            "harm level of the listed individuals is not recorded, so both harm "
            "columns are assessed conditionally."
        ),
        density_class=1,
        site_cost_class=1,
        threat_level=THREAT_UNKNOWN,
        threat_category=ThreatCategory.MISSING_PERSON,
        function=DynamicFunction(0.3, 0.85, 0.0),
        context=TOLERANT,
        applicable_privacy_levels=frozenset({1}),
    )
    london = Scenario(
        id="london-terror-escapee",
        description=(
            "Four-day search for a terror suspect escaped from HMP Wandsworth "
            "(September 2023), coordinated with live facial recognition across "
            "streets, venues and transport hubs; sightings reported by the "
            "public put the appearance probability high, and the "
            "national-security charges place the harm at the top of the scale."
        ),
        density_class=3,
        site_cost_class=3,
        threat_level=3,
        threat_category=ThreatCategory.IMMINENT_THREAT,
        function=DynamicFunction(0.75, 0.9, 0.0),
        context=MODERATE,
        applicable_privacy_levels=frozenset({1, 2, 3}),
    )
    brondby = Scenario(
        id="brondby-stadium",
        description=(
            "Brøndby IF stadium entry screening (2019): ticketed indoor venue "
            "with a watchlist of roughly a hundred banned fans; the breaches "
            "are stadium-rule violations, so the harm is material only and the "
            "case never reaches the plane."
        ),
        density_class=2,
        site_cost_class=2,
        threat_level=MATERIAL_ONLY,
        threat_category=ThreatCategory.OTHER,
        function=DynamicFunction(0.3, 0.95, 0.0),
        context=MODERATE,
        applicable_privacy_levels=frozenset({2}),
    )
    return [met, london, brondby]


def write_builtin_scenarios(directory: Union[str, Path]) -> list[Path]:
    """Write the bundled scenario files into a directory; returns the paths."""
    out = Path(directory)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise StorageError(f"cannot create {out}: {exc}") from exc
    paths = []
    for scenario in builtin_scenarios():
        path = out / f"{scenario.id}.json"
        try:
            path.write_text(serialize_scenario(scenario), encoding="utf-8")
        except OSError as exc:
            raise StorageError(f"cannot write {path}: {exc}") from exc
        paths.append(path)
    return paths
