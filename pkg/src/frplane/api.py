"""Local HTTP service for the web console: assessment and what-if evaluation.

Binds loopback by default — the tool handles sensitive policy
deliberation and has no multi-tenant ambitions. All handlers are pure
functions over immutable tables, so concurrent requests are safe, and
``POST /assess`` returns exactly the document the CLI writes for the
same input.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Mapping, Optional, Union

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .assessment import assess, harm_levels_for_threat, ladder_fallback
from .classification import (
    CONSERVATIVE,
    DEFAULT_TABLES,
    MODERATE,
    TOLERANT,
    build_grid,
    context_from_selector,
)
from .domain import (
    Decision,
    DomainError,
    DynamicFunction,
    MATERIAL_ONLY,
    OverallRecommendation,
    Scenario,
    THREAT_UNKNOWN,
    ThreatCategory,
)
from .geometry import decision_matrix, deployment_frontier_w
from .render import plane_render
from .store import (
    SCHEMA_VERSION,
    ParseError,
    ValidationError,
    _check_fields,
    _get_int,
    _get_number,
    _require_object,
    assessment_to_mapping,
    document_from_mapping,
)

_PRESETS = (TOLERANT, MODERATE, CONSERVATIVE)


def _error_response(exc: DomainError) -> JSONResponse:
    if isinstance(exc, ParseError):
        field = exc.location
        reason = exc.reason
    elif isinstance(exc, ValidationError):
        field = exc.field
        reason = exc.reason
    else:
        field = getattr(exc, "field_name", "$")
        reason = str(exc)
    return JSONResponse(
        status_code=400,
        content={"schema_version": SCHEMA_VERSION, "errors": [{"field": str(field), "reason": reason}]},
    )


def _parse_whatif(data: Mapping[str, Any]) -> tuple[DynamicFunction, Any, frozenset[int], Union[int, str]]:
    root = _require_object(data, "$")
    _check_fields(root, "$", {"schema_version", "function", "context", "privacy_levels", "harm_class"})
    version = _get_int(root, "$", "schema_version")
    if version != SCHEMA_VERSION:
        raise ValidationError("$.schema_version", f"unsupported version {version}, expected {SCHEMA_VERSION}")

    fn = _require_object(root["function"], "$.function")
    _check_fields(fn, "$.function", {"w", "r", "t"})
    try:
        # Continuous t: this endpoint serves live sliders.
        function = DynamicFunction(
            _get_number(fn, "$.function", "w"),
            _get_number(fn, "$.function", "r"),
            _get_number(fn, "$.function", "t"),
            continuous_t=True,
        )
    except DomainError as exc:
        raise ValidationError(f"$.function.{getattr(exc, 'field_name', 't')}", str(exc)) from exc

    selector = root["context"]
    if isinstance(selector, bool) or not isinstance(selector, (str, int, float)):
        raise ParseError("$.context", "must be a preset name or a positive H/W ratio")
    try:
        context = context_from_selector(selector if isinstance(selector, str) else float(selector))
    except DomainError as exc:
        raise ValidationError("$.context", str(exc)) from exc

    levels_raw = root["privacy_levels"]
    if not isinstance(levels_raw, list) or not levels_raw:
        raise ParseError("$.privacy_levels", "must be a non-empty list of 1..3")
    levels = set()
    for i, item in enumerate(levels_raw):
        if isinstance(item, bool) or not isinstance(item, int) or item not in (1, 2, 3):
            raise ValidationError(f"$.privacy_levels[{i}]", "privacy level must be 1, 2 or 3")
        levels.add(item)

    harm_class = root["harm_class"]
    if isinstance(harm_class, bool) or harm_class not in (2, 3, MATERIAL_ONLY, THREAT_UNKNOWN):
        raise ValidationError("$.harm_class", "must be 2, 3, material-only or unknown")

    return function, context, frozenset(levels), harm_class


def _whatif_response(
    function: DynamicFunction,
    context,
    privacy_levels: frozenset[int],
    harm_class: Union[int, str],
) -> dict[str, Any]:
    grid = build_grid(context)
    splits = decision_matrix(grid, function)
    harm_levels = harm_levels_for_threat(harm_class, DEFAULT_TABLES)
    applicable = {
        (p, h.index) for p in privacy_levels for h in harm_levels
    }

    matrix = []
    for split in splits:
        block = split.block
        cell = (block.privacy.index, block.harm.index)
        frontier = deployment_frontier_w(block, function.r, function.t)
        matrix.append(
            {
                "privacy_level": block.privacy.index,
                "harm_level": block.harm.index,
                "block": {"h_lo": block.h_lo, "h_hi": block.h_hi, "p_lo": block.p_lo, "p_hi": block.p_hi},
                "b_l": split.b_l,
                "b_r": split.b_r,
                "fill_fraction": split.b_r / block.area,
                "decision": split.decision.value,
                "frontier_w": frontier,
                "applicable": cell in applicable,
            }
        )

    if not applicable:
        overall = OverallRecommendation.OUT_OF_PLANE
    else:
        relevant = [m for m in matrix if m["applicable"]]
        overall = (
            OverallRecommendation.INTERVENTION
            if all(m["decision"] == Decision.DEPLOY.value for m in relevant)
            else OverallRecommendation.NON_INTERVENTION
        )

    # A minimal stand-in scenario so the ladder logic can reason about the threat.
    ladder_probe = Scenario(
        id="whatif",
        description="interactive what-if probe",
        density_class=1,
        site_cost_class=1,
        threat_level=harm_class,
        threat_category=ThreatCategory.OTHER,
        function=function,
        context=context,
        applicable_privacy_levels=privacy_levels,
    )
    ladder = ladder_fallback(overall, ladder_probe)

    render = plane_render(grid, function, splits)
    return {
        "schema_version": SCHEMA_VERSION,
        "context": {"name": context.name, "hw_ratio": context.hw_ratio},
        "function": {"w": function.w, "r": function.r, "t": function.t},
        "overall": overall.value,
        "ladder_fallback": {"level": ladder.level.value, "rationale": ladder.rationale},
        "matrix": matrix,
        "curve": [[h, s] for h, s in render.curve],
    }


def create_app(ui_dir: Optional[Union[str, Path]] = None) -> FastAPI:
    """Build the service app; ``ui_dir`` optionally serves the web console statically."""
    app = FastAPI(title="frplane", description="proportionality plane service", version="0.1.0")

    @app.get("/contexts")
    def contexts() -> dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "contexts": [{"name": c.name, "hw_ratio": c.hw_ratio} for c in _PRESETS],
        }

    @app.post("/assess")
    async def assess_endpoint(request: Request):
        try:
            body = await request.json()
        except Exception:
            return _error_response(ParseError("$", "request body must be JSON"))
        try:
            doc = document_from_mapping(body)
            result = assess(
                doc.scenario,
                doc.tables if doc.tables is not None else DEFAULT_TABLES,
                authorization_obtained=doc.authorization_obtained,
                registration_done=doc.registration_done,
            )
        except DomainError as exc:
            return _error_response(exc)
        return JSONResponse(content=assessment_to_mapping(result))

    @app.post("/whatif")
    async def whatif_endpoint(request: Request):
        try:
            body = await request.json()
        except Exception:
            return _error_response(ParseError("$", "request body must be JSON"))
        try:
            function, context, levels, harm_class = _parse_whatif(body)
            payload = _whatif_response(function, context, levels, harm_class)
        except DomainError as exc:
            return _error_response(exc)
        return JSONResponse(content=payload)

    if ui_dir is not None:
        # API routes are registered first, so they win over the static mount.
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="console")

    return app


def main(argv: Optional[list[str]] = None) -> int:
    import argparse

    parser = argparse.ArgumentParser(prog="frplane-api", description=__doc__)
    parser.add_argument("--host", default="127.0.0.1", help="bind address (loopback by default)")
    parser.add_argument("--port", type=int, default=8752)
    parser.add_argument(
        "--ui-dir",
        default=None,
        help="serve a built web console (directory with index.html) at /",
    )
    args = parser.parse_args(argv)
    try:
        import uvicorn
    except ImportError:  # pragma: no cover
        print("uvicorn is required to serve; install frplane[serve]")
        return 1
    uvicorn.run(create_app(ui_dir=args.ui_dir), host=args.host, port=args.port)  # pragma: no cover
    return 0  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
