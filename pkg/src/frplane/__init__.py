"""frplane: a 2D proportionality plane for face-recognition deployment decisions.

The package scores a surveillance scenario on a Privacy-Loss x
Security-Harm plane: the implementation curve ``s(h) = w * h**r - t``
splits every plane block into two areas, and deployment is proportional
in a block exactly when the security side strictly outweighs the privacy
side. On top of the geometry sit scenario classification, an
intervention-ladder fallback, an EU AI Act Article 5 checklist, a
scenario file format, a CLI and a local HTTP service.
"""

from .assessment import LadderRecommendation, assess, harm_levels_for_threat, ladder_fallback
from .classification import (
    CONSERVATIVE,
    DEFAULT_TABLES,
    H1,
    H2,
    HARM_LEVELS,
    LevelTables,
    MODERATE,
    P1,
    P2,
    P3,
    PRESET_CONTEXTS,
    PRIVACY_LEVELS,
    TOLERANT,
    build_grid,
    classify_harm,
    classify_privacy,
    context_from_selector,
)
from .compliance import (
    ComplianceReport,
    ComplianceVerdict,
    Objective,
    build_report,
    match_objective,
)
from .domain import (
    Assessment,
    Block,
    BlockSplit,
    CulturalContext,
    Decision,
    DomainError,
    DynamicFunction,
    HarmLevel,
    InterventionLadder,
    InvalidIntervalError,
    MATERIAL_ONLY,
    NegativeAbscissaError,
    OutOfRangeError,
    OverallRecommendation,
    PlaneGrid,
    PrivacyLevel,
    Scenario,
    THREAT_NONE,
    THREAT_UNKNOWN,
    ThreatCategory,
    UnknownClassError,
    make_dynamic_function,
)
from .geometry import (
    NONE_ABOVE,
    NONE_BELOW,
    CrossingSolution,
    crossing,
    decision_matrix,
    deployment_frontier_w,
    eval_s,
    integral_s,
    split_block,
)
from .store import (
    ParseError,
    ScenarioDocument,
    StorageError,
    ValidationError,
    builtin_scenarios,
    load_document,
    parse_scenario,
    read_document,
    serialize_assessment,
    serialize_scenario,
    write_assessment,
    write_builtin_scenarios,
)

__version__ = "0.1.0"
