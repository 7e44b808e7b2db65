"""Shared value types for the proportionality plane.

The plane puts Privacy Loss on the ordinate and Security Harm on the
abscissa, discretized into rectangular blocks. A deployment scenario is
scored by the implementation curve ``s(h) = w * h**r - t``, which splits
each block into a left area (privacy outweighs) and a right area
(security outweighs). Everything in this module is an immutable value
that validates itself at construction time; the behavior lives in
:mod:`frplane.geometry`, :mod:`frplane.classification`,
:mod:`frplane.assessment` and :mod:`frplane.compliance`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import InitVar, dataclass
from typing import TYPE_CHECKING, Union

if TYPE_CHECKING:  # pragma: no cover - typing only, avoids an import cycle
    from .compliance import ComplianceReport


# --------------------------------------------------------------------------
# Errors
# --------------------------------------------------------------------------


class DomainError(Exception):
    """Base class for every error raised by this package."""


class OutOfRangeError(DomainError, ValueError):
    """A numeric field lies outside its admissible range."""

    def __init__(self, field_name: str, value, reason: str):
        self.field_name = field_name
        self.value = value
        self.reason = reason
        super().__init__(f"{field_name}={value!r}: {reason}")


class UnknownClassError(DomainError, ValueError):
    """A concern class is not covered by the active level tables."""

    def __init__(self, field_name: str, value):
        self.field_name = field_name
        self.value = value
        super().__init__(f"unknown {field_name} class: {value!r}")


class InvalidIntervalError(DomainError, ValueError):
    """An integration or search interval is empty or reversed."""


class NegativeAbscissaError(DomainError, ValueError):
    """The implementation curve is only defined for h >= 0."""


# --------------------------------------------------------------------------
# Enumerations
# --------------------------------------------------------------------------


class Decision(str, enum.Enum):
    """Per-block outcome of the area rule."""

    DEPLOY = "deploy"
    NOT_DEPLOY = "not-deploy"


class OverallRecommendation(str, enum.Enum):
    """Scenario-level verdict aggregated over all applicable blocks."""

    INTERVENTION = "intervention"
    NON_INTERVENTION = "non-intervention"
    OUT_OF_PLANE = "out-of-plane"


class InterventionLadder(str, enum.Enum):
    """Escalation ladder of surveillance interventions, least to most invasive."""

    NO_INTERVENTION = "no-intervention"
    ON_SITE_AGENT = "on-site-agent"
    CCTV = "cctv"
    FACE_RECOGNITION = "face-recognition"


class ThreatCategory(str, enum.Enum):
    """Tag describing why the watchlist exists; drives the AI Act objective match."""

    MISSING_PERSON = "missing-person"
    IMMINENT_THREAT = "imminent-threat"
    CRIMINAL_SUSPECT = "criminal-suspect"
    OTHER = "other"


# Threat-level sentinel values accepted alongside the ordinal classes 2 and 3.
MATERIAL_ONLY = "material-only"  # harm is purely material: below the harm scale
THREAT_UNKNOWN = "unknown"  # harm class not yet determined: assess every level
THREAT_NONE = "none"  # no security need at all

THREAT_LEVELS = (2, 3, MATERIAL_ONLY, THREAT_UNKNOWN, THREAT_NONE)

# Discrete deployment-duration penalties: under one week, a couple of weeks,
# over a month. 0.25 and 0.5 are binary-exact so equality tests are safe.
T_STEPS = (0.0, 0.25, 0.5)


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise OutOfRangeError(name, value, "must be a finite number")
    return value


# --------------------------------------------------------------------------
# The implementation curve
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class DynamicFunction:
    """Parameters (w, r, t) of the implementation curve ``s(h) = w * h**r - t``.

    w is the probability that someone on the watchlist shows up at the
    site, r the recognition system's reliability exponent (an F1-score
    association), and t a penalty that grows with deployment duration.
    t is restricted to the discrete steps in :data:`T_STEPS` unless the
    instance is built with ``continuous_t=True`` (used by interactive
    sliders), in which case any t in [0, 0.5] is accepted.
    """

    w: float
    r: float
    t: float = 0.0
    continuous_t: InitVar[bool] = False

    def __post_init__(self, continuous_t: bool):
        object.__setattr__(self, "w", _require_finite("w", self.w))
        object.__setattr__(self, "r", _require_finite("r", self.r))
        object.__setattr__(self, "t", _require_finite("t", self.t))
        if not 0.0 < self.w <= 1.0:
            raise OutOfRangeError("w", self.w, "appearance probability must lie in (0, 1]")
        if not 0.0 < self.r <= 1.0:
            raise OutOfRangeError("r", self.r, "reliability exponent must lie in (0, 1]")
        if continuous_t:
            if not 0.0 <= self.t <= 0.5:
                raise OutOfRangeError("t", self.t, "duration penalty must lie in [0, 0.5]")
        elif self.t not in T_STEPS:
            raise OutOfRangeError("t", self.t, "duration penalty must be one of 0, 0.25, 0.5")


def make_dynamic_function(w: float, r: float, t: float = 0.0, *, continuous_t: bool = False) -> DynamicFunction:
    """Validating constructor for :class:`DynamicFunction`."""
    return DynamicFunction(w, r, t, continuous_t=continuous_t)


# --------------------------------------------------------------------------
# Plane levels and blocks
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PrivacyLevel:
    """One of the ordered privacy rows of the plane (p1 < p2 < p3 in concern)."""

    index: int
    label: str
    density_class: int
    site_cost_class: int

    def __post_init__(self):
        if self.index not in (1, 2, 3):
            raise OutOfRangeError("index", self.index, "privacy level index must be 1, 2 or 3")
        if self.density_class not in (1, 2, 3):
            raise OutOfRangeError("density_class", self.density_class, "concern class must be 1, 2 or 3")
        if self.site_cost_class not in (1, 2, 3):
            raise OutOfRangeError("site_cost_class", self.site_cost_class, "concern class must be 1, 2 or 3")
        if not self.label:
            raise OutOfRangeError("label", self.label, "label must be non-empty")

    def __lt__(self, other: "PrivacyLevel") -> bool:
        return self.index < other.index


@dataclass(frozen=True)
class HarmLevel:
    """One of the ordered harm columns of the plane (h1 < h2 in severity)."""

    index: int
    label: str
    harm_class: int

    def __post_init__(self):
        if self.index not in (1, 2):
            raise OutOfRangeError("index", self.index, "harm level index must be 1 or 2")
        if self.harm_class not in (2, 3):
            raise OutOfRangeError("harm_class", self.harm_class, "harm concern class must be 2 or 3")
        if not self.label:
            raise OutOfRangeError("label", self.label, "label must be non-empty")

    def __lt__(self, other: "HarmLevel") -> bool:
        return self.index < other.index


@dataclass(frozen=True)
class Block:
    """Axis-aligned rectangle of the plane at one (privacy, harm) cell.

    Extents are in plane units and must sit in the first quadrant: the
    curve is only defined for h >= 0, and both axes measure losses.
    """

    harm: HarmLevel
    privacy: PrivacyLevel
    h_lo: float
    h_hi: float
    p_lo: float
    p_hi: float

    def __post_init__(self):
        for name in ("h_lo", "h_hi", "p_lo", "p_hi"):
            object.__setattr__(self, name, _require_finite(name, getattr(self, name)))
        if self.h_lo < 0.0:
            raise OutOfRangeError("h_lo", self.h_lo, "harm extent must be >= 0")
        if self.p_lo < 0.0:
            raise OutOfRangeError("p_lo", self.p_lo, "privacy extent must be >= 0")
        if not self.h_lo < self.h_hi:
            raise InvalidIntervalError(f"block harm extent is empty: [{self.h_lo}, {self.h_hi}]")
        if not self.p_lo < self.p_hi:
            raise InvalidIntervalError(f"block privacy extent is empty: [{self.p_lo}, {self.p_hi}]")

    @property
    def width(self) -> float:
        return self.h_hi - self.h_lo

    @property
    def height(self) -> float:
        return self.p_hi - self.p_lo

    @property
    def area(self) -> float:
        return self.width * self.height


@dataclass(frozen=True)
class CulturalContext:
    """Society-level privacy-vs-security stance, encoded as the block H/W ratio.

    Taller blocks (larger ratio) mean privacy weighs more per unit of
    harm, so the curve needs to climb higher before deployment becomes
    proportional.
    """

    name: str
    hw_ratio: float

    _NAMES = ("tolerant", "moderate", "conservative", "custom")

    def __post_init__(self):
        object.__setattr__(self, "hw_ratio", _require_finite("hw_ratio", self.hw_ratio))
        if self.name not in self._NAMES:
            raise UnknownClassError("context", self.name)
        if not self.hw_ratio > 0.0:
            raise OutOfRangeError("hw_ratio", self.hw_ratio, "height/width ratio must be > 0")


_GRID_TOL = 1e-12


@dataclass(frozen=True)
class PlaneGrid:
    """The discretized plane: 3 privacy rows x 2 harm columns of blocks.

    ``blocks`` is row-major: (p1,h1), (p1,h2), (p2,h1), (p2,h2), (p3,h1),
    (p3,h2). Construction checks that the blocks tile contiguously, share
    one width W and one height H, and that H/W matches ``hw_ratio``.
    """

    blocks: tuple[Block, ...]
    hw_ratio: float
    context_label: str

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if len(self.blocks) != 6:
            raise InvalidIntervalError(f"grid needs exactly 6 blocks, got {len(self.blocks)}")
        width = self.blocks[0].width
        height = self.blocks[0].height
        for b in self.blocks:
            if abs(b.width - width) > _GRID_TOL or abs(b.height - height) > _GRID_TOL:
                raise InvalidIntervalError("grid blocks must all share one width and one height")
        if abs(height / width - self.hw_ratio) > _GRID_TOL:
            raise InvalidIntervalError(
                f"grid H/W = {height / width} does not match declared ratio {self.hw_ratio}"
            )
        for n in range(3):  # privacy rows
            for m in range(2):  # harm columns
                b = self.blocks[2 * n + m]
                if b.privacy.index != n + 1 or b.harm.index != m + 1:
                    raise InvalidIntervalError("grid blocks must be row-major by (privacy, harm)")
        # contiguous tiling: columns share h edges, rows share p edges
        for n in range(3):
            left, right = self.blocks[2 * n], self.blocks[2 * n + 1]
            if abs(left.h_hi - right.h_lo) > _GRID_TOL:
                raise InvalidIntervalError("harm columns must be contiguous")
            if abs(left.p_lo - right.p_lo) > _GRID_TOL or abs(left.p_hi - right.p_hi) > _GRID_TOL:
                raise InvalidIntervalError("blocks of one row must share the privacy extent")
        for n in range(2):
            below, above = self.blocks[2 * n], self.blocks[2 * (n + 1)]
            if abs(below.p_hi - above.p_lo) > _GRID_TOL:
                raise InvalidIntervalError("privacy rows must be contiguous")
        for m in range(2):
            if abs(self.blocks[m].h_lo - self.blocks[2 + m].h_lo) > _GRID_TOL:
                raise InvalidIntervalError("harm columns must be aligned across rows")

    def block_at(self, privacy_index: int, harm_index: int) -> Block:
        """Return the block at privacy row ``privacy_index`` and harm column ``harm_index``."""
        if privacy_index not in (1, 2, 3):
            raise UnknownClassError("privacy_index", privacy_index)
        if harm_index not in (1, 2):
            raise UnknownClassError("harm_index", harm_index)
        return self.blocks[2 * (privacy_index - 1) + (harm_index - 1)]


# --------------------------------------------------------------------------
# Scenario
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Scenario:
    """A concrete deployment case to be assessed.

    ``density_class`` (d) and ``site_cost_class`` (c) describe the primary
    site; ``applicable_privacy_levels`` lists every privacy row the case
    spans (a search across town touches p1 through p3, a stadium only p2).
    ``threat_level`` is the harm concern class l: 2 or 3, or one of the
    sentinels :data:`MATERIAL_ONLY`, :data:`THREAT_UNKNOWN`,
    :data:`THREAT_NONE`. ``annex_ii_qualifying`` records whether a
    criminal-suspect case concerns an offence qualifying under AI Act
    Annex II (supplied by the user, never computed here).
    """

    id: str
    description: str
    density_class: int
    site_cost_class: int
    threat_level: Union[int, str]
    threat_category: ThreatCategory
    function: DynamicFunction
    context: CulturalContext
    applicable_privacy_levels: frozenset[int]
    annex_ii_qualifying: bool = True

    def __post_init__(self):
        if not self.id:
            raise OutOfRangeError("id", self.id, "scenario id must be non-empty")
        if self.density_class not in (1, 2, 3):
            raise UnknownClassError("density_class", self.density_class)
        if self.site_cost_class not in (1, 2, 3):
            raise UnknownClassError("site_cost_class", self.site_cost_class)
        if self.threat_level not in THREAT_LEVELS:
            raise UnknownClassError("threat_level", self.threat_level)
        object.__setattr__(self, "threat_category", ThreatCategory(self.threat_category))
        levels = frozenset(self.applicable_privacy_levels)
        object.__setattr__(self, "applicable_privacy_levels", levels)
        if not levels:
            raise OutOfRangeError(
                "applicable_privacy_levels", levels, "at least one privacy level is required"
            )
        if not levels <= {1, 2, 3}:
            raise OutOfRangeError(
                "applicable_privacy_levels", sorted(levels), "privacy levels must be within {1, 2, 3}"
            )


# --------------------------------------------------------------------------
# Results
# --------------------------------------------------------------------------


_CONSERVATION_TOL = 1e-12


@dataclass(frozen=True)
class BlockSplit:
    """Areas B_l and B_r into which the curve splits one block.

    The deployment rule is strict: deploy if and only if B_r > B_l, so a
    tie resolves to not-deploy (the privacy-preserving default).
    """

    block: Block
    b_l: float
    b_r: float
    decision: Decision

    def __post_init__(self):
        if self.b_l < 0.0 or self.b_r < 0.0:
            raise OutOfRangeError("b_l/b_r", (self.b_l, self.b_r), "split areas must be >= 0")
        if abs(self.b_l + self.b_r - self.block.area) > _CONSERVATION_TOL:
            raise OutOfRangeError(
                "b_l+b_r",
                self.b_l + self.b_r,
                f"split areas must sum to the block area {self.block.area}",
            )
        expected = Decision.DEPLOY if self.b_r > self.b_l else Decision.NOT_DEPLOY
        if self.decision is not expected:
            raise OutOfRangeError("decision", self.decision, f"decision must be {expected.value}")


@dataclass(frozen=True)
class Assessment:
    """Full outcome of assessing one scenario.

    ``splits`` covers every (applicable privacy level, evaluated harm
    level) block in row-major order; it is empty exactly when no harm
    level was assignable (``overall`` is then out-of-plane). The cultural
    context (and with it the H/W ratio) is carried along so every report
    records which plane it was computed on.
    """

    scenario_id: str
    splits: tuple[BlockSplit, ...]
    overall: OverallRecommendation
    ladder_fallback: InterventionLadder
    context: CulturalContext
    ladder_rationale: str = ""
    compliance: "ComplianceReport | None" = None

    def __post_init__(self):
        object.__setattr__(self, "splits", tuple(self.splits))
        empty = not self.splits
        if (self.overall is OverallRecommendation.OUT_OF_PLANE) != empty:
            raise OutOfRangeError(
                "overall", self.overall, "out-of-plane exactly when no block was evaluated"
            )
        if self.splits:
            all_deploy = all(s.decision is Decision.DEPLOY for s in self.splits)
            expected = (
                OverallRecommendation.INTERVENTION
                if all_deploy
                else OverallRecommendation.NON_INTERVENTION
            )
            if self.overall is not expected:
                raise OutOfRangeError("overall", self.overall, f"must be {expected.value}")
        if (
            self.ladder_fallback is InterventionLadder.FACE_RECOGNITION
            and self.overall is not OverallRecommendation.INTERVENTION
        ):
            raise OutOfRangeError(
                "ladder_fallback",
                self.ladder_fallback,
                "face recognition may only be recommended on an intervention verdict",
            )
