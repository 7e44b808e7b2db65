"""Mapping scenario descriptors onto plane levels and grids.

Privacy rows come from the site: crowd density d and site cost c, each a
concern class 1..3. Harm columns come from the threat: concern class l,
where 2 covers threats to individual human life and 3 terrorist-scale
threats; purely material harm never reaches the plane. The tables below
are the defaults; jurisdictions may override them through the scenario
file format.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from numbers import Real
from typing import Mapping, Union

from .domain import (
    Block,
    CulturalContext,
    HarmLevel,
    MATERIAL_ONLY,
    OutOfRangeError,
    PlaneGrid,
    PrivacyLevel,
    UnknownClassError,
)

# Canonical level definitions.
P1 = PrivacyLevel(1, "public open space, moderate people flow", density_class=1, site_cost_class=1)
P2 = PrivacyLevel(2, "restricted-access indoor space", density_class=2, site_cost_class=2)
P3 = PrivacyLevel(3, "critical infrastructure, high people flow", density_class=3, site_cost_class=3)
PRIVACY_LEVELS = (P1, P2, P3)

H1 = HarmLevel(1, "threat to human life", harm_class=2)
H2 = HarmLevel(2, "terrorist-scale threat to many lives", harm_class=3)
HARM_LEVELS = (H1, H2)

# Preset cultural contexts, from security-leaning to privacy-leaning.
TOLERANT = CulturalContext("tolerant", 3 / 13)
MODERATE = CulturalContext("moderate", 3 / 9)
CONSERVATIVE = CulturalContext("conservative", 3 / 5)
PRESET_CONTEXTS = {c.name: c for c in (TOLERANT, MODERATE, CONSERVATIVE)}


def context_from_selector(selector: Union[str, float]) -> CulturalContext:
    """Resolve a preset name or a custom H/W ratio into a context."""
    if isinstance(selector, str):
        try:
            return PRESET_CONTEXTS[selector]
        except KeyError:
            raise UnknownClassError("context", selector) from None
    if isinstance(selector, Real):
        return CulturalContext("custom", float(selector))
    raise UnknownClassError("context", selector)


def _default_privacy_table() -> dict[tuple[int, int], PrivacyLevel]:
    # Matched concern pairs map straight to their level; mixed pairs take
    # the maximum of the two classes (the privacy-conservative reading).
    levels = {lvl.index: lvl for lvl in PRIVACY_LEVELS}
    return {(d, c): levels[max(d, c)] for d in (1, 2, 3) for c in (1, 2, 3)}


def _default_harm_table() -> dict[Union[int, str], HarmLevel | None]:
    return {2: H1, 3: H2, MATERIAL_ONLY: None}


@dataclass(frozen=True)
class LevelTables:
    """The lookup tables behind p = f(d, c) and h = g(d, l).

    Construction checks totality on the declared concern domains and
    monotonicity: raising a concern class never lowers the level.
    """

    privacy_table: Mapping[tuple[int, int], PrivacyLevel] = field(default_factory=_default_privacy_table)
    harm_table: Mapping[Union[int, str], HarmLevel | None] = field(default_factory=_default_harm_table)

    def __post_init__(self):
        object.__setattr__(self, "privacy_table", dict(self.privacy_table))
        object.__setattr__(self, "harm_table", dict(self.harm_table))
        for d in (1, 2, 3):
            for c in (1, 2, 3):
                if (d, c) not in self.privacy_table:
                    raise UnknownClassError("privacy_table", (d, c))
        for l in (2, 3, MATERIAL_ONLY):
            if l not in self.harm_table:
                raise UnknownClassError("harm_table", l)
        for d in (1, 2, 3):
            for c in (1, 2):
                if self.privacy_table[(d, c + 1)].index < self.privacy_table[(d, c)].index:
                    raise OutOfRangeError("privacy_table", (d, c + 1), "must be monotone in c")
        for c in (1, 2, 3):
            for d in (1, 2):
                if self.privacy_table[(d + 1, c)].index < self.privacy_table[(d, c)].index:
                    raise OutOfRangeError("privacy_table", (d + 1, c), "must be monotone in d")
        h2, h3 = self.harm_table[2], self.harm_table[3]
        if h2 is not None and h3 is not None and h3.index < h2.index:
            raise OutOfRangeError("harm_table", 3, "must be monotone in l")


DEFAULT_TABLES = LevelTables()


def classify_privacy(d: int, c: int, tables: LevelTables = DEFAULT_TABLES) -> PrivacyLevel:
    """p = f(d, c): table lookup over the concern classes."""
    try:
        return tables.privacy_table[(d, c)]
    except (KeyError, TypeError):
        raise UnknownClassError("privacy (d, c)", (d, c)) from None


def classify_harm(d: int, l: Union[int, str], tables: LevelTables = DEFAULT_TABLES) -> HarmLevel | None:
    """h = g(d, l): table lookup over the threat class.

    Returns None for material-only threats, which never enter the plane.
    The d argument is accepted for signature symmetry with f but the
    default table keys on l alone.
    """
    if isinstance(l, bool) or (not isinstance(l, (int, str))):
        raise UnknownClassError("harm l", l)
    try:
        return tables.harm_table[l]
    except KeyError:
        raise UnknownClassError("harm l", l) from None


def build_grid(context: CulturalContext) -> PlaneGrid:
    """Lay out the canonical grid for a cultural context.

    Columns have unit width (h1 = [0,1], h2 = [1,2]); rows are stacked
    with height H equal to the context's H/W ratio. These coordinates are
    a normalization choice: only the ratio carries meaning, and every
    qualitative deployment pattern is invariant under a uniform rescale.
    """
    h_edges = (0.0, 1.0, 2.0)
    step = context.hw_ratio
    p_edges = (0.0, step, 2.0 * step, 3.0 * step)
    blocks = []
    for n, privacy in enumerate(PRIVACY_LEVELS):
        for m, harm in enumerate(HARM_LEVELS):
            blocks.append(
                Block(
                    harm=harm,
                    privacy=privacy,
                    h_lo=h_edges[m],
                    h_hi=h_edges[m + 1],
                    p_lo=p_edges[n],
                    p_hi=p_edges[n + 1],
                )
            )
    return PlaneGrid(blocks=tuple(blocks), hw_ratio=context.hw_ratio, context_label=context.name)
