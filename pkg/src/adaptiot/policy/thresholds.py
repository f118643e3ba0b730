"""Two-state threshold machine with hysteresis.

A threshold watches one property against a limit.  The violated state clears
only once the value retreats past the limit by the hysteresis margin, which
suppresses alert oscillation when a value hovers at the limit.
"""

from __future__ import annotations

from dataclasses import dataclass

NORMAL = "normal"
VIOLATED = "violated"


@dataclass(frozen=True)
class Threshold:
    property_path: str
    op: str  # '>' or '<'
    limit: float
    hysteresis: float = 0.0

    def __post_init__(self):
        if self.op not in (">", "<"):
            raise ValueError(f"threshold op must be '>' or '<', got {self.op!r}")
        if self.hysteresis < 0:
            raise ValueError("hysteresis must be >= 0")


def threshold_step(th: Threshold, value: float, prior: str) -> str:
    """Advance the threshold state machine by one observation.

    For op '>': normal -> violated iff value > limit; violated -> normal iff
    value < limit - hysteresis.  Symmetric for '<' (clears at limit +
    hysteresis).  Comparisons are strict; anything else keeps the prior state.
    """
    if prior not in (NORMAL, VIOLATED):
        raise ValueError(f"bad threshold state: {prior!r}")
    if th.op == ">":
        if prior == NORMAL:
            return VIOLATED if value > th.limit else NORMAL
        return NORMAL if value < th.limit - th.hysteresis else VIOLATED
    if prior == NORMAL:
        return VIOLATED if value < th.limit else NORMAL
    return NORMAL if value > th.limit + th.hysteresis else VIOLATED
