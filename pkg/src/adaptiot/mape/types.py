"""Value types exchanged between the feedback-loop components."""

from __future__ import annotations

from dataclasses import dataclass, field

from adaptiot.policy import Action

SAMPLING_MODES = ("periodic", "event", "on-demand")
AGGREGATES = ("mean", "min", "max", "last", "count")


@dataclass(frozen=True)
class SensorReading:
    entity_id: str
    property_path: str
    value: float
    tick: int
    mode: str = "periodic"


@dataclass(frozen=True)
class Alert:
    """A threshold transition into the violated state, raised gateway-side."""

    threshold_id: str
    property_path: str
    value: float
    tick: int


@dataclass(frozen=True)
class StateReport:
    """Aggregated window the monitor sends the knowledge base.

    Covers the half-open tick window (window_start, window_end]; aggregates
    hold only the functions requested per property, computed from readings
    inside the window.
    """

    window_start: int
    window_end: int
    aggregates: dict[str, dict[str, float | int]]
    alerts: tuple[Alert, ...]
    reporter: str
    environment: dict[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class SystemState:
    """Rolling snapshot: system property values plus environment values,
    carried forward when a window produced no fresh reading."""

    tick: int
    system: dict[str, float]
    environment: dict[str, float]


@dataclass(frozen=True)
class AdaptationRequest:
    id: str
    symptom: str
    event: str
    frequency: int
    window_ticks: int
    mode: str  # "reactive" or "proactive"
    issued_tick: int
    predicted_violation_tick: int | None = None

    def __post_init__(self):
        if self.mode == "reactive" and self.frequency < 1:
            raise ValueError("reactive requests must carry frequency >= 1")
        if self.mode == "proactive":
            if self.predicted_violation_tick is None:
                raise ValueError("proactive requests must carry a predicted tick")
            if self.predicted_violation_tick <= self.issued_tick:
                raise ValueError("predicted tick must lie after the issue tick")


@dataclass(frozen=True)
class ChangePlan:
    """Ordered corrective actions; each step is a parallel group."""

    id: str
    request_id: str
    steps: tuple[tuple[Action, ...], ...]

    def __post_init__(self):
        if not self.steps or any(not step for step in self.steps):
            raise ValueError("a change plan needs >= 1 step, each non-empty")
