"""Gateway-side monitoring: sensor sampling modes, threshold alerts, and
windowed aggregation into state reports.

The monitor buffers readings locally and ships one aggregate report per
reporting window, so per-reading traffic never reaches the backend; local
threshold alerts ride on the next report (and are surfaced immediately to the
caller for logging).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from adaptiot.policy import NORMAL, VIOLATED, Threshold, threshold_step
from adaptiot.policy.expr import UnknownPropertyError
from adaptiot.mape.types import AGGREGATES, SAMPLING_MODES, Alert, SensorReading, StateReport


@dataclass(frozen=True)
class PropertySampling:
    """How one property is sampled and which aggregates its reports carry."""

    path: str
    mode: str = "periodic"
    interval: int = 1  # periodic mode: emit every `interval` ticks
    deadband: float = 0.0  # event mode: emit on |delta| >= deadband
    aggregates: tuple[str, ...] = ("last", "mean", "min", "max", "count")

    def __post_init__(self):
        if self.mode not in SAMPLING_MODES:
            raise ValueError(f"unknown sampling mode: {self.mode!r}")
        if self.mode == "periodic" and self.interval < 1:
            raise ValueError("periodic interval must be >= 1")
        if self.deadband < 0:
            raise ValueError("deadband must be >= 0")
        bad = [a for a in self.aggregates if a not in AGGREGATES]
        if bad:
            raise ValueError(f"unknown aggregate functions: {bad}")


@dataclass
class SensorState:
    """Per-sensor memory for the event (deadband) mode."""

    last_emitted: float | None = None


def sensor_sample(
    entity_id: str,
    value: float,
    config: PropertySampling,
    state: SensorState,
    now: int,
    demand: bool = False,
) -> SensorReading | None:
    """Decide whether a sensor emits at this tick, and build the reading.

    Periodic sensors emit when `now` is a multiple of their interval; event
    sensors emit when the value moved at least one deadband away from the
    last emission (the first sample always emits); on-demand sensors emit
    only when a demand is present.  A demand forces an emission in any mode.
    """
    emit = False
    if demand:
        emit = True
    elif config.mode == "periodic":
        emit = now % config.interval == 0
    elif config.mode == "event":
        emit = state.last_emitted is None or abs(value - state.last_emitted) >= config.deadband
    if not emit:
        return None
    state.last_emitted = value
    return SensorReading(entity_id, config.path, value, now, config.mode)


@dataclass(frozen=True)
class MonitorThreshold:
    id: str
    threshold: Threshold


@dataclass
class MonitorConfig:
    properties: dict[str, PropertySampling]
    thresholds: tuple[MonitorThreshold, ...] = ()
    reporting_interval: int = 5

    def __post_init__(self):
        if self.reporting_interval < 1:
            raise ValueError("reporting interval must be >= 1")


@dataclass
class _Buffer:
    readings: list[SensorReading] = field(default_factory=list)


class Monitor:
    """Filter/aggregate component sitting next to the devices."""

    def __init__(self, config: MonitorConfig, reporter: str = "gateway"):
        self.config = config
        self.reporter = reporter
        self._buffers: dict[str, _Buffer] = {path: _Buffer() for path in config.properties}
        self._states: dict[str, str] = {mt.id: NORMAL for mt in config.thresholds}
        self._pending_alerts: list[Alert] = []
        self._window_start = 0

    @property
    def window_start(self) -> int:
        return self._window_start

    def ingest(self, reading: SensorReading) -> list[Alert]:
        """Buffer one reading and run the local thresholds over it.  Returns
        the alerts raised by transitions into the violated state."""
        if reading.property_path not in self._buffers:
            raise UnknownPropertyError(reading.property_path)
        self._buffers[reading.property_path].readings.append(reading)
        alerts = []
        for mt in self.config.thresholds:
            if mt.threshold.property_path != reading.property_path:
                continue
            prior = self._states[mt.id]
            state = threshold_step(mt.threshold, reading.value, prior)
            self._states[mt.id] = state
            if prior == NORMAL and state == VIOLATED:
                alerts.append(Alert(mt.id, reading.property_path, reading.value, reading.tick))
        self._pending_alerts.extend(alerts)
        return alerts

    def due(self, now: int) -> bool:
        return now % self.config.reporting_interval == 0

    def flush(self, window_end: int, environment: dict[str, float] | None = None) -> StateReport:
        """Aggregate the buffered window and reset the buffers.  An empty
        window reports count=0 (when requested) and omits the others."""
        aggregates: dict[str, dict[str, float | int]] = {}
        for path, sampling in self.config.properties.items():
            readings = self._buffers[path].readings
            values = [r.value for r in readings]
            entry: dict[str, float | int] = {}
            for fn in sampling.aggregates:
                if fn == "count":
                    entry["count"] = len(values)
                elif values:
                    if fn == "mean":
                        entry["mean"] = sum(values) / len(values)
                    elif fn == "min":
                        entry["min"] = min(values)
                    elif fn == "max":
                        entry["max"] = max(values)
                    elif fn == "last":
                        entry["last"] = values[-1]
            aggregates[path] = entry
        report = StateReport(
            window_start=self._window_start,
            window_end=window_end,
            aggregates=aggregates,
            alerts=tuple(self._pending_alerts),
            reporter=self.reporter,
            environment=dict(environment or {}),
        )
        for buffer in self._buffers.values():
            buffer.readings.clear()
        self._pending_alerts.clear()
        self._window_start = window_end
        return report

    def set_reporting_interval(self, interval: int) -> None:
        if interval < 1:
            raise ValueError("reporting interval must be >= 1")
        self.config.reporting_interval = interval
