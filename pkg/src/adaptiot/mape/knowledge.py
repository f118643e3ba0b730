"""Knowledge base: rolling system state, event/alert log, state notifications."""

from __future__ import annotations

from adaptiot.policy import Action, EventHistory, StateView
from adaptiot.mape.observer import Subject
from adaptiot.mape.types import StateReport, SystemState

STATE_EVENT = "state"


class OutOfOrderReportError(Exception):
    code = "out-of-order-report"

    def __init__(self, expected_start: int, got_start: int):
        super().__init__(
            f"report window must start at {expected_start}, got {got_start}"
        )
        self.expected_start = expected_start
        self.got_start = got_start


class Knowledge(Subject):
    """Holds the merged SystemState and the event history; notifies observers
    with a `state` event on every appended report."""

    def __init__(self, name: str = "knowledge"):
        super().__init__(name)
        self._system: dict[str, float] = {}
        self._environment: dict[str, float] = {}
        self._next_window_start = 0
        self.history = EventHistory()
        self.states: list[SystemState] = []

    @property
    def state(self) -> SystemState | None:
        return self.states[-1] if self.states else None

    @property
    def view(self) -> StateView:
        """Combined property namespace (system + environment) for evaluation."""
        return StateView({**self._system, **self._environment}, self.history)

    def append_report(self, report: StateReport) -> SystemState:
        """Merge a report into the rolling state (carry-forward for absent
        properties), record its alerts as events, and notify observers."""
        if report.window_start != self._next_window_start:
            raise OutOfOrderReportError(self._next_window_start, report.window_start)
        self._next_window_start = report.window_end
        for path, entry in report.aggregates.items():
            # carry the previous value forward when a window had no readings
            if "last" in entry:
                self._system[path] = float(entry["last"])
            elif "mean" in entry:
                self._system[path] = float(entry["mean"])
        self._environment.update(report.environment)
        for alert in report.alerts:
            self.history.record(alert.tick, alert.threshold_id)
        state = SystemState(report.window_end, dict(self._system), dict(self._environment))
        self.states.append(state)
        self.notify(STATE_EVENT, state)
        return state

    def record_event(self, tick: int, name: str) -> None:
        self.history.record(tick, name)

    def apply_commanded(self, actions: tuple[Action, ...] | list[Action]) -> dict[str, float]:
        """Optimistically fold commanded values into the state at plan
        completion; later sensor reports overwrite with measured truth."""
        updates: dict[str, float] = {}
        for action in actions:
            if action.command == "set_property":
                updates[action.target] = action.value
            elif action.command == "adjust_property":
                updates[action.target] = self._system.get(action.target, 0.0) + action.value
        self._system.update(updates)
        return updates
