"""Analyzer: reactive symptom detection plus proactive crossing prediction.

Reactive: on every state notification each repository symptom whose trigger
evaluates true, and which is out of cooldown, yields one adaptation request.

Proactive: configured predictors fit an ordinary-least-squares line through
the last k samples of a property; when the line crosses a threshold within
the horizon, a proactive request is raised with the predicted tick.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Callable

from adaptiot.policy import (
    StateView,
    SymptomRepository,
    Threshold,
    dominant_event,
    eval_expression,
    window_frequency,
)
from adaptiot.mape.observer import Subject
from adaptiot.mape.types import AdaptationRequest, SystemState

REQUEST_EVENT = "request"


class InsufficientSamplesError(Exception):
    code = "insufficient-samples"

    def __init__(self, got: int):
        super().__init__(f"prediction needs >= 2 samples, got {got}")
        self.got = got


def crossing_time(samples: list[tuple[int, float]], th: Threshold) -> float | None:
    """Raw crossing time of the OLS fit through `samples` against the limit.

    Returns None when the fitted slope is flat or moves away from the limit.
    """
    if len(samples) < 2:
        raise InsufficientSamplesError(len(samples))
    ticks = [t for t, _ in samples]
    if any(b <= a for a, b in zip(ticks, ticks[1:])):
        raise ValueError("sample ticks must be strictly increasing")
    n = len(samples)
    mean_t = sum(ticks) / n
    mean_v = sum(v for _, v in samples) / n
    var = sum((t - mean_t) ** 2 for t in ticks)
    cov = sum((t - mean_t) * (v - mean_v) for t, v in samples)
    slope = cov / var
    intercept = mean_v - slope * mean_t
    if slope == 0.0:
        return None
    if th.op == ">" and slope < 0:
        return None
    if th.op == "<" and slope > 0:
        return None
    return (th.limit - intercept) / slope


def predict_crossing(
    samples: list[tuple[int, float]], th: Threshold, horizon_ticks: int
) -> int | None:
    """Predicted violation tick, or None when no crossing falls inside
    (now, now + horizon] with `now` the last sample tick."""
    t_star = crossing_time(samples, th)
    if t_star is None:
        return None
    now = samples[-1][0]
    if now < t_star <= now + horizon_ticks:
        return math.ceil(t_star)
    return None


@dataclass(frozen=True)
class PredictConfig:
    property_path: str
    threshold: Threshold
    window: int  # number of samples fitted
    horizon: int
    symptom: str  # event name raised toward the planner
    cooldown: int = 0

    def __post_init__(self):
        if self.window < 2:
            raise ValueError("prediction window must be >= 2 samples")
        if self.horizon < 1:
            raise ValueError("prediction horizon must be >= 1")


class Analyzer(Subject):
    """Watches knowledge state events and raises adaptation requests."""

    def __init__(
        self,
        repo: SymptomRepository,
        view_of: Callable[[], StateView],
        clock: Callable[[], int],
        predicts: tuple[PredictConfig, ...] = (),
        name: str = "analyzer",
    ):
        super().__init__(name)
        self.repo = repo
        self._view_of = view_of
        self._clock = clock
        self.predicts = list(predicts)
        self._last_fired: dict[str, int] = {}
        self._samples: dict[int, deque] = {
            i: deque(maxlen=p.window) for i, p in enumerate(self.predicts)
        }
        self._counter = 0

    def _next_id(self) -> str:
        self._counter += 1
        return f"request-{self._counter}"

    def _in_cooldown(self, key: str, cooldown: int, now: int) -> bool:
        last = self._last_fired.get(key)
        return last is not None and now - last <= cooldown

    def on_state(self, state: SystemState) -> list[AdaptationRequest]:
        """Evaluate all symptoms and predictors against the new state; emits
        one `request` notification per raised request."""
        now = self._clock()
        view = self._view_of()
        requests = []
        for symptom in self.repo:
            if self._in_cooldown(symptom.name, symptom.cooldown_ticks, now):
                continue
            if not eval_expression(symptom.trigger, view, now):
                continue
            event = dominant_event(symptom.trigger) or symptom.name
            frequency = max(1, window_frequency(view, event, symptom.window_ticks, now))
            request = AdaptationRequest(
                id=self._next_id(),
                symptom=symptom.name,
                event=event,
                frequency=frequency,
                window_ticks=symptom.window_ticks,
                mode="reactive",
                issued_tick=now,
            )
            self._last_fired[symptom.name] = now
            requests.append(request)
        requests.extend(self._run_predictors(state, now))
        for request in requests:
            self.notify(REQUEST_EVENT, request)
        return requests

    def _run_predictors(self, state: SystemState, now: int) -> list[AdaptationRequest]:
        requests = []
        for idx, predict in enumerate(self.predicts):
            value = state.system.get(predict.property_path)
            if value is None:
                value = state.environment.get(predict.property_path)
            if value is None:
                continue
            buffer = self._samples[idx]
            buffer.append((state.tick, value))
            if len(buffer) < predict.window:
                continue
            key = f"predict:{predict.symptom}:{idx}"
            if self._in_cooldown(key, predict.cooldown, now):
                continue
            predicted = predict_crossing(list(buffer), predict.threshold, predict.horizon)
            if predicted is None or predicted <= now:
                continue
            request = AdaptationRequest(
                id=self._next_id(),
                symptom=predict.symptom,
                event=predict.symptom,
                frequency=0,
                window_ticks=predict.window,
                mode="proactive",
                issued_tick=now,
                predicted_violation_tick=predicted,
            )
            self._last_fired[key] = now
            requests.append(request)
        return requests
