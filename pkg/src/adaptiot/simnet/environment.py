"""Piecewise-constant environment property timelines."""

from __future__ import annotations

from bisect import bisect_right


class EnvironmentModel:
    """Environment properties as (from_tick, value) step functions.

    Timelines must start at tick 0 with strictly increasing from_ticks.
    Commands may overwrite a property from some tick onward; later scripted
    segments still take effect when their tick arrives.
    """

    def __init__(self, timelines: dict[str, list[tuple[int, float]]] | None = None):
        self._segments: dict[str, list[tuple[int, float]]] = {}
        for path, segments in (timelines or {}).items():
            if not segments or segments[0][0] != 0:
                raise ValueError(f"timeline for {path} must start at tick 0")
            ticks = [t for t, _ in segments]
            if ticks != sorted(set(ticks)):
                raise ValueError(f"timeline ticks for {path} must be strictly increasing")
            self._segments[path] = list(segments)

    def paths(self) -> tuple[str, ...]:
        return tuple(self._segments)

    def __contains__(self, path: str) -> bool:
        return path in self._segments

    def value_at(self, path: str, tick: int) -> float:
        segments = self._segments[path]
        idx = bisect_right(segments, (tick, float("inf"))) - 1
        return segments[idx][1]

    def snapshot(self, tick: int) -> dict[str, float]:
        return {path: self.value_at(path, tick) for path in self._segments}

    def set_value(self, path: str, value: float, tick: int) -> None:
        """Overwrite `path` from `tick` onward (used by effector commands)."""
        segments = self._segments.setdefault(path, [(0, value)])
        filtered = [(t, v) for t, v in segments if t != tick]
        filtered.append((tick, value))
        filtered.sort()
        self._segments[path] = filtered

    def adjust_value(self, path: str, delta: float, tick: int) -> None:
        self.set_value(path, self.value_at(path, tick) + delta, tick)
