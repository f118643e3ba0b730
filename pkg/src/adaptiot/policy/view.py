"""Read access to the runtime state: property values plus the event history."""

from __future__ import annotations

from bisect import bisect_right, insort
from dataclasses import dataclass, field


class EventHistory:
    """Timestamped event-name log, queried by name over tick windows.

    Ticks are kept sorted per event name so window counts stay cheap even
    for long runs; insertion order between equal ticks is immaterial to the
    counting queries exposed here.
    """

    def __init__(self):
        self._ticks_by_name: dict[str, list[int]] = {}
        self._size = 0

    def record(self, tick: int, name: str) -> None:
        insort(self._ticks_by_name.setdefault(name, []), tick)
        self._size += 1

    def count_in_window(self, name: str, window_ticks: int, now: int) -> int:
        """Events named `name` with tick in (now - window_ticks, now]."""
        ticks = self._ticks_by_name.get(name)
        if not ticks:
            return 0
        return bisect_right(ticks, now) - bisect_right(ticks, now - window_ticks)

    def ticks(self, name: str) -> tuple[int, ...]:
        return tuple(self._ticks_by_name.get(name, ()))

    def __len__(self) -> int:
        return self._size


@dataclass
class StateView:
    """Snapshot view handed to expression evaluation: current system and
    environment property values in one namespace, plus the event history."""

    properties: dict[str, float] = field(default_factory=dict)
    history: EventHistory = field(default_factory=EventHistory)

    def property_value(self, path: str) -> float:
        try:
            return self.properties[path]
        except KeyError:
            from adaptiot.policy.expr import UnknownPropertyError

            raise UnknownPropertyError(path) from None


def window_frequency(view: StateView, event_name: str, window_ticks: int, now: int) -> int:
    """Count events named `event_name` with tick in (now - window_ticks, now]."""
    if window_ticks < 1:
        raise ValueError("window_ticks must be >= 1")
    return view.history.count_in_window(event_name, window_ticks, now)
