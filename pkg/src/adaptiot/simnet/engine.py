"""Discrete-event core: virtual clock, (tick, seq)-ordered queue, event log."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Any, Callable


class ScheduleInPastError(Exception):
    code = "schedule-in-past"

    def __init__(self, at_tick: int, clock: int):
        super().__init__(f"cannot schedule at tick {at_tick}, clock is {clock}")
        self.at_tick = at_tick
        self.clock = clock


@dataclass(frozen=True)
class LogRecord:
    tick: int
    seq: int
    kind: str
    source: str
    payload: dict[str, Any] = field(default_factory=dict)


class SimEngine:
    """Single-threaded simulation engine.

    Every scheduled handler and every log record draws from one monotonically
    increasing sequence counter, so the (tick, seq) pair totally orders both
    the processing of events and the records they emit.
    """

    def __init__(self):
        self.clock = 0
        self._seq = 0
        self._queue: list[tuple[int, int, Callable[[], None]]] = []
        self.records: list[LogRecord] = []

    def next_seq(self) -> int:
        seq = self._seq
        self._seq += 1
        return seq

    def schedule(self, at_tick: int, handler: Callable[[], None]) -> int:
        """Queue `handler` to run at `at_tick`; returns its sequence number."""
        if at_tick < self.clock:
            raise ScheduleInPastError(at_tick, self.clock)
        seq = self.next_seq()
        heapq.heappush(self._queue, (at_tick, seq, handler))
        return seq

    def emit(self, kind: str, source: str, payload: dict[str, Any] | None = None) -> LogRecord:
        record = LogRecord(self.clock, self.next_seq(), kind, source, payload or {})
        self.records.append(record)
        return record

    def pending(self) -> int:
        return len(self._queue)

    def begin_tick(self, tick: int) -> None:
        """Advance the clock to `tick`; the clock never rewinds."""
        if tick < self.clock:
            raise ValueError(f"clock cannot rewind from {self.clock} to {tick}")
        self.clock = tick

    def dispatch_due(self) -> None:
        """Run every queued handler whose tick equals the current clock, in
        seq order; handlers may queue further same-tick work."""
        while self._queue and self._queue[0][0] == self.clock:
            _, _, handler = heapq.heappop(self._queue)
            handler()

    def step(self) -> list[LogRecord]:
        """Process the next nonempty tick; returns the records it produced."""
        if not self._queue:
            return []
        self.begin_tick(self._queue[0][0])
        mark = len(self.records)
        self.dispatch_due()
        return self.records[mark:]
