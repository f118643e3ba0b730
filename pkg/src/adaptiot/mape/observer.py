"""Observer wiring between loop components.

Subscriptions deliver in subscription order.  A subscription may carry a
`defer` callable (typically the network link between two placed components);
notifications then go through it instead of being invoked synchronously, so
cross-node deliveries pick up the link latency while same-node ones happen
within the current tick.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable


class DuplicateSubscriptionError(Exception):
    code = "duplicate-subscription"

    def __init__(self, link: "ObserverLink"):
        super().__init__(f"duplicate subscription: {link}")
        self.link = link


@dataclass(frozen=True)
class ObserverLink:
    subject: str
    observer: str
    kind: str


class Subject:
    """Anything that emits events observers can subscribe to."""

    def __init__(self, name: str):
        self.name = name
        self._subscriptions: list[tuple[ObserverLink, Callable, Callable | None]] = []

    def subscribe(
        self,
        observer: str,
        kind: str,
        callback: Callable[[Any], None],
        defer: Callable[[Callable[[], None]], None] | None = None,
    ) -> ObserverLink:
        link = ObserverLink(self.name, observer, kind)
        if any(existing == link for existing, _, _ in self._subscriptions):
            raise DuplicateSubscriptionError(link)
        self._subscriptions.append((link, callback, defer))
        return link

    def notify(self, kind: str, event: Any) -> int:
        """Deliver `event` to every subscriber of `kind`, in subscription
        order; returns the number of deliveries issued."""
        delivered = 0
        for link, callback, defer in self._subscriptions:
            if link.kind != kind:
                continue
            if defer is None:
                callback(event)
            else:
                defer(lambda callback=callback, event=event: callback(event))
            delivered += 1
        return delivered


def subscribe(subject: Subject, observer: str, event_kind: str, callback, defer=None) -> ObserverLink:
    return subject.subscribe(observer, event_kind, callback, defer)


def notify(subject: Subject, event_kind: str, event: Any) -> int:
    return subject.notify(event_kind, event)
