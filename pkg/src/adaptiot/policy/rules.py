"""Event-Condition-Action rules and deterministic rule selection."""

from __future__ import annotations

from dataclasses import dataclass

from adaptiot.policy.expr import Expression, eval_expression
from adaptiot.policy.view import StateView

COMMANDS = ("set_property", "adjust_property", "set_actuator", "set_reporting_interval")


@dataclass(frozen=True)
class Action:
    """One corrective step: `effector` is who applies it (a device entity, an
    actuator-service at the model stages, or the reserved id "gateway"),
    `target` is the property path, actuator name, or monitor knob it hits."""

    effector: str
    command: str
    target: str
    value: float

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command: {self.command!r}")


# A plan template is an ordered list of steps; each step is a parallel group
# of actions (a single-action group is just a sequential step).
PlanSteps = tuple[tuple[Action, ...], ...]


@dataclass(frozen=True)
class EcaRule:
    id: str
    priority: int
    event: str
    condition: Expression | None
    plan_template: PlanSteps

    def __post_init__(self):
        if not self.id:
            raise ValueError("rule id must be non-empty")
        if not self.plan_template or any(not step for step in self.plan_template):
            raise ValueError("plan template must have >= 1 step, each non-empty")


def select_rule(
    rules: list[EcaRule] | tuple[EcaRule, ...],
    event: str,
    view: StateView,
    now: int,
) -> EcaRule | None:
    """Pick the single rule to fire for `event`, or None.

    Among rules whose event matches and whose condition holds (a missing
    condition always holds), the winner has maximum priority; ties break to
    the lexicographically smallest id in bytewise order.
    """
    best: EcaRule | None = None
    for rule in rules:
        if rule.event != event:
            continue
        if rule.condition is not None and not eval_expression(rule.condition, view, now):
            continue
        if (
            best is None
            or rule.priority > best.priority
            or (rule.priority == best.priority and rule.id.encode() < best.id.encode())
        ):
            best = rule
    return best
