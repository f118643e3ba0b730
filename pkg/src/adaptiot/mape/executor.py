"""Executor: ordered dispatch of change plans to effectors.

Steps run strictly in order: step i+1 dispatches only once every action of
step i has been acknowledged.  Actions inside one step form a parallel group
and dispatch at the same tick.  Dispatching to an unknown effector aborts the
plan (nothing later dispatches) and reports a failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from adaptiot.policy import Action
from adaptiot.mape.types import ChangePlan


class UnknownPlanError(Exception):
    code = "ack-for-unknown-plan"

    def __init__(self, plan_id: str):
        super().__init__(f"ack for unknown plan: {plan_id}")
        self.plan_id = plan_id


@dataclass
class _PlanRun:
    plan: ChangePlan
    step: int = 0
    pending: set[int] = field(default_factory=set)
    acked_actions: list[Action] = field(default_factory=list)


class Executor:
    """Dispatches actions through `dispatch` and reports progress through
    `report`; both are injected so placement (and link latency) stays the
    wiring's concern.

    dispatch(action, plan_id, step_index, action_index) sends one action to
    its effector.  report(kind, plan, detail) is called with kind "ack" per
    acknowledged action, "completion" when the plan finishes, and
    "plan-failed" when it aborts.
    """

    def __init__(
        self,
        effectors: set[str],
        dispatch: Callable[[Action, str, int, int], None],
        report: Callable[[str, ChangePlan, dict], None],
    ):
        self.effectors = set(effectors)
        self._dispatch = dispatch
        self._report = report
        self._active: dict[str, _PlanRun] = {}

    def run(self, plan: ChangePlan) -> bool:
        """Start a plan; returns False if it failed on the first step."""
        self._active[plan.id] = _PlanRun(plan)
        return self._dispatch_step(self._active[plan.id])

    def _dispatch_step(self, run: _PlanRun) -> bool:
        actions = run.plan.steps[run.step]
        unknown = [a.effector for a in actions if a.effector not in self.effectors]
        if unknown:
            self._fail(run, f"unknown-effector: {unknown[0]}")
            return False
        run.pending = set(range(len(actions)))
        for idx, action in enumerate(actions):
            self._dispatch(action, run.plan.id, run.step, idx)
        return True

    def on_ack(
        self,
        plan_id: str,
        step_index: int,
        action_index: int,
        ok: bool = True,
        detail: str = "",
    ) -> None:
        """Handle an effector acknowledgment; advances or completes the plan."""
        run = self._active.get(plan_id)
        if run is None:
            raise UnknownPlanError(plan_id)
        if step_index != run.step or action_index not in run.pending:
            raise UnknownPlanError(plan_id)
        action = run.plan.steps[step_index][action_index]
        if not ok:
            self._fail(run, detail or "negative-ack")
            return
        run.pending.discard(action_index)
        run.acked_actions.append(action)
        self._report("ack", run.plan, {"step": step_index, "action": action})
        if run.pending:
            return
        if run.step + 1 < len(run.plan.steps):
            run.step += 1
            self._dispatch_step(run)
        else:
            del self._active[run.plan.id]
            self._report("completion", run.plan, {"actions": list(run.acked_actions)})

    def _fail(self, run: _PlanRun, reason: str) -> None:
        del self._active[run.plan.id]
        self._report("plan-failed", run.plan, {"reason": reason})

    def active_plans(self) -> tuple[str, ...]:
        return tuple(self._active)
