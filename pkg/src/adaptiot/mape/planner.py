"""Planner: turns adaptation requests into change plans via the policy engine."""

from __future__ import annotations

from typing import Callable

from adaptiot.policy import EcaRule, StateView, select_rule
from adaptiot.mape.observer import Subject
from adaptiot.mape.types import AdaptationRequest, ChangePlan

PLAN_EVENT = "plan"
UNHANDLED_EVENT = "unhandled-request"


class DuplicateRuleError(Exception):
    code = "duplicate-rule"

    def __init__(self, rule_id: str):
        super().__init__(f"rule already defined: {rule_id}")
        self.rule_id = rule_id


class UnknownRuleError(Exception):
    code = "unknown-rule"

    def __init__(self, rule_id: str):
        super().__init__(f"no such rule: {rule_id}")
        self.rule_id = rule_id


class Planner(Subject):
    """Holds the ECA rule set; composes at most one plan per request."""

    def __init__(
        self,
        rules: tuple[EcaRule, ...] | list[EcaRule],
        view_of: Callable[[], StateView],
        clock: Callable[[], int],
        name: str = "planner",
    ):
        super().__init__(name)
        self.rules: list[EcaRule] = []
        for rule in rules:
            self.add_rule(rule)
        self._view_of = view_of
        self._clock = clock
        self._counter = 0

    def add_rule(self, rule: EcaRule) -> None:
        if any(r.id == rule.id for r in self.rules):
            raise DuplicateRuleError(rule.id)
        self.rules.append(rule)

    def remove_rule(self, rule_id: str) -> EcaRule:
        for i, rule in enumerate(self.rules):
            if rule.id == rule_id:
                return self.rules.pop(i)
        raise UnknownRuleError(rule_id)

    def on_request(self, request: AdaptationRequest) -> ChangePlan | None:
        """Select the winning rule and instantiate its plan template; an
        unmatched request is notified as `unhandled-request` and dropped."""
        now = self._clock()
        rule = select_rule(self.rules, request.symptom, self._view_of(), now)
        if rule is None:
            self.notify(UNHANDLED_EVENT, request)
            return None
        self._counter += 1
        plan = ChangePlan(f"plan-{self._counter}", request.id, rule.plan_template)
        self.notify(PLAN_EVENT, (plan, rule.id))
        return plan
