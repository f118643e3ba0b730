"""Knowledge-base decision machinery: condition expressions, thresholds,
symptom repository and ECA rule selection."""

from adaptiot.policy.expr import (
    And,
    Comparison,
    ExprSyntaxError,
    Expression,
    FreqComparison,
    Not,
    Or,
    UnknownPropertyError,
    dominant_event,
    eval_expression,
    format_expression,
    parse_expression,
)
from adaptiot.policy.repository import (
    DuplicateSymptomError,
    Symptom,
    SymptomRepository,
    UnknownSymptomError,
)
from adaptiot.policy.rules import Action, EcaRule, select_rule
from adaptiot.policy.thresholds import NORMAL, VIOLATED, Threshold, threshold_step
from adaptiot.policy.view import EventHistory, StateView, window_frequency

__all__ = [
    "Action",
    "And",
    "Comparison",
    "DuplicateSymptomError",
    "EcaRule",
    "EventHistory",
    "ExprSyntaxError",
    "Expression",
    "FreqComparison",
    "NORMAL",
    "Not",
    "Or",
    "StateView",
    "Symptom",
    "SymptomRepository",
    "Threshold",
    "UnknownPropertyError",
    "UnknownSymptomError",
    "VIOLATED",
    "dominant_event",
    "eval_expression",
    "format_expression",
    "parse_expression",
    "select_rule",
    "threshold_step",
    "window_frequency",
]
