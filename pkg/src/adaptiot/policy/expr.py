"""Condition expression language for symptom triggers and ECA rule conditions.

Grammar (precedence: ``not`` > ``and`` > ``or``)::

    expr     := or_expr
    or_expr  := and_expr ('or' and_expr)*
    and_expr := unary ('and' unary)*
    unary    := 'not' unary | '(' expr ')' | cmp | freq_cmp
    cmp      := PATH OP NUMBER
    freq_cmp := 'freq' '(' NAME ',' INT ')' OP INT

OP is one of ``< <= > >= == !=``; PATH is a dotted identifier naming a system
or environment property.  ``freq(E, W)`` counts events named E whose tick lies
in the half-open window ``(now - W, now]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from adaptiot.policy.view import StateView, window_frequency


class ExprSyntaxError(Exception):
    """Raised on malformed expression text; carries the byte offset."""

    code = "syntax-error"

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class UnknownPropertyError(Exception):
    """Raised when evaluation touches a property path absent from the view."""

    code = "unknown-property"

    def __init__(self, path: str):
        super().__init__(f"unknown property: {path}")
        self.path = path


@dataclass(frozen=True)
class Comparison:
    path: str
    op: str
    value: float


@dataclass(frozen=True)
class FreqComparison:
    event: str
    window: int
    op: str
    count: int


@dataclass(frozen=True)
class Not:
    operand: "Expression"


@dataclass(frozen=True)
class And:
    operands: tuple["Expression", ...]


@dataclass(frozen=True)
class Or:
    operands: tuple["Expression", ...]


Expression = Union[Comparison, FreqComparison, Not, And, Or]

_OPS = {
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
}

_TOKEN_RE = re.compile(
    r"(?P<num>-?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*(?:\.[A-Za-z_][A-Za-z0-9_]*)*)"
    r"|(?P<op><=|>=|==|!=|<|>)"
    r"|(?P<punct>[(),])"
)

_WS_RE = re.compile(r"\s*")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        pos = _WS_RE.match(text, pos).end()
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def _offset(self) -> int:
        if self.i < len(self.tokens):
            return self.tokens[self.i][2]
        return len(self.text)

    def _peek(self) -> tuple[str, str] | None:
        if self.i < len(self.tokens):
            kind, value, _ = self.tokens[self.i]
            return kind, value
        return None

    def _advance(self) -> tuple[str, str]:
        kind, value, _ = self.tokens[self.i]
        self.i += 1
        return kind, value

    def _expect(self, kind: str, value: str | None = None, what: str | None = None):
        tok = self._peek()
        label = what or (value if value is not None else kind)
        if tok is None or tok[0] != kind or (value is not None and tok[1] != value):
            raise ExprSyntaxError(f"expected {label}", self._offset())
        return self._advance()

    def parse(self) -> Expression:
        expr = self._or_expr()
        if self.i < len(self.tokens):
            raise ExprSyntaxError("unexpected trailing input", self._offset())
        return expr

    def _or_expr(self) -> Expression:
        parts = [self._and_expr()]
        while self._peek() == ("ident", "or"):
            self._advance()
            parts.append(self._and_expr())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def _and_expr(self) -> Expression:
        parts = [self._unary()]
        while self._peek() == ("ident", "and"):
            self._advance()
            parts.append(self._unary())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def _unary(self) -> Expression:
        tok = self._peek()
        if tok is None:
            raise ExprSyntaxError("expected expression", self._offset())
        if tok == ("ident", "not"):
            self._advance()
            return Not(self._unary())
        if tok == ("punct", "("):
            self._advance()
            expr = self._or_expr()
            self._expect("punct", ")")
            return expr
        if tok == ("ident", "freq"):
            return self._freq_cmp()
        if tok[0] == "ident":
            return self._cmp()
        raise ExprSyntaxError("expected expression", self._offset())

    def _cmp(self) -> Comparison:
        _, path = self._advance()
        _, op = self._expect("op", what="comparison operator")
        _, num = self._expect("num", what="number")
        return Comparison(path, op, float(num))

    def _freq_cmp(self) -> FreqComparison:
        self._advance()  # 'freq'
        self._expect("punct", "(")
        _, event = self._expect("ident", what="event name")
        self._expect("punct", ",")
        window = self._int("window")
        if window < 1:
            raise ExprSyntaxError("freq window must be >= 1", self.tokens[self.i - 1][2])
        self._expect("punct", ")")
        _, op = self._expect("op", what="comparison operator")
        count = self._int("count")
        return FreqComparison(event, window, op, count)

    def _int(self, what: str) -> int:
        offset = self._offset()
        _, num = self._expect("num", what=f"integer {what}")
        if any(c in num for c in ".eE") or num.startswith("-"):
            raise ExprSyntaxError(f"{what} must be a non-negative integer", offset)
        return int(num)


def parse_expression(text: str) -> Expression:
    """Parse expression text; raises ExprSyntaxError with a byte offset."""
    return _Parser(text).parse()


_PREC = {Or: 1, And: 2, Not: 3, Comparison: 4, FreqComparison: 4}


def _fmt_number(value: float) -> str:
    if float(value).is_integer() and abs(value) < 1e15:
        return str(int(value))
    return repr(float(value))


def _fmt(expr: Expression, min_prec: int) -> str:
    prec = _PREC[type(expr)]
    if isinstance(expr, Comparison):
        text = f"{expr.path} {expr.op} {_fmt_number(expr.value)}"
    elif isinstance(expr, FreqComparison):
        text = f"freq({expr.event}, {expr.window}) {expr.op} {expr.count}"
    elif isinstance(expr, Not):
        text = "not " + _fmt(expr.operand, _PREC[Not])
    elif isinstance(expr, And):
        text = " and ".join(_fmt(op, _PREC[And] + 1) for op in expr.operands)
    else:
        text = " or ".join(_fmt(op, _PREC[Or] + 1) for op in expr.operands)
    if prec < min_prec:
        return f"({text})"
    return text


def format_expression(expr: Expression) -> str:
    """Render an AST to concrete syntax; reparsing yields an identical AST."""
    return _fmt(expr, 0)


def eval_expression(expr: Expression, view: StateView, now: int) -> bool:
    """Evaluate against the current property values and event history."""
    if isinstance(expr, Comparison):
        return _OPS[expr.op](view.property_value(expr.path), expr.value)
    if isinstance(expr, FreqComparison):
        return _OPS[expr.op](window_frequency(view, expr.event, expr.window, now), expr.count)
    if isinstance(expr, Not):
        return not eval_expression(expr.operand, view, now)
    if isinstance(expr, And):
        return all(eval_expression(op, view, now) for op in expr.operands)
    if isinstance(expr, Or):
        return any(eval_expression(op, view, now) for op in expr.operands)
    raise TypeError(f"not an expression: {expr!r}")


def dominant_event(expr: Expression) -> str | None:
    """First event name referenced by a freq() term, in pre-order; None if
    the expression contains no frequency term."""
    if isinstance(expr, FreqComparison):
        return expr.event
    if isinstance(expr, Not):
        return dominant_event(expr.operand)
    if isinstance(expr, (And, Or)):
        for op in expr.operands:
            event = dominant_event(op)
            if event is not None:
                return event
    return None


def property_paths(expr: Expression) -> list[str]:
    """All property paths referenced by comparisons, in pre-order."""
    if isinstance(expr, Comparison):
        return [expr.path]
    if isinstance(expr, Not):
        return property_paths(expr.operand)
    if isinstance(expr, (And, Or)):
        paths: list[str] = []
        for op in expr.operands:
            paths.extend(property_paths(op))
        return paths
    return []


def event_names(expr: Expression) -> list[str]:
    """All event names referenced by freq() terms, in pre-order."""
    if isinstance(expr, FreqComparison):
        return [expr.event]
    if isinstance(expr, Not):
        return event_names(expr.operand)
    if isinstance(expr, (And, Or)):
        names: list[str] = []
        for op in expr.operands:
            names.extend(event_names(op))
        return names
    return []
