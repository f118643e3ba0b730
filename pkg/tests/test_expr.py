import pytest
from hypothesis import given, strategies as st

from adaptiot.policy import (
    And,
    Comparison,
    EventHistory,
    ExprSyntaxError,
    FreqComparison,
    Not,
    Or,
    StateView,
    UnknownPropertyError,
    dominant_event,
    eval_expression,
    format_expression,
    parse_expression,
)


def view(props=None, events=()):
    history = EventHistory()
    for tick, name in events:
        history.record(tick, name)
    return StateView(dict(props or {}), history)


def test_parse_simple_comparison():
    assert parse_expression("room.temp > 25.0") == Comparison("room.temp", ">", 25.0)


def test_parse_precedence_and_not():
    expr = parse_expression("freq(HighTemp, 10) >= 2 and not door.open == 1")
    assert expr == And(
        (
            FreqComparison("HighTemp", 10, ">=", 2),
            Not(Comparison("door.open", "==", 1.0)),
        )
    )


def test_parse_or_binds_loosest():
    expr = parse_expression("a > 1 or b > 1 and c > 1")
    assert isinstance(expr, Or)
    assert expr.operands[0] == Comparison("a", ">", 1.0)
    assert isinstance(expr.operands[1], And)


def test_parse_error_offset_at_end():
    with pytest.raises(ExprSyntaxError) as err:
        parse_expression("room.temp >")
    assert err.value.offset == 11


def test_parse_error_offset_mid_string():
    with pytest.raises(ExprSyntaxError) as err:
        parse_expression("room.temp ? 5")
    assert err.value.offset == 10


def test_parse_rejects_trailing_tokens():
    with pytest.raises(ExprSyntaxError):
        parse_expression("a > 1 b > 2")


def test_parse_rejects_zero_freq_window():
    with pytest.raises(ExprSyntaxError):
        parse_expression("freq(E, 0) > 1")


def test_parse_rejects_float_freq_count():
    with pytest.raises(ExprSyntaxError):
        parse_expression("freq(E, 5) > 1.5")


def test_eval_comparison():
    assert eval_expression(parse_expression("t > 25"), view({"t": 26.0}), 0) is True
    assert eval_expression(parse_expression("t > 25"), view({"t": 25.0}), 0) is False


def test_eval_freq_window_is_half_open():
    v = view(events=[(5, "E"), (12, "E"), (30, "E")])
    # window (10, 30] counts ticks 12 and 30
    assert eval_expression(parse_expression("freq(E, 20) >= 2"), v, 30) is True
    assert eval_expression(parse_expression("freq(E, 20) >= 3"), v, 30) is False


def test_eval_de_morgan_sanity():
    v = view({"a": 0.0, "b": 0.0})
    assert eval_expression(parse_expression("not (a > 1 or b > 1)"), v, 0) is True


def test_eval_unknown_property():
    with pytest.raises(UnknownPropertyError) as err:
        eval_expression(parse_expression("missing.path > 1"), view(), 0)
    assert err.value.path == "missing.path"


def test_dominant_event():
    assert dominant_event(parse_expression("a > 1")) is None
    expr = parse_expression("a > 1 and (freq(X, 5) > 0 or freq(Y, 5) > 0)")
    assert dominant_event(expr) == "X"


_PATHS = st.sampled_from(["a", "b.c", "room.temp", "door.open", "x_1.y_2"])
_EVENTS = st.sampled_from(["E", "HighTemp", "Alert_1"])
_OPS = st.sampled_from(["<", "<=", ">", ">=", "==", "!="])
_NUMBERS = st.one_of(
    st.integers(min_value=-1000, max_value=1000).map(float),
    st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False),
)


def _expressions():
    atoms = st.one_of(
        st.builds(Comparison, _PATHS, _OPS, _NUMBERS),
        st.builds(
            FreqComparison,
            _EVENTS,
            st.integers(min_value=1, max_value=100),
            _OPS,
            st.integers(min_value=0, max_value=100),
        ),
    )
    return st.recursive(
        atoms,
        lambda children: st.one_of(
            st.builds(Not, children),
            st.builds(And, st.tuples(children, children)),
            st.builds(Or, st.tuples(children, children)),
            st.builds(lambda a, b, c: And((a, b, c)), children, children, children),
        ),
        max_leaves=12,
    )


@given(_expressions())
def test_format_parse_round_trip(expr):
    assert parse_expression(format_expression(expr)) == expr


@given(_expressions())
def test_eval_is_pure(expr):
    v = view(
        {p: 1.0 for p in ["a", "b.c", "room.temp", "door.open", "x_1.y_2"]},
        events=[(3, "E"), (7, "HighTemp"), (9, "Alert_1")],
    )
    assert eval_expression(expr, v, 10) == eval_expression(expr, v, 10)
