import random

import pytest
from hypothesis import given, strategies as st

from adaptiot.policy import (
    Action,
    EcaRule,
    EventHistory,
    StateView,
    parse_expression,
    select_rule,
)

PLAN = ((Action("room", "set_actuator", "cooler", 1.0),),)


def rule(rid, priority, event="Hot", condition=None):
    cond = parse_expression(condition) if condition else None
    return EcaRule(rid, priority, event, cond, PLAN)


def empty_view(props=None):
    return StateView(dict(props or {}), EventHistory())


def brute_force_select(rules, event, view, now):
    """Reference scan: filter by event + condition, then order by
    (priority desc, id bytewise asc) and take the head."""
    from adaptiot.policy import eval_expression

    matching = [
        r
        for r in rules
        if r.event == event
        and (r.condition is None or eval_expression(r.condition, view, now))
    ]
    if not matching:
        return None
    return sorted(matching, key=lambda r: (-r.priority, r.id.encode()))[0]


def test_highest_priority_wins():
    rules = [rule("a", 5), rule("b", 9)]
    assert select_rule(rules, "Hot", empty_view(), 0).id == "b"


def test_tie_breaks_bytewise_not_numeric():
    rules = [rule("a2", 7), rule("a10", 7)]
    # b"a10" < b"a2" because ord("1") < ord("2")
    assert select_rule(rules, "Hot", empty_view(), 0).id == "a10"


def test_false_condition_excludes_rule():
    rules = [rule("only", 5, condition="t > 10")]
    assert select_rule(rules, "Hot", empty_view({"t": 3.0}), 0) is None


def test_event_must_match():
    assert select_rule([rule("a", 5, event="Cold")], "Hot", empty_view(), 0) is None


def test_missing_condition_always_holds():
    assert select_rule([rule("a", 1)], "Hot", empty_view(), 0).id == "a"


def test_plan_template_must_be_non_empty():
    with pytest.raises(ValueError):
        EcaRule("r", 1, "E", None, ())
    with pytest.raises(ValueError):
        EcaRule("r", 1, "E", None, ((),))


_IDS = st.text(
    alphabet=st.sampled_from("abcxyz0123456789-_"), min_size=1, max_size=6
)


@given(
    st.lists(
        st.tuples(_IDS, st.integers(min_value=-5, max_value=5)),
        min_size=0,
        max_size=20,
        unique_by=lambda t: t[0],
    ),
    st.sampled_from(["Hot", "Cold"]),
)
def test_select_matches_brute_force(spec, event):
    rules = [rule(rid, prio, event=("Hot" if i % 3 else "Cold")) for i, (rid, prio) in enumerate(spec)]
    view = empty_view()
    got = select_rule(rules, event, view, 0)
    want = brute_force_select(rules, event, view, 0)
    assert (got.id if got else None) == (want.id if want else None)


def test_randomized_tie_resolution():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 20)
        ids = rng.sample(
            [f"r{i}" for i in range(50)] + [f"a{i}" for i in range(50)], n
        )
        rules = [rule(rid, rng.randint(0, 3)) for rid in ids]
        got = select_rule(rules, "Hot", empty_view(), 0)
        want = brute_force_select(rules, "Hot", empty_view(), 0)
        assert got.id == want.id
        # ties resolve to the bytewise-smallest id among max-priority rules
        top = max(r.priority for r in rules)
        peers = [r.id for r in rules if r.priority == top]
        assert got.id == min(peers, key=str.encode)
