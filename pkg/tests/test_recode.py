import pytest
from hypothesis import given, strategies as st

from elicit.recode import Thresholds, derive_signals

from conftest import random_responses, response


def sig(**overrides):
    return derive_signals(response(**overrides))


def test_assessment_capacity():
    s = sig(item1a=7, item2="Yes", item4="Yes")
    assert s.ai_skilled and s.assessment_capacity


@pytest.mark.parametrize("item1a, skilled", [(0, False), (5, False), (6, True), (10, True)])
def test_skill_cut_is_strict(item1a, skilled):
    assert sig(item1a=item1a).ai_skilled is skilled


@pytest.mark.parametrize("item1c, high", [(0, False), (65, False), (66, True), (100, True)])
def test_contribution_cut_is_inclusive(item1c, high):
    s = sig(item1b="Frequently", item1c=item1c)
    assert s.high_control
    assert s.high_contribution is high


@pytest.mark.parametrize(
    "item1b, high", [("Always", True), ("Frequently", True), ("Sometimes", False), ("Never", False)]
)
def test_high_control(item1b, high):
    extra = {"item1c": ""} if item1b == "Never" else {}
    assert sig(item1b=item1b, **extra).high_control is high


def test_contribution_absent_only_for_never():
    assert sig(item1b="Never", item1c="").high_contribution is None
    assert sig(item1b="Sometimes", item1c=10).high_contribution is False


@pytest.mark.parametrize(
    "item8, text, gated",
    [
        ("NeedMoreInfo", "a" * 19, False),
        ("NeedMoreInfo", "a" * 20, True),
        ("No", "  " + "a" * 19 + "   ", False),
        ("No", "あ" * 20, True),
        ("Yes", "", True),
        ("NeedMoreInfo", "", False),
    ],
)
def test_metacognition_gate(item8, text, gated):
    s = sig(item8=item8, item10=text)
    assert s.metacognition is gated


def test_ontological_set():
    assert sig(item6="Yes", item7="InKind").ontological_set
    assert not sig(item6="Unsure", item7="InKind").ontological_set
    assert not sig(item6="Yes", item7="OnlyDegree").ontological_set


def test_outcome_signals():
    s = sig(item3="FullyAllow", item5="Yes", item9="Immaterial")
    assert s.fully_allow and s.challenges_disciplines and s.immaterial
    s = sig(item3="Limit", item5="Unsure", item9="Unsure")
    assert not (s.fully_allow or s.challenges_disciplines or s.immaterial)


def test_threshold_overrides():
    t = Thresholds(skill_cut=7, contribution_cut=50, text_gate=5)
    s = derive_signals(response(item1a=7, item1c=50, item8="No", item10="hello"), t)
    assert not s.ai_skilled
    assert s.high_contribution
    assert s.metacognition
    assert not t.canonical and Thresholds().canonical


@pytest.mark.parametrize("kwargs", [{"skill_cut": 11}, {"contribution_cut": -1}, {"text_gate": -1}])
def test_threshold_ranges(kwargs):
    with pytest.raises(ValueError):
        Thresholds(**kwargs)


@given(st.integers(0, 500))
def test_signal_invariants(seed):
    for r in random_responses(seed, 5):
        s = derive_signals(r)
        if s.assessment_capacity:
            assert s.ai_skilled
        assert s.ontological_set == (s.in_kind and s.practice_change)
        if r.scales.item8.value == "Yes":
            assert s.metacognition
        assert (s.high_contribution is None) == (r.scales.item1c is None)
        assert derive_signals(r) == s


@given(st.integers(0, 9), st.integers(1, 10))
def test_skill_monotone(a, step):
    lo = sig(item1a=a).ai_skilled
    hi = sig(item1a=min(10, a + step)).ai_skilled
    assert not (lo and not hi)


@given(st.text(max_size=30), st.text(min_size=1, max_size=10).filter(lambda t: t.strip()))
def test_appending_text_keeps_gate(text, extra):
    before = sig(item8="No", item10=text).metacognition
    after = sig(item8="No", item10=text + extra).metacognition
    assert not (before and not after)
