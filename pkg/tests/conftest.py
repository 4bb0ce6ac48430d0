import random

import pytest

from elicit.model import (
    Difference,
    ExamPolicy,
    Frequency,
    Intellect,
    Lang,
    PromptSharing,
    YesNoUnsure,
    validate,
)

BASE = {
    "respondent_id": "R1",
    "lang": "en",
    "item1a": "7",
    "item1b": "Frequently",
    "item1c": "70",
    "item2": "Yes",
    "item3": "FullyAllow",
    "item4": "Yes",
    "item5": "Yes",
    "item6": "Yes",
    "item7": "InKind",
    "item8": "No",
    "item9": "Immaterial",
    "item10": "",
}


def raw(**overrides):
    record = dict(BASE)
    record.update({k: str(v) for k, v in overrides.items()})
    return record


def response(**overrides):
    return validate(raw(**overrides))


TEXTS = ["", "   ", "short", "x" * 19, "y" * 20, " " + "z" * 20 + " ", "短いコメント", "あ" * 20]


def random_raw(rng: random.Random, rid: str) -> dict:
    """A valid raw record drawn uniformly over every legal value."""
    item1b = rng.choice(list(Frequency))
    return {
        "respondent_id": rid,
        "lang": rng.choice(list(Lang)).value,
        "item1a": str(rng.randint(0, 10)),
        "item1b": item1b.value,
        "item1c": "" if item1b is Frequency.NEVER else str(rng.randint(0, 100)),
        "item2": rng.choice(list(YesNoUnsure)).value,
        "item3": rng.choice(list(ExamPolicy)).value,
        "item4": rng.choice(list(YesNoUnsure)).value,
        "item5": rng.choice(list(YesNoUnsure)).value,
        "item6": rng.choice(list(YesNoUnsure)).value,
        "item7": rng.choice(list(Difference)).value,
        "item8": rng.choice(list(PromptSharing)).value,
        "item9": rng.choice(list(Intellect)).value,
        "item10": rng.choice(TEXTS),
    }


def random_responses(seed: int, n: int):
    rng = random.Random(seed)
    return [validate(random_raw(rng, f"X{i:04d}")) for i in range(n)]


# Acceptance summary: one line per criterion, printed after the run.
_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    def record(number: int, passed: bool, detail: str) -> None:
        _ACCEPTANCE[number] = (passed, detail)
        assert passed, f"criterion {number} failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        passed, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {detail}")
