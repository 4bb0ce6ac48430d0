"""Validated survey responses for the ten-item instrument.

A raw record is a mapping of canonical column names to strings. ``validate``
turns it into an immutable :class:`Response` or raises
:class:`ValidationError` listing every violated rule.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Mapping, Protocol

logger = logging.getLogger(__name__)


class Frequency(str, Enum):
    ALWAYS = "Always"
    FREQUENTLY = "Frequently"
    SOMETIMES = "Sometimes"
    NEVER = "Never"


class YesNoUnsure(str, Enum):
    YES = "Yes"
    NO = "No"
    UNSURE = "Unsure"


class ExamPolicy(str, Enum):
    FULLY_ALLOW = "FullyAllow"
    LIMIT = "Limit"
    FORBID = "Forbid"
    UNSURE = "Unsure"


class Difference(str, Enum):
    ONLY_DEGREE = "OnlyDegree"
    IN_KIND = "InKind"
    UNSURE = "Unsure"


class PromptSharing(str, Enum):
    YES = "Yes"
    NEED_MORE_INFO = "NeedMoreInfo"
    NO = "No"


class Intellect(str, Enum):
    MATERIAL = "Material"
    IMMATERIAL = "Immaterial"
    UNSURE = "Unsure"


class Lang(str, Enum):
    EN = "en"
    JA = "ja"


COLUMNS = (
    "respondent_id",
    "lang",
    "item1a",
    "item1b",
    "item1c",
    "item2",
    "item3",
    "item4",
    "item5",
    "item6",
    "item7",
    "item8",
    "item9",
    "item10",
)

# Categorical columns and the enum holding their canonical codes.
CATEGORICAL: dict[str, type[Enum]] = {
    "lang": Lang,
    "item1b": Frequency,
    "item2": YesNoUnsure,
    "item3": ExamPolicy,
    "item4": YesNoUnsure,
    "item5": YesNoUnsure,
    "item6": YesNoUnsure,
    "item7": Difference,
    "item8": PromptSharing,
    "item9": Intellect,
}

NUMERIC_RANGES = {"item1a": (0, 10), "item1c": (0, 100)}
OPTIONAL = frozenset({"item1c", "item10"})

# Issue kinds.
RANGE = "RangeError"
MISSING = "MissingMandatory"
COHERENCE = "CoherenceError"
UNKNOWN_LABEL = "UnknownLabel"


class LabelMapper(Protocol):
    def canonical(self, column: str, label: str) -> str | None: ...


@dataclass(frozen=True)
class Issue:
    kind: str
    column: str
    message: str
    severity: str = "error"

    def __str__(self) -> str:
        return f"{self.kind} on {self.column}: {self.message}"


class ValidationError(ValueError):
    """Raised when a raw record breaks one or more rules.

    ``issues`` holds every error found, not only the first.
    """

    def __init__(self, issues: list[Issue]):
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues))


@dataclass(frozen=True)
class ItemScales:
    item1a: int
    item1b: Frequency
    item1c: int | None
    item2: YesNoUnsure
    item3: ExamPolicy
    item4: YesNoUnsure
    item5: YesNoUnsure
    item6: YesNoUnsure
    item7: Difference
    item8: PromptSharing
    item9: Intellect
    item10: str | None = None

    def __post_init__(self) -> None:
        if not 0 <= self.item1a <= 10:
            raise ValueError(f"item1a out of range: {self.item1a}")
        if self.item1c is not None and not 0 <= self.item1c <= 100:
            raise ValueError(f"item1c out of range: {self.item1c}")
        if (self.item1b is Frequency.NEVER) != (self.item1c is None):
            raise ValueError("item1c must be present exactly when item1b is not Never")
        if self.item10 == "":
            object.__setattr__(self, "item10", None)


@dataclass(frozen=True)
class Response:
    respondent_id: str
    scales: ItemScales
    lang: Lang = Lang.EN

    def answers(self) -> tuple:
        """Everything except the respondent id; the key used for dedup."""
        s = self.scales
        return (
            self.lang,
            s.item1a,
            s.item1b,
            s.item1c,
            s.item2,
            s.item3,
            s.item4,
            s.item5,
            s.item6,
            s.item7,
            s.item8,
            s.item9,
            s.item10,
        )

    def to_record(self) -> dict[str, str]:
        """Serialize to canonical string fields; absent values become ``""``."""
        s = self.scales
        return {
            "respondent_id": self.respondent_id,
            "lang": self.lang.value,
            "item1a": str(s.item1a),
            "item1b": s.item1b.value,
            "item1c": "" if s.item1c is None else str(s.item1c),
            "item2": s.item2.value,
            "item3": s.item3.value,
            "item4": s.item4.value,
            "item5": s.item5.value,
            "item6": s.item6.value,
            "item7": s.item7.value,
            "item8": s.item8.value,
            "item9": s.item9.value,
            "item10": s.item10 or "",
        }


def text_length(text: str | None) -> int:
    """Length in Unicode scalar values after trimming outer whitespace."""
    if not text:
        return 0
    return len(text.strip())


def _parse_int(column: str, value: str, issues: list[Issue]) -> int | None:
    lo, hi = NUMERIC_RANGES[column]
    try:
        number = int(value.strip())
    except ValueError:
        issues.append(Issue(UNKNOWN_LABEL, column, f"not an integer: {value!r}"))
        return None
    if not lo <= number <= hi:
        issues.append(Issue(RANGE, column, f"{number} not in [{lo}, {hi}]"))
        return None
    return number


def _parse_label(
    column: str, value: str, codebook: LabelMapper | None, issues: list[Issue]
) -> Enum | None:
    enum = CATEGORICAL[column]
    code = codebook.canonical(column, value) if codebook is not None else value.strip()
    try:
        return enum(code)
    except ValueError:
        issues.append(Issue(UNKNOWN_LABEL, column, f"unknown label {value!r}"))
        return None


def check(
    raw: Mapping[str, Any], codebook: LabelMapper | None = None
) -> tuple[Response | None, list[Issue]]:
    """Validate ``raw`` and return ``(response, issues)``.

    ``response`` is None whenever an error-severity issue exists. Warnings
    (the item1c structural-skip repair) are returned alongside a Response.
    """
    issues: list[Issue] = []
    values: dict[str, Any] = {}

    def present(column: str) -> str | None:
        value = raw.get(column)
        if value is None:
            return None
        value = str(value)
        return value if value.strip() else None

    respondent_id = present("respondent_id")
    if respondent_id is None:
        issues.append(Issue(MISSING, "respondent_id", "respondent_id is required"))

    for column in COLUMNS[1:]:
        value = present(column)
        if column == "item10":
            # Whitespace-only text is kept verbatim; it just has length 0.
            text = raw.get("item10")
            values["item10"] = str(text) if text not in (None, "") else None
            continue
        if value is None:
            if column not in OPTIONAL:
                issues.append(Issue(MISSING, column, "mandatory item is empty"))
            values[column] = None
            continue
        if column in NUMERIC_RANGES:
            values[column] = _parse_int(column, value, issues)
        else:
            values[column] = _parse_label(column, value, codebook, issues)

    if values.get("item1b") is Frequency.NEVER and values.get("item1c") is not None:
        issues.append(
            Issue(
                COHERENCE,
                "item1c",
                "item1b is Never so item1c is inapplicable; value dropped",
                severity="warning",
            )
        )
        logger.warning(
            "respondent %s: item1c=%s dropped (item1b=Never)",
            respondent_id,
            values["item1c"],
        )
        values["item1c"] = None
    elif values.get("item1b") not in (None, Frequency.NEVER) and present("item1c") is None:
        issues.append(
            Issue(MISSING, "item1c", "item1c is required unless item1b is Never")
        )

    if any(i.severity == "error" for i in issues):
        return None, issues

    scales = ItemScales(**{k: v for k, v in values.items() if k != "lang"})
    return Response(respondent_id, scales, values["lang"]), issues


def validate(raw: Mapping[str, Any], codebook: LabelMapper | None = None) -> Response:
    """Build a Response from a raw record or raise :class:`ValidationError`."""
    response, issues = check(raw, codebook)
    if response is None:
        raise ValidationError([i for i in issues if i.severity == "error"])
    return response
