"""Derive the pre-specified boolean signals from a validated response."""

from __future__ import annotations

from dataclasses import dataclass

from elicit.model import (
    Difference,
    ExamPolicy,
    Frequency,
    Intellect,
    PromptSharing,
    Response,
    YesNoUnsure,
    text_length,
)


@dataclass(frozen=True)
class Thresholds:
    """Cut points for the recoding rules.

    ``skill_cut`` is strict (1a > cut); the other two are inclusive.
    """

    skill_cut: int = 5
    contribution_cut: int = 66
    text_gate: int = 20

    def __post_init__(self) -> None:
        if not 0 <= self.skill_cut <= 10:
            raise ValueError("skill_cut must lie in [0, 10]")
        if not 0 <= self.contribution_cut <= 100:
            raise ValueError("contribution_cut must lie in [0, 100]")
        if self.text_gate < 0:
            raise ValueError("text_gate must be non-negative")

    @property
    def canonical(self) -> bool:
        return self == CANONICAL


CANONICAL = Thresholds()


@dataclass(frozen=True)
class Signals:
    ai_skilled: bool
    high_control: bool
    high_contribution: bool | None
    teaching_value: bool
    detection_confidence: bool
    assessment_capacity: bool  # A1 gate
    fully_allow: bool
    challenges_disciplines: bool
    practice_change: bool
    in_kind: bool
    ontological_set: bool  # A3 gate
    text_length: int
    metacognition: bool
    immaterial: bool


def derive_signals(r: Response, thresholds: Thresholds = CANONICAL) -> Signals:
    s = r.scales
    ai_skilled = s.item1a > thresholds.skill_cut
    teaching_value = s.item2 is YesNoUnsure.YES
    detection_confidence = s.item4 is YesNoUnsure.YES
    practice_change = s.item6 is YesNoUnsure.YES
    in_kind = s.item7 is Difference.IN_KIND
    length = text_length(s.item10)
    return Signals(
        ai_skilled=ai_skilled,
        high_control=s.item1b in (Frequency.ALWAYS, Frequency.FREQUENTLY),
        high_contribution=(
            None if s.item1c is None else s.item1c >= thresholds.contribution_cut
        ),
        teaching_value=teaching_value,
        detection_confidence=detection_confidence,
        assessment_capacity=ai_skilled and teaching_value and detection_confidence,
        fully_allow=s.item3 is ExamPolicy.FULLY_ALLOW,
        challenges_disciplines=s.item5 is YesNoUnsure.YES,
        practice_change=practice_change,
        in_kind=in_kind,
        ontological_set=in_kind and practice_change,
        text_length=length,
        # NeedMoreInfo does not count as willingness to share.
        metacognition=s.item8 is PromptSharing.YES or length >= thresholds.text_gate,
        immaterial=s.item9 is Intellect.IMMATERIAL,
    )
