"""The three pre-specified analyses, with auditable membership lists."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

from elicit.model import Intellect, Response
from elicit.recode import CANONICAL, Signals, Thresholds, derive_signals
from elicit.stats import (
    CrossTab2x2,
    DegenerateTable,
    ExactAssociation,
    Proportion,
    degenerate_association,
    exact_association,
    wilson_ci,
)


class EmptyDenominator(ValueError):
    def __init__(self, indicator: str):
        self.indicator = indicator
        super().__init__(f"{indicator}: no respondents pass the gate (n = 0)")


@dataclass(frozen=True)
class IndicatorResult:
    key: str
    label: str
    proportion: Proportion
    numerator_ids: tuple[str, ...]
    denominator_ids: tuple[str, ...]

    @property
    def k(self) -> int:
        return self.proportion.k

    @property
    def n(self) -> int:
        return self.proportion.n


LABELS = {
    "A1": "AI-integrated assessment capacity (Fully allow)",
    "A2a": "High control → High AI contribution (≥ {cut}%)",
    "A2b": "Among A2a: AI could challenge disciplines",
    "A3a": "Ontological indicator set: Metacognition present",
    "A3b": "Among A3a: Immaterial view of intellect",
}

Scored = list[tuple[Response, Signals]]


def score(ds: Iterable[Response], thresholds: Thresholds = CANONICAL) -> Scored:
    return [(r, derive_signals(r, thresholds)) for r in ds]


def _indicator(
    key: str,
    scored: Scored,
    gate: Callable[[Signals], bool],
    outcome: Callable[[Signals], bool],
    confidence: float,
    label: str | None = None,
) -> IndicatorResult:
    denominator = [(r, s) for r, s in scored if gate(s)]
    if not denominator:
        raise EmptyDenominator(key)
    numerator = [r.respondent_id for r, s in denominator if outcome(s)]
    return IndicatorResult(
        key=key,
        label=label or LABELS[key],
        proportion=wilson_ci(len(numerator), len(denominator), confidence),
        numerator_ids=tuple(numerator),
        denominator_ids=tuple(r.respondent_id for r, _ in denominator),
    )


def analysis1(
    ds: Iterable[Response], thresholds: Thresholds = CANONICAL, confidence: float = 0.95
) -> IndicatorResult:
    """Share fully allowing AI in exams among skilled, teaching-positive, confident detectors."""
    return _indicator(
        "A1",
        score(ds, thresholds),
        lambda s: s.assessment_capacity,
        lambda s: s.fully_allow,
        confidence,
    )


def analysis2(
    ds: Iterable[Response], thresholds: Thresholds = CANONICAL, confidence: float = 0.95
) -> tuple[IndicatorResult, IndicatorResult]:
    scored = score(ds, thresholds)
    a2a = _indicator(
        "A2a",
        scored,
        # high_contribution is None exactly when item1c is absent
        lambda s: s.high_control and s.high_contribution is not None,
        lambda s: bool(s.high_contribution),
        confidence,
        label=LABELS["A2a"].format(cut=thresholds.contribution_cut),
    )
    a2b = _indicator(
        "A2b",
        scored,
        lambda s: s.high_control and s.high_contribution is True,
        lambda s: s.challenges_disciplines,
        confidence,
    )
    return a2a, a2b


@dataclass(frozen=True)
class Analysis3:
    a3a: IndicatorResult
    a3b: IndicatorResult
    ontology_split: dict[str, int]
    crosstab: CrossTab2x2
    association: ExactAssociation


def analysis3(
    ds: Iterable[Response],
    thresholds: Thresholds = CANONICAL,
    confidence: float = 0.95,
    strict: bool = True,
) -> Analysis3:
    """Metacognition prevalence in the ontological set and its association with stance.

    With ``strict=False`` a table with a zero margin yields a degenerate
    association (p = 1) instead of raising :class:`DegenerateTable`.
    """
    scored = score(ds, thresholds)
    a3a = _indicator(
        "A3a", scored, lambda s: s.ontological_set, lambda s: s.metacognition, confidence
    )
    a3b = _indicator(
        "A3b",
        scored,
        lambda s: s.ontological_set and s.metacognition,
        lambda s: s.immaterial,
        confidence,
    )
    gated = Counter(r.scales.item9 for r, s in scored if s.ontological_set and s.metacognition)
    split = {v.value: gated.get(v, 0) for v in Intellect}

    cells = Counter(
        (s.metacognition, s.immaterial) for _, s in scored if s.ontological_set
    )
    table = CrossTab2x2(
        cells[True, True], cells[True, False], cells[False, True], cells[False, False]
    )
    try:
        association = exact_association(table, confidence)
    except DegenerateTable:
        if strict:
            raise
        association = degenerate_association(table, confidence)
    return Analysis3(a3a, a3b, split, table, association)


@dataclass(frozen=True)
class AnalysisReport:
    a1: IndicatorResult
    a2a: IndicatorResult
    a2b: IndicatorResult
    a3a: IndicatorResult
    a3b: IndicatorResult
    ontology_split: dict[str, int]
    crosstab: CrossTab2x2
    association: ExactAssociation
    thresholds: Thresholds = CANONICAL
    confidence: float = 0.95
    n_respondents: int = 0
    source: str = field(default="", compare=False)

    @property
    def indicators(self) -> tuple[IndicatorResult, ...]:
        return self.a1, self.a2a, self.a2b, self.a3a, self.a3b

    @property
    def member_ids(self) -> dict[str, dict[str, tuple[str, ...]]]:
        return {
            i.key: {"numerator": i.numerator_ids, "denominator": i.denominator_ids}
            for i in self.indicators
        }


def compute(
    ds: Iterable[Response],
    thresholds: Thresholds = CANONICAL,
    confidence: float = 0.95,
    source: str = "",
) -> AnalysisReport:
    """Run all three analyses. A degenerate 2x2 table is reported, not raised."""
    responses = list(ds)
    a1 = analysis1(responses, thresholds, confidence)
    a2a, a2b = analysis2(responses, thresholds, confidence)
    a3 = analysis3(responses, thresholds, confidence, strict=False)
    report = AnalysisReport(
        a1=a1,
        a2a=a2a,
        a2b=a2b,
        a3a=a3.a3a,
        a3b=a3.a3b,
        ontology_split=a3.ontology_split,
        crosstab=a3.crosstab,
        association=a3.association,
        thresholds=thresholds,
        confidence=confidence,
        n_respondents=len(responses),
        source=source,
    )
    _check_nesting(report)
    return report


def _check_nesting(report: AnalysisReport) -> None:
    for ind in report.indicators:
        assert set(ind.numerator_ids) <= set(ind.denominator_ids), ind.key
    assert set(report.a2b.denominator_ids) == set(report.a2a.numerator_ids)
    assert set(report.a3b.denominator_ids) == set(report.a3a.numerator_ids)
    assert report.crosstab.total == report.a3a.n
