"""Render an AnalysisReport as markdown, JSON or plain text.

Display percentages round half away from zero to integers. The JSON form
keeps full precision next to the rounded values, so any disagreement with a
published integer can be traced to the rounding rule.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction

from elicit.indicators import AnalysisReport, IndicatorResult
from elicit.ingest import Provenance
from elicit.rubric import ClaimAssessment
from elicit.stats import odds_ratio_exact

JSON_SCHEMA = "elicit.report/1"


def percent(value: float | Fraction) -> int:
    """100 * value rounded half away from zero (values are non-negative)."""
    if isinstance(value, Fraction):
        scaled = Decimal(value.numerator * 100) / Decimal(value.denominator)
    else:
        scaled = Decimal(value) * 100
    return int(scaled.quantize(Decimal(1), rounding=ROUND_HALF_UP))


def display(ind: IndicatorResult) -> tuple[int, int, int]:
    """(point, low, high) integer percentages for one indicator."""
    p = ind.proportion
    return percent(Fraction(p.k, p.n)), percent(p.ci_low), percent(p.ci_high)


def _finite(x: float) -> float | str | None:
    if math.isnan(x):
        return None
    if math.isinf(x):
        return "inf"
    return x


def _fmt_or(x: float) -> str:
    if math.isnan(x):
        return "undefined"
    if math.isinf(x):
        return "∞"
    return f"{x:.2f}"


def _fmt_p(p: float) -> str:
    return "p < 0.0001" if p < 1e-4 else f"p = {p:.4f}"


def _watermark(report: AnalysisReport) -> str | None:
    t = report.thresholds
    if t.canonical:
        return None
    return (
        f"non-canonical thresholds: skill_cut={t.skill_cut} (1a >), "
        f"contribution_cut={t.contribution_cut} (1c >=), text_gate={t.text_gate} (L >=)"
    )


def _association_line(report: AnalysisReport) -> str:
    assoc = report.association
    if assoc.degenerate:
        return (
            f"OR {_fmt_or(assoc.sample_or)}; association not estimable "
            "(a row or column total is zero); Fisher's exact p = 1"
        )
    conf = percent(assoc.confidence)
    return (
        f"OR ≈ {_fmt_or(assoc.sample_or)} (exact {conf}% CI "
        f"{_fmt_or(assoc.or_ci_low)}–{_fmt_or(assoc.or_ci_high)}); "
        f"Fisher's exact {_fmt_p(assoc.p_two_sided)}"
    )


def render_markdown(
    report: AnalysisReport, provenance: Provenance | None = None, stamp: str | None = None
) -> str:
    conf = percent(report.confidence)
    lines = ["# Indicator report", ""]
    mark = _watermark(report)
    if mark:
        lines += [f"> **{mark}**", ""]
    lines.append(f"- Source: {report.source or '-'}")
    lines.append(f"- Respondents analysed: {report.n_respondents}")
    if provenance is not None:
        lines.append(
            f"- Rows read: {provenance.rows_read}; dropped: {len(provenance.drops)}"
        )
    if stamp:
        lines.append(f"- Generated: {stamp}")
    lines += [
        "",
        f"## Summary of key prevalence estimates with Wilson {conf}% CIs",
        "",
        f"| Panel | k | n | % ({conf}% CI) |",
        "|---|---:|---:|---|",
    ]
    for ind in report.indicators:
        point, low, high = display(ind)
        lines.append(f"| {ind.key} — {ind.label} | {ind.k} | {ind.n} | {point} ({low}–{high}) |")

    t = report.crosstab
    split = " · ".join(f"{k} {v}" for k, v in report.ontology_split.items())
    lines += [
        "",
        f"## Analysis 3 cross-tab: Metacognition × Immaterial (n = {t.total})",
        "",
        "| | Immaterial | Not immaterial |",
        "|---|---:|---:|",
        f"| Metacognition present (M=1) | {t.a} | {t.b} |",
        f"| Metacognition absent (M=0) | {t.c} | {t.d} |",
        "",
        _association_line(report),
        "",
        f"Item 9 among A3a: {split}",
        "",
    ]
    return "\n".join(lines)


def render_plain(
    report: AnalysisReport, provenance: Provenance | None = None, stamp: str | None = None
) -> str:
    lines = []
    mark = _watermark(report)
    if mark:
        lines.append(mark.upper())
    lines.append(f"source={report.source or '-'} respondents={report.n_respondents}")
    if provenance is not None:
        lines.append(f"rows_read={provenance.rows_read} dropped={len(provenance.drops)}")
    if stamp:
        lines.append(f"generated={stamp}")
    for ind in report.indicators:
        point, low, high = display(ind)
        lines.append(f"{ind.key:<4} {ind.k:>4}/{ind.n:<4} {point:>3}% ({low}-{high})  {ind.label}")
    t = report.crosstab
    lines.append(f"crosstab a={t.a} b={t.b} c={t.c} d={t.d}")
    lines.append(_association_line(report))
    return "\n".join(lines) + "\n"


def report_dict(
    report: AnalysisReport, provenance: Provenance | None = None, stamp: str | None = None
) -> dict:
    indicators = []
    for ind in report.indicators:
        point, low, high = display(ind)
        p = ind.proportion
        indicators.append(
            {
                "key": ind.key,
                "label": ind.label,
                "k": p.k,
                "n": p.n,
                "proportion": p.p_hat,
                "ci_low": p.ci_low,
                "ci_high": p.ci_high,
                "percent": point,
                "ci_low_percent": low,
                "ci_high_percent": high,
                "numerator_ids": list(ind.numerator_ids),
                "denominator_ids": list(ind.denominator_ids),
            }
        )
    assoc = report.association
    exact = odds_ratio_exact(report.crosstab)
    doc = {
        "schema": JSON_SCHEMA,
        "source": report.source,
        "n_respondents": report.n_respondents,
        "confidence": report.confidence,
        "thresholds": {**asdict(report.thresholds), "canonical": report.thresholds.canonical},
        "indicators": indicators,
        "analysis3": {
            "ontology_split": dict(report.ontology_split),
            "crosstab": asdict(report.crosstab),
            "association": {
                "sample_or": _finite(assoc.sample_or),
                "sample_or_exact": None if exact is None else str(exact),
                "or_ci_low": _finite(assoc.or_ci_low),
                "or_ci_high": _finite(assoc.or_ci_high),
                "p_two_sided": assoc.p_two_sided,
                "confidence": assoc.confidence,
                "degenerate": assoc.degenerate,
            },
        },
    }
    if provenance is not None:
        doc["provenance"] = {
            "rows_read": provenance.rows_read,
            "drops": [
                {"row": d.row, "respondent_id": d.respondent_id, "reasons": [str(i) for i in d.issues]}
                for d in provenance.drops
            ],
        }
    if stamp:
        doc["generated_at"] = stamp
    return doc


def render_json(
    report: AnalysisReport, provenance: Provenance | None = None, stamp: str | None = None
) -> str:
    return json.dumps(report_dict(report, provenance, stamp), ensure_ascii=False, indent=2) + "\n"


RENDERERS = {"markdown": render_markdown, "json": render_json, "plain": render_plain}


def render(report: AnalysisReport, fmt: str, provenance=None, stamp=None) -> str:
    return RENDERERS[fmt](report, provenance, stamp)


def render_claim(assessment: ClaimAssessment, fmt: str) -> str:
    c = assessment.claim
    if fmt == "json":
        return json.dumps(
            {
                "stance": c.stance.value,
                "purpose": c.purpose.value,
                "strength": c.strength.value,
                "verdict": assessment.verdict.value,
                "quadrant": assessment.quadrant,
                "evidence_class": assessment.evidence_class,
                "note": assessment.note,
            },
            ensure_ascii=False,
            indent=2,
        ) + "\n"
    if fmt == "markdown":
        return (
            f"**{assessment.verdict.value}** — {assessment.quadrant} "
            f"({c.stance.value} stance)\n\n"
            f"- Evidence class: {assessment.evidence_class}\n"
            f"- {assessment.note}\n"
        )
    return (
        f"{assessment.verdict.value}\t{assessment.quadrant}\t{assessment.evidence_class}\n"
    )
