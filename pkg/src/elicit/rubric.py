"""Coherence of AI procurement claims given an ontological stance.

Claims sit on a purpose (exploration vs scale) by strength (need vs want)
grid. A material stance supports a *need* only for scale purposes; an
immaterial stance supports needs of either purpose. Wants are never
constrained, and an Unsure stance is not assessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Stance(str, Enum):
    MATERIAL = "Material"
    IMMATERIAL = "Immaterial"
    UNSURE = "Unsure"


class Purpose(str, Enum):
    EXPLORATION = "Exploration"  # qualitative aims
    SCALE = "Scale"  # quantitative aims


class Strength(str, Enum):
    NEED = "Need"  # indispensable
    WANT = "Want"  # beneficial


class Verdict(str, Enum):
    COHERENT = "CoherentAsStated"
    DOWNGRADED = "DowngradedToWant"
    NOT_ASSESSABLE = "NotAssessable"


QUANTITATIVE_GAINS = "quantitative gains (throughput, accuracy, scale)"
FORMATION_ORIENTED = "formation-oriented (judgment, synthesis, formation)"

QUADRANTS = {
    (Purpose.EXPLORATION, Strength.NEED): "Qualitative need",
    (Purpose.SCALE, Strength.NEED): "Quantitative need",
    (Purpose.EXPLORATION, Strength.WANT): "Qualitative want",
    (Purpose.SCALE, Strength.WANT): "Quantitative want",
}


@dataclass(frozen=True)
class Claim:
    stance: Stance
    purpose: Purpose
    strength: Strength

    @classmethod
    def parse(cls, stance: str, purpose: str, strength: str) -> Claim:
        """Case-insensitive parse of the three fields by code."""

        def pick(enum, text):
            for member in enum:
                if member.value.lower() == text.strip().lower():
                    return member
            choices = ", ".join(m.value for m in enum)
            raise ValueError(f"{text!r} is not one of: {choices}")

        return cls(pick(Stance, stance), pick(Purpose, purpose), pick(Strength, strength))


@dataclass(frozen=True)
class ClaimAssessment:
    claim: Claim
    verdict: Verdict
    quadrant: str
    evidence_class: str
    note: str


def classify_claim(claim: Claim) -> ClaimAssessment:
    quadrant = QUADRANTS[claim.purpose, claim.strength]
    evidence = QUANTITATIVE_GAINS if claim.purpose is Purpose.SCALE else FORMATION_ORIENTED

    if claim.stance is Stance.UNSURE:
        verdict = Verdict.NOT_ASSESSABLE
        note = "stance is undetermined; no coherence judgement is made"
    elif claim.strength is Strength.WANT:
        verdict = Verdict.COHERENT
        note = "beneficial claims are coherent under either stance"
    elif claim.stance is Stance.IMMATERIAL:
        verdict = Verdict.COHERENT
        note = "an immaterial stance supports needs in quantitative or qualitative terms"
    elif claim.purpose is Purpose.SCALE:
        verdict = Verdict.COHERENT
        note = "a material stance supports a need that points to quantitative gains"
    else:
        verdict = Verdict.DOWNGRADED
        note = (
            "a material stance cannot ground a qualitative need; "
            "the claim reads as a preference (Qualitative want)"
        )
    return ClaimAssessment(claim, verdict, quadrant, evidence, note)
