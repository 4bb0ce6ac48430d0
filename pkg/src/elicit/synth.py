"""Deterministic synthetic datasets with prescribed indicator counts.

Every item group feeds exactly one analysis (1a/2/3/4 for A1, 1b/1c/5 for A2,
6/7/8/9/10 for A3), so the three role assignments are made independently:
each analysis shuffles the record indices with the seeded RNG and hands out
its roles in order. The overlap between the A1, A2 and A3 gate sets is
therefore whatever the shuffles produce; it is not controlled.

Free fields are drawn after the constrained ones and only from values that
keep every gate as assigned.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, fields
from importlib import resources
from pathlib import Path

import yaml

from elicit.ingest import Dataset
from elicit.model import (
    Difference,
    ExamPolicy,
    Frequency,
    Intellect,
    Lang,
    PromptSharing,
    Response,
    YesNoUnsure,
    validate,
)
from elicit.recode import CANONICAL

SKILL_CUT = CANONICAL.skill_cut
CONTRIBUTION_CUT = CANONICAL.contribution_cut
TEXT_GATE = CANONICAL.text_gate

_FILLER = {
    Lang.EN: "AI is useful for drafting and for checking routine work in class.",
    Lang.JA: "生成AIは授業準備や日常的な作業の確認に役立つと感じています。",
}
_SHORT_TEXT = {
    Lang.EN: ["", "Helpful.", "Not sure yet.", "Mixed feelings.", "  Useful tool.  "],
    Lang.JA: ["", "便利です。", "まだ分からない。", "賛否あり。"],
}
_MAX_ATTEMPTS = 1000


class InfeasibleSpec(ValueError):
    pass


@dataclass(frozen=True)
class CountSpec:
    total_n: int
    a1_denominator: int = 0  # T
    a1_numerator: int = 0  # T and fully allow
    a2a_denominator: int = 0  # H with item1c present
    a2a_numerator: int = 0  # H and C
    a2b_numerator: int = 0  # H, C and N
    a3a_denominator: int = 0  # E
    a3a_numerator: int = 0  # E and M
    gated_immaterial: int = 0
    gated_not_immaterial: int = 0
    ungated_immaterial: int = 0
    ungated_not_immaterial: int = 0

    def check(self) -> None:
        """Raise InfeasibleSpec naming the first violated constraint."""
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise InfeasibleSpec(f"{f.name} must be a non-negative integer")
        if self.total_n < 1:
            raise InfeasibleSpec("total_n must be at least 1")
        chains = [
            ("a1_numerator", "a1_denominator", "total_n"),
            ("a2b_numerator", "a2a_numerator", "a2a_denominator", "total_n"),
            ("a3a_numerator", "a3a_denominator", "total_n"),
        ]
        for chain in chains:
            for inner, outer in zip(chain, chain[1:]):
                if getattr(self, inner) > getattr(self, outer):
                    raise InfeasibleSpec(
                        f"{inner} ({getattr(self, inner)}) exceeds "
                        f"{outer} ({getattr(self, outer)})"
                    )
        gated = self.gated_immaterial + self.gated_not_immaterial
        if gated != self.a3a_numerator:
            raise InfeasibleSpec(
                f"gated_immaterial + gated_not_immaterial ({gated}) "
                f"must equal a3a_numerator ({self.a3a_numerator})"
            )
        ungated = self.ungated_immaterial + self.ungated_not_immaterial
        if ungated != self.a3a_denominator - self.a3a_numerator:
            raise InfeasibleSpec(
                f"ungated_immaterial + ungated_not_immaterial ({ungated}) must equal "
                f"a3a_denominator - a3a_numerator "
                f"({self.a3a_denominator - self.a3a_numerator})"
            )

    @classmethod
    def from_mapping(cls, doc: dict) -> CountSpec:
        if not isinstance(doc, dict):
            raise InfeasibleSpec("count spec must be a mapping")
        known = {f.name for f in fields(cls)}
        unknown = set(doc) - known
        if unknown:
            raise InfeasibleSpec(f"unknown count spec keys: {sorted(unknown)}")
        if "total_n" not in doc:
            raise InfeasibleSpec("total_n is required")
        return cls(**doc)

    @classmethod
    def load(cls, path: str | Path) -> CountSpec:
        with open(path, encoding="utf-8") as fh:
            return cls.from_mapping(yaml.safe_load(fh))

    def to_mapping(self) -> dict[str, int]:
        return asdict(self)


def pilot_spec() -> CountSpec:
    """Counts behind the published summary tables (n = 214)."""
    text = resources.files("elicit.data").joinpath("pilot_counts.yaml").read_text("utf-8")
    return CountSpec.from_mapping(yaml.safe_load(text))


def _roles(rng: random.Random, n: int, counts: list[tuple[str, int]]) -> list[str]:
    order = list(range(n))
    rng.shuffle(order)
    roles = ["none"] * n
    pos = 0
    for role, count in counts:
        for idx in order[pos : pos + count]:
            roles[idx] = role
        pos += count
    return roles


def _filler(lang: Lang) -> str:
    text = _FILLER[lang]
    return text[:TEXT_GATE].strip().ljust(TEXT_GATE, ".")


class _Drawer:
    def __init__(self, rng: random.Random):
        self.rng = rng

    def pick(self, options):
        return self.rng.choice(list(options))

    def a1(self, role: str) -> dict:
        rng = self.rng
        if role == "none":
            while True:
                item1a = rng.randint(0, 10)
                item2 = self.pick(YesNoUnsure)
                item4 = self.pick(YesNoUnsure)
                gate = item1a > SKILL_CUT and item2 is YesNoUnsure.YES and item4 is YesNoUnsure.YES
                if not gate:
                    break
            item3 = self.pick(ExamPolicy)
        else:
            item1a = rng.randint(SKILL_CUT + 1, 10)
            item2 = item4 = YesNoUnsure.YES
            if role == "allow":
                item3 = ExamPolicy.FULLY_ALLOW
            else:
                item3 = self.pick(p for p in ExamPolicy if p is not ExamPolicy.FULLY_ALLOW)
        return {"item1a": item1a, "item2": item2, "item3": item3, "item4": item4}

    def a2(self, role: str) -> dict:
        rng = self.rng
        if role == "none":
            item1b = self.pick([Frequency.SOMETIMES, Frequency.NEVER])
            item1c = None if item1b is Frequency.NEVER else rng.randint(0, 100)
            item5 = self.pick(YesNoUnsure)
        else:
            item1b = self.pick([Frequency.ALWAYS, Frequency.FREQUENTLY])
            if role == "low":
                item1c = rng.randint(0, CONTRIBUTION_CUT - 1)
                item5 = self.pick(YesNoUnsure)
            else:
                item1c = rng.randint(CONTRIBUTION_CUT, 100)
                if role == "challenge":
                    item5 = YesNoUnsure.YES
                else:
                    item5 = self.pick([YesNoUnsure.NO, YesNoUnsure.UNSURE])
        return {"item1b": item1b, "item1c": item1c, "item5": item5}

    def a3(self, role: str, lang: Lang, via_text: bool) -> dict:
        if role == "none":
            while True:
                item6 = self.pick(YesNoUnsure)
                item7 = self.pick(Difference)
                if not (item6 is YesNoUnsure.YES and item7 is Difference.IN_KIND):
                    break
            item8 = self.pick(PromptSharing)
            item10 = self.pick(_SHORT_TEXT[lang] + [_filler(lang)])
            item9 = self.pick(Intellect)
            return {"item6": item6, "item7": item7, "item8": item8, "item9": item9, "item10": item10}

        gated, immaterial = role.split("/")
        if gated == "m":
            if via_text:
                item8 = self.pick([PromptSharing.NEED_MORE_INFO, PromptSharing.NO])
                item10 = _filler(lang)
            else:
                item8 = PromptSharing.YES
                item10 = self.pick(_SHORT_TEXT[lang])
        else:
            item8 = self.pick([PromptSharing.NEED_MORE_INFO, PromptSharing.NO])
            item10 = self.pick(_SHORT_TEXT[lang])
        if immaterial == "imm":
            item9 = Intellect.IMMATERIAL
        else:
            item9 = self.pick([Intellect.MATERIAL, Intellect.UNSURE])
        return {
            "item6": YesNoUnsure.YES,
            "item7": Difference.IN_KIND,
            "item8": item8,
            "item9": item9,
            "item10": item10,
        }


def _raw(respondent_id: str, lang: Lang, values: dict) -> dict[str, str]:
    raw = {"respondent_id": respondent_id, "lang": lang.value}
    for key, value in values.items():
        if value is None:
            raw[key] = ""
        elif hasattr(value, "value"):
            raw[key] = value.value
        else:
            raw[key] = str(value)
    return raw


def generate_fixture(spec: CountSpec, seed: int = 0) -> Dataset:
    """Build a dataset whose derived counts equal ``spec`` exactly.

    Output depends only on ``(spec, seed)``. Metacognition-gated records
    alternate between the prompt-sharing path (item8 = Yes) and the text
    path (a comment of exactly the gate length, item8 != Yes).
    """
    spec.check()
    rng = random.Random(seed)
    n = spec.total_n
    a1 = _roles(
        rng,
        n,
        [("allow", spec.a1_numerator), ("other", spec.a1_denominator - spec.a1_numerator)],
    )
    a2 = _roles(
        rng,
        n,
        [
            ("challenge", spec.a2b_numerator),
            ("high", spec.a2a_numerator - spec.a2b_numerator),
            ("low", spec.a2a_denominator - spec.a2a_numerator),
        ],
    )
    a3 = _roles(
        rng,
        n,
        [
            ("m/imm", spec.gated_immaterial),
            ("m/not", spec.gated_not_immaterial),
            ("u/imm", spec.ungated_immaterial),
            ("u/not", spec.ungated_not_immaterial),
        ],
    )

    draw = _Drawer(rng)
    seen: set[tuple] = set()
    responses: list[Response] = []
    gated_count = 0
    for idx in range(n):
        via_text = False
        if a3[idx].startswith("m/"):
            via_text = gated_count % 2 == 1
            gated_count += 1
        for _ in range(_MAX_ATTEMPTS):
            lang = draw.pick(Lang)
            values = {**draw.a1(a1[idx]), **draw.a2(a2[idx]), **draw.a3(a3[idx], lang, via_text)}
            response = validate(_raw(f"S{idx + 1:04d}", lang, values))
            if response.answers() not in seen:
                break
        else:
            raise InfeasibleSpec(f"could not draw a distinct record for index {idx}")
        seen.add(response.answers())
        responses.append(response)
    return Dataset.of(responses, source=f"synth(seed={seed})")
