"""Codebook: surface labels (English, Japanese, canonical codes) to canonical values.

File format (YAML)::

    version: "2025.1"
    columns:            # optional header aliases -> canonical column
      ID: respondent_id
    items:
      item3:            # canonical code -> list of accepted surface labels
        FullyAllow: ["Fully allow it", "完全に許可する"]
        ...

Every canonical code is also accepted as its own label. Matching is exact
after trimming outer whitespace; there is no case folding or fuzzy match.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import yaml

from elicit.model import CATEGORICAL, COLUMNS


class CodebookError(ValueError):
    pass


@dataclass(frozen=True)
class Codebook:
    version: str
    labels: dict[str, dict[str, str]]
    columns: dict[str, str] = field(default_factory=dict)

    def canonical(self, column: str, label: str) -> str | None:
        return self.labels.get(column, {}).get(label.strip())

    def column_name(self, header: str) -> str:
        header = header.strip()
        return self.columns.get(header, header)

    @classmethod
    def from_mapping(cls, doc: dict) -> Codebook:
        if not isinstance(doc, dict):
            raise CodebookError("codebook must be a mapping")
        items = doc.get("items") or {}
        labels: dict[str, dict[str, str]] = {}
        for column, enum in CATEGORICAL.items():
            table: dict[str, str] = {}
            declared = items.get(column) or {}
            for code in declared:
                if code not in {m.value for m in enum}:
                    raise CodebookError(f"{column}: {code!r} is not a canonical code")
            for member in enum:
                surfaces = [member.value, *(declared.get(member.value) or [])]
                for surface in surfaces:
                    surface = str(surface).strip()
                    previous = table.setdefault(surface, member.value)
                    if previous != member.value:
                        raise CodebookError(
                            f"{column}: label {surface!r} maps to both "
                            f"{previous} and {member.value}"
                        )
            labels[column] = table
        unknown = set(items) - set(CATEGORICAL)
        if unknown:
            raise CodebookError(f"unknown items in codebook: {sorted(unknown)}")

        columns = {str(k).strip(): str(v) for k, v in (doc.get("columns") or {}).items()}
        bad = {v for v in columns.values() if v not in COLUMNS}
        if bad:
            raise CodebookError(f"column aliases target unknown columns: {sorted(bad)}")
        return cls(str(doc.get("version", "unversioned")), labels, columns)

    @classmethod
    def load(cls, path: str | Path) -> Codebook:
        with open(path, encoding="utf-8") as fh:
            return cls.from_mapping(yaml.safe_load(fh))


def default_codebook() -> Codebook:
    """The bilingual codebook shipped with the package."""
    text = resources.files("elicit.data").joinpath("codebook.yaml").read_text("utf-8")
    return Codebook.from_mapping(yaml.safe_load(text))
