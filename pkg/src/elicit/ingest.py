"""Load survey exports (CSV or JSON-lines) into validated datasets."""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence, TextIO

from elicit.codebook import Codebook, default_codebook
from elicit.model import COLUMNS, Issue, Response, check

logger = logging.getLogger(__name__)

FORMAT_ERROR = "FormatError"
DUPLICATE = "DuplicateRecord"
DUPLICATE_ID = "DuplicateId"


class FormatError(ValueError):
    """The file as a whole cannot be read as the requested format."""


class DataIOError(OSError):
    pass


@dataclass(frozen=True)
class Drop:
    row: int
    respondent_id: str | None
    issues: tuple[Issue, ...]

    @property
    def kinds(self) -> tuple[str, ...]:
        return tuple(i.kind for i in self.issues)

    def __str__(self) -> str:
        who = self.respondent_id or "?"
        return f"row {self.row} ({who}): " + "; ".join(str(i) for i in self.issues)


@dataclass
class Provenance:
    source: str
    rows_read: int = 0
    drops: list[Drop] = field(default_factory=list)
    warnings: list[tuple[int, Issue]] = field(default_factory=list)


@dataclass
class Dataset:
    responses: list[Response]
    provenance: Provenance

    def __len__(self) -> int:
        return len(self.responses)

    def __iter__(self) -> Iterator[Response]:
        return iter(self.responses)

    @classmethod
    def of(cls, responses: Iterable[Response], source: str = "<memory>") -> Dataset:
        responses = list(responses)
        return cls(responses, Provenance(source, rows_read=len(responses)))


def _csv_rows(fh: TextIO, codebook: Codebook) -> Iterator[tuple[int, dict | Issue]]:
    reader = csv.reader(fh)
    try:
        header = next(reader)
    except StopIteration:
        raise FormatError("empty file: no header row") from None
    names = [codebook.column_name(h) for h in header]
    missing = [c for c in COLUMNS if c not in names]
    if missing:
        raise FormatError(f"header lacks columns: {', '.join(missing)}")
    row_no = 0
    for cells in reader:
        if not cells:
            continue
        row_no += 1
        if len(cells) != len(names):
            yield row_no, Issue(
                FORMAT_ERROR, "*", f"expected {len(names)} fields, found {len(cells)}"
            )
            continue
        yield row_no, dict(zip(names, cells))


def _jsonl_rows(fh: TextIO, codebook: Codebook) -> Iterator[tuple[int, dict | Issue]]:
    row_no = 0
    for line in fh:
        if not line.strip():
            continue
        row_no += 1
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            yield row_no, Issue(FORMAT_ERROR, "*", f"malformed JSON: {exc.msg}")
            continue
        if not isinstance(obj, dict):
            yield row_no, Issue(FORMAT_ERROR, "*", "line is not a JSON object")
            continue
        record = {}
        for key, value in obj.items():
            if value is None:
                continue
            record[codebook.column_name(str(key))] = (
                value if isinstance(value, str) else json.dumps(value)
            )
        yield row_no, record


def infer_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".jsonl", ".ndjson"):
        return "jsonl"
    return "csv"


def parse(
    fh: TextIO, fmt: str = "csv", codebook: Codebook | None = None, source: str = "<stream>"
) -> Dataset:
    """Parse an open text stream. See :func:`load`."""
    codebook = codebook or default_codebook()
    if fmt == "csv":
        rows = _csv_rows(fh, codebook)
    elif fmt == "jsonl":
        rows = _jsonl_rows(fh, codebook)
    else:
        raise ValueError(f"unknown format {fmt!r}")

    prov = Provenance(source)
    kept: list[tuple[int, Response]] = []
    for row_no, record in rows:
        prov.rows_read += 1
        if isinstance(record, Issue):
            prov.drops.append(Drop(row_no, None, (record,)))
            continue
        response, issues = check(record, codebook)
        if response is None:
            rid = (record.get("respondent_id") or "").strip() or None
            errors = tuple(i for i in issues if i.severity == "error")
            prov.drops.append(Drop(row_no, rid, errors))
            continue
        prov.warnings.extend((row_no, i) for i in issues)
        kept.append((row_no, response))

    seen_answers: dict[tuple, str] = {}
    seen_ids: set[str] = set()
    responses = []
    for row_no, r in kept:
        key = r.answers()
        if key in seen_answers:
            prov.drops.append(
                Drop(row_no, r.respondent_id, (Issue(
                    DUPLICATE, "*", f"identical to {seen_answers[key]}"),))
            )
            continue
        if r.respondent_id in seen_ids:
            prov.drops.append(
                Drop(row_no, r.respondent_id, (Issue(
                    DUPLICATE_ID, "respondent_id", "id already used by a different record"),))
            )
            continue
        seen_answers[key] = r.respondent_id
        seen_ids.add(r.respondent_id)
        responses.append(r)

    prov.drops.sort(key=lambda d: d.row)
    return Dataset(responses, prov)


def load(path: str | Path, fmt: str | None = None, codebook: Codebook | None = None) -> Dataset:
    """Read ``path`` into a Dataset.

    Every data row either becomes a Response or is listed in
    ``provenance.drops`` with its reasons, so
    ``len(dataset) + len(drops) == rows_read``. Surviving rows keep input order.
    """
    fmt = fmt or infer_format(path)
    try:
        with open(path, encoding="utf-8-sig", newline="") as fh:
            return parse(fh, fmt, codebook, source=str(path))
    except UnicodeDecodeError as exc:
        raise DataIOError(f"{path}: not valid UTF-8 ({exc.reason})") from exc


def dedup(responses: Sequence[Response]) -> list[Response]:
    """Drop exact repeats of earlier answers, keeping first occurrences.

    The respondent id is ignored in the comparison; near-duplicates stay.
    """
    seen: set[tuple] = set()
    out = []
    for r in responses:
        key = r.answers()
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out


def write_csv(responses: Iterable[Response], fh: TextIO) -> None:
    writer = csv.DictWriter(fh, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in responses:
        writer.writerow(r.to_record())


def write_jsonl(responses: Iterable[Response], fh: TextIO) -> None:
    for r in responses:
        fh.write(json.dumps(r.to_record(), ensure_ascii=False) + "\n")


def to_csv_text(responses: Iterable[Response]) -> str:
    buf = io.StringIO()
    write_csv(responses, buf)
    return buf.getvalue()
