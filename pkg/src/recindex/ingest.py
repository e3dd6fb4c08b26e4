"""Dataset ingestion and per-researcher index reports.

Two input shapes are accepted: CSV rows ``id,c1,c2,...`` (an optional
header line starting ``id,`` is skipped) and JSON lines holding
``{"id": ..., "citations": [...]}``.  Zero-cited researchers are kept;
their report rows are all zeros with classification ``empty``.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .core import (
    BALANCED,
    EMPTY,
    INFLUENTIAL,
    PROLIFIC,
    Vector,
    aux_indices,
    chi_index,
    citation_count,
    h_index,
    make_vector,
    rec_index,
    rec_variants,
)

CLASSIFICATIONS = (INFLUENTIAL, PROLIFIC, BALANCED, EMPTY)

#: Report columns that name a numeric index a ranking can sort by.
RANKABLE_COLUMNS = (
    "n",
    "citations",
    "max",
    "h",
    "g",
    "w",
    "euclidean",
    "rec",
    "chi",
    "rec_i",
    "rec_p",
)


class DatasetError(ValueError):
    """A dataset failed validation; the message pinpoints the cause."""


@dataclass(frozen=True)
class ResearcherRecord:
    id: str
    raw_citations: tuple[int, ...]
    vector: Vector


@dataclass(frozen=True)
class ReportRow:
    id: str
    vector: Vector
    n: int
    citations: int
    max: int
    h: int
    g: int
    w: int
    euclidean: float
    rec: int
    chi: float
    rec_i: int
    rec_p: int
    rect_width: int | None
    maximizers: tuple[int, ...]
    classification: str


@dataclass(frozen=True)
class Report:
    rows: tuple[ReportRow, ...]
    summary: dict[str, int]


def _record(name: str, raw: Iterable[int], line: int) -> ResearcherRecord:
    try:
        vector = make_vector(raw)
    except ValueError as exc:
        raise DatasetError(f"line {line}: researcher {name!r}: {exc}") from None
    return ResearcherRecord(name, tuple(raw), vector)


def _parse_csv_lines(lines: Iterable[str]) -> list[ResearcherRecord]:
    records: list[ResearcherRecord] = []
    seen: dict[str, int] = {}
    for line_no, row in enumerate(csv.reader(lines), 1):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if line_no == 1 and row[0].strip() == "id" and len(row) > 1:
            continue
        name = row[0].strip()
        if not name:
            raise DatasetError(f"line {line_no}: empty researcher id")
        counts = []
        for cell in row[1:]:
            cell = cell.strip()
            if not cell:
                continue  # spreadsheet exports pad short rows with empty cells
            try:
                counts.append(int(cell))
            except ValueError:
                raise DatasetError(
                    f"line {line_no}: invalid citation count {cell!r} for researcher {name!r}"
                ) from None
        if name in seen:
            raise DatasetError(
                f"duplicate researcher id {name!r} on lines {seen[name]} and {line_no}"
            )
        seen[name] = line_no
        records.append(_record(name, counts, line_no))
    return records


def _parse_jsonl_lines(lines: Iterable[str]) -> list[ResearcherRecord]:
    records: list[ResearcherRecord] = []
    seen: dict[str, int] = {}
    for line_no, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DatasetError(f"line {line_no}: invalid JSON: {exc.msg}") from None
        if not isinstance(obj, dict) or "id" not in obj or "citations" not in obj:
            raise DatasetError(f'line {line_no}: expected an object with "id" and "citations"')
        name = str(obj["id"]).strip()
        if not name:
            raise DatasetError(f"line {line_no}: empty researcher id")
        counts = obj["citations"]
        if not isinstance(counts, list):
            raise DatasetError(f"line {line_no}: citations of researcher {name!r} must be a list")
        if name in seen:
            raise DatasetError(
                f"duplicate researcher id {name!r} on lines {seen[name]} and {line_no}"
            )
        seen[name] = line_no
        records.append(_record(name, counts, line_no))
    return records


def parse_dataset(path: str | Path, fmt: str = "auto") -> list[ResearcherRecord]:
    """Read a researcher dataset from disk.

    ``fmt`` is ``csv``, ``jsonl`` or ``auto`` (decide by extension, then
    by whether the first non-blank character is an opening brace).
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DatasetError(f"cannot read dataset {path}: {exc.strerror or exc}") from None
    if fmt == "auto":
        suffix = path.suffix.lower()
        if suffix == ".csv":
            fmt = "csv"
        elif suffix in (".jsonl", ".ndjson", ".json"):
            fmt = "jsonl"
        else:
            stripped = text.lstrip()
            fmt = "jsonl" if stripped.startswith("{") else "csv"
    lines = text.splitlines()
    if fmt == "csv":
        return _parse_csv_lines(lines)
    if fmt == "jsonl":
        return _parse_jsonl_lines(lines)
    raise DatasetError(f"unknown dataset format {fmt!r}")


# ---------------------------------------------------------------------------
# report building
# ---------------------------------------------------------------------------


def report_row(record: ResearcherRecord) -> ReportRow:
    x = record.vector
    analysis = rec_index(x)
    aux = aux_indices(x)
    variants = rec_variants(x)
    return ReportRow(
        id=record.id,
        vector=x,
        n=aux.publication_count,
        citations=citation_count(x),
        max=aux.max_citation,
        h=h_index(x),
        g=aux.g_index,
        w=aux.w_index,
        euclidean=aux.euclidean,
        rec=analysis.value,
        chi=chi_index(x),
        rec_i=variants.influence,
        rec_p=variants.prolificity,
        rect_width=analysis.width,
        maximizers=analysis.maximizers,
        classification=analysis.classification,
    )


def build_report(records: Iterable[ResearcherRecord]) -> Report:
    rows = tuple(report_row(r) for r in records)
    summary = {c: 0 for c in CLASSIFICATIONS}
    for row in rows:
        summary[row.classification] += 1
    return Report(rows=rows, summary=summary)


def ceil_chi(rec_value: int) -> int:
    """Exact integer ceiling of sqrt(rec), computed without floats."""
    root = math.isqrt(rec_value)
    return root if root * root == rec_value else root + 1


def rank_rows(report: Report, by: str, ascending: bool = False) -> list[tuple[int, str, float]]:
    """Stable ranking of report rows by one index column.

    Ties break by id ascending for display order but share the same rank
    number (competition style: 1, 1, 3).
    """
    if by not in RANKABLE_COLUMNS:
        raise ValueError(
            f"cannot rank by {by!r}; choose one of {', '.join(RANKABLE_COLUMNS)}"
        )
    keyed = [(getattr(row, by), row.id) for row in report.rows]
    keyed.sort(key=lambda kv: (kv[0] if ascending else -kv[0], kv[1]))
    ranked: list[tuple[int, str, float]] = []
    rank = 0
    previous: float | None = None
    for position, (value, name) in enumerate(keyed, 1):
        if previous is None or value != previous:
            rank = position
            previous = value
        ranked.append((rank, name, value))
    return ranked
