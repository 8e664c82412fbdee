"""Reading and writing corpora (JSON lines or CSV) and weight vectors."""

from __future__ import annotations

import csv
import enum
import io
import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from credit_weights.index import InvalidPaper, PaperRecord
from credit_weights.schemes import CreditWeightsError, WeightVector


class CorpusFormat(enum.Enum):
    JSON_LINES = "jsonl"
    CSV = "csv"


class WeightFormat(enum.Enum):
    CSV_FRACTION = "csv-fraction"
    CSV_DECIMAL = "csv-decimal"
    JSON = "json"


class CorpusError(CreditWeightsError):
    """A corpus record failed validation. ``line`` is 1-based."""

    kind = "corpus-error"

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {self.kind}: {reason}")
        self.line = line
        self.reason = reason


class MalformedRecord(CorpusError):
    kind = "malformed-record"


class NegativeCitations(CorpusError):
    kind = "negative-citations"


class EmptyAuthorList(CorpusError):
    kind = "empty-author-list"


class DuplicatePaperId(CorpusError):
    kind = "duplicate-paper-id"

    def __init__(self, line: int, paper_id: str):
        super().__init__(line, repr(paper_id))
        self.paper_id = paper_id


@dataclass
class CorpusDocument:
    papers: list[PaperRecord]
    format: CorpusFormat
    source_path: str = "<memory>"
    line_numbers: dict[str, int] = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.papers)


_INT = re.compile(r"[+-]?\d+")


def _citations(raw, line: int) -> int:
    if isinstance(raw, str):
        raw = raw.strip()
        if not _INT.fullmatch(raw):
            raise MalformedRecord(line, f"citations not an integer: {raw!r}")
        raw = int(raw)
    elif isinstance(raw, bool) or not isinstance(raw, int):
        raise MalformedRecord(line, f"citations not an integer: {raw!r}")
    if raw < 0:
        raise NegativeCitations(line, str(raw))
    return raw


def _record(line: int, paper_id, citations, authors) -> PaperRecord:
    if not isinstance(paper_id, str) or not paper_id:
        raise MalformedRecord(line, "missing or non-string id")
    citations = _citations(citations, line)
    if not isinstance(authors, list) or not all(isinstance(a, str) for a in authors):
        raise MalformedRecord(line, "authors must be a list of strings")
    if not authors:
        raise EmptyAuthorList(line, paper_id)
    try:
        return PaperRecord(paper_id, citations, tuple(authors))
    except InvalidPaper as exc:
        raise MalformedRecord(line, str(exc)) from None


def _jsonl_rows(text: str):
    for line, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise MalformedRecord(line, f"invalid JSON: {exc.msg}") from None
        if not isinstance(obj, dict):
            raise MalformedRecord(line, "expected a JSON object")
        missing = {"id", "citations", "authors"} - obj.keys()
        if missing:
            raise MalformedRecord(line, f"missing keys {sorted(missing)}")
        yield line, obj["id"], obj["citations"], obj["authors"]


def _csv_rows(text: str):
    reader = csv.reader(io.StringIO(text, newline=""))
    header = next(reader, None)
    if header is None:
        return
    if [h.strip() for h in header] != ["id", "citations", "authors"]:
        raise MalformedRecord(1, f"expected header id,citations,authors, got {header}")
    for row in reader:
        line = reader.line_num
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 3:
            raise MalformedRecord(line, f"expected 3 fields, got {len(row)}")
        paper_id, citations, authors = row
        names = [a.strip() for a in authors.split(";")] if authors.strip() else []
        if any(not a for a in names):
            raise MalformedRecord(line, "blank author name")
        yield line, paper_id.strip(), citations, names


def parse_corpus(
    data: bytes | str, fmt: CorpusFormat | str, source_path: str = "<memory>"
) -> CorpusDocument:
    fmt = CorpusFormat(fmt)
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedRecord(data[: exc.start].count(b"\n") + 1, "not UTF-8") from None
    rows = _jsonl_rows(data) if fmt is CorpusFormat.JSON_LINES else _csv_rows(data)
    papers: list[PaperRecord] = []
    lines: dict[str, int] = {}
    for line, paper_id, citations, authors in rows:
        record = _record(line, paper_id, citations, authors)
        if record.paper_id in lines:
            raise DuplicatePaperId(line, record.paper_id)
        lines[record.paper_id] = line
        papers.append(record)
    return CorpusDocument(papers, fmt, source_path, lines)


def guess_format(path: str | Path) -> CorpusFormat:
    return CorpusFormat.CSV if Path(path).suffix.lower() == ".csv" else CorpusFormat.JSON_LINES


def load_corpus(path: str | Path, fmt: CorpusFormat | str | None = None) -> CorpusDocument:
    path = Path(path)
    fmt = guess_format(path) if fmt is None else CorpusFormat(fmt)
    return parse_corpus(path.read_bytes(), fmt, str(path))


def _csv_quote(cell: str) -> str:
    return '"' + cell.replace('"', '""') + '"'


def write_corpus(papers: Iterable[PaperRecord], fmt: CorpusFormat | str) -> str:
    fmt = CorpusFormat(fmt)
    out = []
    if fmt is CorpusFormat.JSON_LINES:
        for p in papers:
            obj = {"id": p.paper_id, "citations": p.citations, "authors": list(p.authors)}
            out.append(json.dumps(obj, ensure_ascii=False))
        return "".join(line + "\n" for line in out)

    out.append("id,citations,authors")
    for p in papers:
        if any(";" in a for a in p.authors):
            raise CreditWeightsError(f"{p.paper_id}: author id contains ';'")
        buf = io.StringIO()
        csv.writer(buf, lineterminator="").writerow([p.paper_id])
        out.append(f"{buf.getvalue()},{p.citations},{_csv_quote(';'.join(p.authors))}")
    return "".join(line + "\n" for line in out)


# -- rendering -----------------------------------------------------------------


def format_decimal(x: Fraction, places: int = 6) -> str:
    """Fixed-point rendering with exact round-half-even."""
    scaled = round(Fraction(x) * 10**places)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def common_denominator_cells(values: Sequence[Fraction]) -> list[str]:
    """Render values over the least common denominator, e.g. 4/10, 3/10.

    This is how positional weight tables are usually printed; a denominator
    of 1 renders as a bare integer.
    """
    values = [Fraction(v) for v in values]
    lcd = math.lcm(*(v.denominator for v in values)) if values else 1
    if lcd == 1:
        return [str(v.numerator) for v in values]
    return [f"{v.numerator * (lcd // v.denominator)}/{lcd}" for v in values]


def parse_fraction_cell(cell: str) -> Fraction:
    return Fraction(cell.strip())


def write_weights(v: WeightVector, fmt: WeightFormat | str = WeightFormat.CSV_FRACTION) -> str:
    fmt = WeightFormat(fmt)
    if fmt is WeightFormat.JSON:
        fractions = common_denominator_cells(v.weights)
        rows = [
            {"position": j, "fraction": frac, "decimal": float(format_decimal(w))}
            for j, (w, frac) in enumerate(zip(v.weights, fractions), start=1)
        ]
        return json.dumps({"k": v.k, "weights": rows}, indent=2) + "\n"
    if fmt is WeightFormat.CSV_FRACTION:
        cells = common_denominator_cells(v.weights)
    else:
        cells = [format_decimal(w) for w in v.weights]
    lines = ["position,weight"] + [f"{j},{c}" for j, c in enumerate(cells, start=1)]
    return "\n".join(lines) + "\n"


def read_weights(text: str) -> WeightVector:
    """Inverse of :func:`write_weights` for the CSV formats."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["position", "weight"]:
        raise MalformedRecord(1, "expected header position,weight")
    weights = []
    for line, row in enumerate(rows[1:], start=2):
        if len(row) != 2 or int(row[0]) != line - 1:
            raise MalformedRecord(line, f"bad weight row {row}")
        weights.append(parse_fraction_cell(row[1]))
    return WeightVector(tuple(weights))
