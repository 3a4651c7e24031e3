"""Serialisation of verification reports and table rows.

json-lines is the machine format: one object per line, each carrying
`schema_version` and a `record` kind ("verification" or "table_row").
Fractions are written as strings ("3/2"), infinity as "infinity".
Timing lives only under the `wall_seconds` key so it can be stripped when
comparing runs.
"""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Union

import numpy as np

from .verify import FAIL, PASS, SKIPPED, UNSUPPORTED, VerificationReport

SCHEMA_VERSION = 1
STATUSES = (PASS, FAIL, UNSUPPORTED, SKIPPED)


class SchemaError(ValueError):
    pass


def jsonable(x):
    """Plain JSON types for reports: Fractions and infinity become strings."""
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [jsonable(v) for v in items]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, (float, np.floating)):
        return "infinity" if math.isinf(x) and x > 0 else float(x)
    return x if x is None or isinstance(x, str) else str(x)


def report_record(rep: VerificationReport) -> dict:
    return {"schema_version": SCHEMA_VERSION, "record": "verification", "claim_id": rep.claim_id,
            "status": rep.status, "witness": jsonable(rep.witness), "stats": jsonable(rep.stats)}


def row_record(row: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "record": "table_row", **jsonable(row)}


def dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def parse_line(line: str) -> Union[VerificationReport, dict]:
    try:
        doc = json.loads(line)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not JSON: {exc}") from exc
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {doc.get('schema_version')!r}")
    kind = doc.get("record")
    if kind == "verification":
        if doc.get("status") not in STATUSES:
            raise SchemaError(f"unknown status {doc.get('status')!r}")
        return VerificationReport(doc["claim_id"], doc["status"], doc.get("witness"), doc.get("stats") or {})
    if kind == "table_row":
        return {k: v for k, v in doc.items() if k not in ("schema_version", "record")}
    raise SchemaError(f"unknown record kind {kind!r}")


def parse_stream(lines: Iterable[str]) -> Iterator[Union[VerificationReport, dict]]:
    for line in lines:
        if line.strip():
            yield parse_line(line)


def strip_timing(x):
    if isinstance(x, dict):
        return {k: strip_timing(v) for k, v in x.items() if k != "wall_seconds"}
    if isinstance(x, list):
        return [strip_timing(v) for v in x]
    return x


# -- human formats -------------------------------------------------------------

def _cell(v) -> str:
    v = jsonable(v)
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return "" if v is None else str(v)


def markdown_table(rows: Sequence[dict], columns: Sequence[str], title: str = "") -> str:
    out = [f"### {title}", ""] if title else []
    out.append("| " + " | ".join(columns) + " |")
    out.append("|" + "|".join("---" for _ in columns) + "|")
    for row in rows:
        out.append("| " + " | ".join(_cell(row.get(c)).replace("|", "\\|") for c in columns) + " |")
    return "\n".join(out) + "\n"


def csv_table(rows: Sequence[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


REPORT_COLUMNS = ("claim_id", "status", "witness", "stats")


def report_rows(reports: Sequence[VerificationReport]) -> List[dict]:
    return [{"claim_id": r.claim_id, "status": r.status, "witness": r.witness, "stats": r.stats}
            for r in reports]
