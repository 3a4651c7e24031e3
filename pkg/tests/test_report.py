import math
from fractions import Fraction

import numpy as np
import pytest

from coho.report import (SCHEMA_VERSION, SchemaError, csv_table, dumps, markdown_table, parse_line,
                         parse_stream, report_record, row_record, strip_timing)
from coho.verify import FAIL, PASS, VerificationReport


def test_round_trip():
    rep = VerificationReport("lemma_half:su(2,1):S={}", FAIL, {"lambda": np.array([1, -2]).tolist(), "r": Fraction(3, 2)},
                             {"count": np.int64(4), "r_g": math.inf, "wall_seconds": 0.1})
    line = dumps(report_record(rep))
    back = parse_line(line)
    assert back.claim_id == rep.claim_id and back.status == FAIL
    assert back.witness == {"lambda": [1, -2], "r": "3/2"}
    assert back.stats["r_g"] == "infinity"
    assert strip_timing(back.stats) == {"count": 4, "r_g": "infinity"}


def test_stream_mixes_rows_and_reports():
    lines = [dumps(row_record({"form": "G", "match": "yes"})), "",
             dumps(report_record(VerificationReport("x", PASS)))]
    out = list(parse_stream(lines))
    assert out[0] == {"form": "G", "match": "yes"}
    assert out[1].status == PASS


@pytest.mark.parametrize("line", ['{"schema_version": 99, "record": "verification"}',
                                  '{"schema_version": %d, "record": "nope"}' % SCHEMA_VERSION,
                                  '{"schema_version": %d, "record": "verification", "claim_id": "x", '
                                  '"status": "maybe"}' % SCHEMA_VERSION,
                                  "not json"])
def test_schema_errors(line):
    with pytest.raises(SchemaError):
        parse_line(line)


def test_tables():
    rows = [{"form": "su(2,1)", "r": 2}, {"form": "a|b", "r": None}]
    md = markdown_table(rows, ["form", "r"], "T")
    assert "| su(2,1) | 2 |" in md and "a\\|b" in md
    assert csv_table(rows, ["form", "r"]).splitlines() == ["form,r", '"su(2,1)",2', "a|b,"]
