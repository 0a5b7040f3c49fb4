"""Acceptance gate: the fifteen numbered verification records.

Each test prints one PASS/FAIL line and asserts the record's computed result
equals its recorded expected value with exact (rational) arithmetic.  Three
records document discrepancies between the recorded source tables and brute
force (see the failure text for the exact counts); they are expected to fail
until the source tables are corrected, and must not be silenced.
"""

import pytest

RECORD_IDS = list(range(1, 16))


def _line(rec) -> str:
    verdict = "PASS" if rec["pass"] else "FAIL"
    return f"[{rec['id']:02d}] {verdict} {rec['title']}"


@pytest.mark.parametrize("rid", RECORD_IDS)
def test_criterion(rid, verify_report):
    rec = next(r for r in verify_report["records"] if r["id"] == rid)
    print(_line(rec))
    if rec.get("informational"):
        assert rec["computed"]
        return
    assert rec["pass"], (
        f"record {rid} ({rec['title']}):\n"
        f"  expected: {rec['expected']}\n"
        f"  computed: {rec['computed']}"
    )


def test_every_record_is_reported(verify_report):
    assert [r["id"] for r in verify_report["records"]] == RECORD_IDS
    assert verify_report["total"] == 15
