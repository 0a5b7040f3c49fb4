"""Command-line front-end.

Subcommands: ``ring info``, ``trace list``, ``trace check``, ``weight table``,
``code analyze``, ``code graph``, ``verify paper``.  All reports are
deterministic: rationals are rendered as ``num/den`` and key order is fixed,
so identical configs produce byte-identical output.  Wall-clock timing is
opt-in via ``--timing`` because it would break that guarantee.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, fields as dataclass_fields
from fractions import Fraction

from . import verify as verify_mod
from .codes import build_code, code_spectrum, function_from_spec, weight_enumerator
from .cyclotomic import rational_str
from .errors import HomringError, InvalidParameter, ParseError, ValidationFailed
from .graphs import (SRGParams, connected_components, function_columns,
                     is_modular, srg_check, two_weight_graph)
from .rings import ring_from_spec
from .traces import (enumerate_trace_maps, read_two_column_table,
                     subring_embedding, trace_from_spec, validate_trace)
from .weights import hamming_table, hom_weight, parse_gamma

CONFIG_KEYS = ("ring", "subring", "trace", "f", "gamma", "weight", "format",
               "budget", "seed")


@dataclass
class JobConfig:
    ring: str | None = None
    subring: str | None = None
    trace: str | None = None
    f: str | None = None
    gamma: str = "1"
    weight: str = "homogeneous"
    format: str | None = None
    budget: int | None = None
    seed: int | None = None


def parse_config(text: str) -> JobConfig:
    """Parse whitespace-separated key=value tokens (later keys win)."""
    cfg = JobConfig()
    for lineno, line in enumerate(text.splitlines(), start=1):
        bare = line.split("#", 1)[0]
        col = 1
        for token in bare.split():
            col = line.index(token, col - 1) + 1
            if "=" not in token:
                raise ParseError(f"expected key=value, got {token!r}",
                                 line=lineno, col=col)
            key, _, value = token.partition("=")
            if key not in CONFIG_KEYS:
                raise ParseError(f"unknown config key {key!r}", line=lineno, col=col)
            if not value:
                raise ParseError(f"empty value for {key!r}", line=lineno, col=col)
            if key in ("budget", "seed"):
                try:
                    value = int(value)
                except ValueError:
                    raise ParseError(f"{key} must be an integer, got {value!r}",
                                     line=lineno, col=col) from None
                if key == "budget" and value <= 0:
                    raise ParseError("budget must be positive", line=lineno, col=col)
            setattr(cfg, key, value)
            col += len(token)
    if cfg.weight not in ("homogeneous", "hamming"):
        raise ParseError(f"weight must be homogeneous or hamming, got {cfg.weight!r}")
    return cfg


def _merge_flags(cfg: JobConfig, args) -> JobConfig:
    for f in dataclass_fields(JobConfig):
        val = getattr(args, f.name, None)
        if val is not None:
            setattr(cfg, f.name, val)
    if cfg.weight not in ("homogeneous", "hamming"):
        raise ParseError(f"weight must be homogeneous or hamming, got {cfg.weight!r}")
    return cfg


def _require_ring(cfg: JobConfig):
    if not cfg.ring:
        raise InvalidParameter("a ring spec is required (ring=... or --ring)")
    return ring_from_spec(cfg.ring)


def _resolve_pair(cfg: JobConfig):
    ring = _require_ring(cfg)
    sub = ring_from_spec(cfg.subring) if cfg.subring else ring
    trace_spec = cfg.trace
    if trace_spec is None:
        if sub is ring:
            trace_spec = "identity"
        else:
            raise InvalidParameter(
                "an explicit trace spec is required when subring differs from ring")
    trace = trace_from_spec(ring, sub, trace_spec)
    return ring, sub, trace, trace_spec


def _weight_table(cfg: JobConfig, sub):
    gamma = parse_gamma(cfg.gamma, sub)
    if cfg.weight == "hamming":
        return hamming_table(sub, gamma)
    return hom_weight(sub, gamma)


def _names(ring, sub, trace_spec, cfg: JobConfig) -> dict:
    return {
        "ring": ring.name,
        "subring": sub.name,
        "trace": trace_spec,
        "f": cfg.f,
        "gamma": rational_str(parse_gamma(cfg.gamma, sub)),
        "weight": cfg.weight,
    }


def run_ring_info(cfg: JobConfig) -> dict:
    ring = _require_ring(cfg)
    local = ring.is_local()
    return {
        "ring": ring.name,
        "family": ring.family,
        "order": ring.order,
        "characteristic": ring.characteristic(),
        "is_local": local,
        "residue_size": ring.residue_size() if local else None,
        "unit_count": len(ring.units()),
        "radical": list(ring.radical().members),
        "socle": list(ring.socle().members),
        "teichmuller": list(ring.teichmuller().elements) if local else None,
    }


def run_trace_list(cfg: JobConfig) -> dict:
    ring = _require_ring(cfg)
    sub = ring_from_spec(cfg.subring) if cfg.subring else ring
    maps = enumerate_trace_maps(ring, sub, budget=cfg.budget)
    return {
        "ring": ring.name,
        "subring": sub.name,
        "count": len(maps),
        "traces": [{"tag": t.tag, "values": list(t.values)} for t in maps],
    }


def run_trace_check(cfg: JobConfig) -> dict:
    ring = _require_ring(cfg)
    sub = ring_from_spec(cfg.subring) if cfg.subring else ring
    if not cfg.trace:
        raise InvalidParameter("trace check needs a trace spec")
    spec = cfg.trace.strip()
    if spec.startswith("table:"):
        values = read_two_column_table(spec[6:], ring.order)
        for v in values:
            if not 0 <= v < sub.order:
                raise InvalidParameter(f"trace value {v} out of range for {sub.name}")
        report = validate_trace(ring, sub, subring_embedding(sub, ring), values)
        body = report.to_dict()
    else:
        trace_from_spec(ring, sub, spec)
        body = {"valid": True, "failures": []}
    return {"ring": ring.name, "subring": sub.name, "trace": spec, **body}


def run_weight_table(cfg: JobConfig) -> dict:
    ring = _require_ring(cfg)
    wt = _weight_table(cfg, ring)
    mul = ring.mul_table()
    module_of = [frozenset(mul[x]) for x in range(ring.order)]
    orbit_gen = {}
    for x in range(ring.order):
        key = module_of[x]
        rows_same = [y for y in range(ring.order) if module_of[y] == key]
        orbit_gen[x] = min(rows_same)
    rows = [{"element": x, "orbit": orbit_gen[x], "weight": rational_str(wt.values[x])}
            for x in range(ring.order)]
    return {
        "ring": ring.name,
        "gamma": rational_str(wt.gamma),
        "kind": wt.kind,
        "rows": rows,
    }


def run_analyze(cfg: JobConfig) -> dict:
    ring, sub, trace, trace_spec = _resolve_pair(cfg)
    if not cfg.f:
        raise InvalidParameter("a function spec is required (f=... or --f)")
    f = function_from_spec(ring, cfg.f, seed=cfg.seed)
    code = build_code(ring, sub, trace, f, budget=cfg.budget)
    wt = _weight_table(cfg, sub)
    enum = weight_enumerator(code, wt)
    spectrum = code_spectrum(code)
    report = _names(ring, sub, trace_spec, cfg)
    report["f"] = f.tag
    if f.seed is not None:
        report["seed"] = f.seed
    report.update({
        "size": code.size,
        "spectrum": [rational_str(v) for v in spectrum],
        "enumerator": enum.to_records(),
    })
    return report


def run_graph(cfg: JobConfig) -> dict:
    ring, sub, trace, trace_spec = _resolve_pair(cfg)
    if not cfg.f:
        raise InvalidParameter("a function spec is required (f=... or --f)")
    f = function_from_spec(ring, cfg.f, seed=cfg.seed)
    code = build_code(ring, sub, trace, f, budget=cfg.budget)
    wt = _weight_table(cfg, sub)
    graph = two_weight_graph(code, wt)
    srg = srg_check(graph)
    degs = {graph.degree(i) for i in range(graph.order)}
    modular, r = is_modular(ring, function_columns(ring, f))
    report = _names(ring, sub, trace_spec, cfg)
    report["f"] = f.tag
    report.update({
        "vertices": graph.order,
        "w1": rational_str(graph.w1),
        "regular_degree": degs.pop() if len(degs) == 1 else None,
        "srg": ({"v": srg.v, "k": srg.k, "lambda": srg.lam, "mu": srg.mu,
                 "degenerate": srg.degenerate}
                if isinstance(srg, SRGParams) else None),
        "srg_failure": (None if isinstance(srg, SRGParams)
                        else {"reason": srg.reason, "witness": srg.witness}),
        "components": connected_components(graph),
        "modular": {"is_modular": modular,
                    "r": rational_str(r) if r is not None else None},
    })
    return report


def verify_paper(only=None) -> dict:
    return verify_mod.run(only=only)


def _to_csv(rows, header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _render(report: dict, command: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        if command == "weight-table":
            return _to_csv(
                [(r["element"], r["orbit"], r["weight"]) for r in report["rows"]],
                ("element", "orbit", "weight"))
        if command == "analyze":
            return _to_csv(
                [(r["weight"], r["count"]) for r in report["enumerator"]],
                ("weight", "count"))
        raise InvalidParameter(f"csv output is not supported for {command}")
    raise ParseError(f"unknown format {fmt!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="homring")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_job_flags(p, with_format_default=None):
        p.add_argument("--config", help="path to a key=value config file")
        p.add_argument("--ring")
        p.add_argument("--subring")
        p.add_argument("--trace")
        p.add_argument("--f", dest="f")
        p.add_argument("--gamma")
        p.add_argument("--weight", choices=("homogeneous", "hamming"))
        p.add_argument("--format", choices=("json", "csv"))
        p.add_argument("--budget", type=int)
        p.add_argument("--seed", type=int)
        p.add_argument("--timing", action="store_true")
        p.set_defaults(default_format=with_format_default or "json")

    ring_p = sub.add_parser("ring").add_subparsers(dest="action", required=True)
    add_job_flags(ring_p.add_parser("info"))

    trace_p = sub.add_parser("trace").add_subparsers(dest="action", required=True)
    add_job_flags(trace_p.add_parser("list"))
    add_job_flags(trace_p.add_parser("check"))

    weight_p = sub.add_parser("weight").add_subparsers(dest="action", required=True)
    add_job_flags(weight_p.add_parser("table", help=None), "csv")

    code_p = sub.add_parser("code").add_subparsers(dest="action", required=True)
    add_job_flags(code_p.add_parser("analyze"))
    add_job_flags(code_p.add_parser("graph"))

    verify_p = sub.add_parser("verify").add_subparsers(dest="action", required=True)
    vp = verify_p.add_parser("paper")
    vp.add_argument("--only", help="comma-separated record ids")
    vp.add_argument("--timing", action="store_true")
    vp.set_defaults(default_format="json")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        command = f"{args.command}-{args.action}" if args.action else args.command
        if command == "verify-paper":
            only = None
            if args.only:
                try:
                    only = [int(tok) for tok in args.only.split(",") if tok]
                except ValueError:
                    raise ParseError(f"bad --only list {args.only!r}") from None
            report = verify_paper(only=only)
            exit_code = 0 if report["passed"] else 1
        else:
            cfg = JobConfig()
            if getattr(args, "config", None):
                try:
                    with open(args.config, "r", encoding="utf-8") as fh:
                        cfg = parse_config(fh.read())
                except OSError as exc:
                    raise InvalidParameter(f"cannot read config: {exc}") from None
            cfg = _merge_flags(cfg, args)
            exit_code = 0
            if command == "ring-info":
                report = run_ring_info(cfg)
            elif command == "trace-list":
                report = run_trace_list(cfg)
            elif command == "trace-check":
                report = run_trace_check(cfg)
                if not report["valid"]:
                    exit_code = ValidationFailed.exit_code
            elif command == "weight-table":
                report = run_weight_table(cfg)
                command = "weight-table"
            elif command == "code-analyze":
                report = run_analyze(cfg)
                command = "analyze"
            elif command == "code-graph":
                report = run_graph(cfg)
            else:  # pragma: no cover - argparse restricts choices
                raise InvalidParameter(f"unknown command {command}")
        if getattr(args, "timing", False):
            report["timing_seconds"] = f"{time.perf_counter() - started:.3f}"
        fmt = getattr(args, "format", None) or getattr(args, "default_format", "json")
        sys.stdout.write(_render(report, command, fmt))
        return exit_code
    except HomringError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
