"""Command-line front end.

Subcommands: ``verify`` one inequality instance, ``scan`` a family over
an index range, ``table`` for the verification-table rows, ``threshold``
to mine empirical stable starts, and ``thirty`` for the 30-property
search.  Reports are deterministic text, CSV, or JSON on stdout;
diagnostics go to stderr.

Exit codes: 0 every record holds, 1 any record fails, 2 no failures but
some undecided, 3 usage error, 4 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Union

from . import __version__
from .catalog import (
    FAMILIES,
    TABULATED_MULTIPLIERS,
    CheckRecord,
    InequalityId,
    TableRow,
    table_row,
)
from .exactcmp import DEFAULT_MAX_BITS, Method, Outcome, Verdict
from .primes import SieveLimitError, TableGrowthRequired
from .scan import ThresholdReport, scan_family, thirty_property

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 3
EXIT_RESOURCE = 4

DEFAULT_SCAN_CAP = 1_000_000

Record = Union[CheckRecord, ThresholdReport, TableRow]


@dataclass
class ReportDocument:
    """Everything one invocation reports; summary tallies the records."""

    command: str
    parameters: Dict[str, object]
    records: List[Record] = field(default_factory=list)
    summary: Dict[str, int] = field(default_factory=dict)
    tool_version: str = __version__


def summarise(records: Sequence[Record]) -> Dict[str, int]:
    holds = fails = undecided = 0
    for rec in records:
        if isinstance(rec, CheckRecord):
            if rec.outcome is Outcome.HOLDS:
                holds += 1
            elif rec.outcome is Outcome.FAILS:
                fails += 1
            else:
                undecided += 1
        elif isinstance(rec, ThresholdReport):
            span = rec.scan_to - rec.scan_from + 1
            fails += len(rec.failures)
            undecided += len(rec.undecided)
            holds += span - len(rec.failures) - len(rec.undecided)
        else:
            if rec.chain_ok:
                holds += 1
            else:
                fails += 1
    return {"holds": holds, "fails": fails, "undecided": undecided}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


_ID_BY_NAME = {member.value.lower(): member for member in InequalityId}


def _resolve_id(raw: str, variant: Optional[int]) -> InequalityId:
    name = raw.lower()
    if variant is not None:
        if name in ("mamangakis", "sandor"):
            name = f"{name}_v{variant}"
        elif name in _ID_BY_NAME:
            raise UsageError(f"--variant does not apply to id '{raw}'")
    ineq = _ID_BY_NAME.get(name)
    if ineq is None:
        known = ", ".join(sorted(_ID_BY_NAME))
        raise UsageError(f"unknown inequality id '{raw}' (known ids: {known})")
    return ineq


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "csv", "json"), default="text",
        help="report format (default: text)",
    )
    common.add_argument(
        "--max-precision-bits", type=int, default=DEFAULT_MAX_BITS, metavar="BITS",
        help=f"interval precision cap (default: {DEFAULT_MAX_BITS})",
    )
    common.add_argument(
        "--scan-limit-cap", type=int, default=DEFAULT_SCAN_CAP, metavar="N",
        help=f"refuse scans beyond this index (default: {DEFAULT_SCAN_CAP})",
    )

    parser = _Parser(
        prog="primeineq",
        description="Certified checks of classical prime-product inequalities.",
    )
    sub = parser.add_subparsers(
        dest="command", required=True, metavar="command", parser_class=_Parser
    )

    p = sub.add_parser("verify", parents=[common],
                       help="check a single inequality instance")
    p.add_argument("id", metavar="id", help="inequality id, e.g. theorem1")
    for flag in ("--n", "--r", "--x", "--k", "--variant"):
        p.add_argument(flag, type=int)

    p = sub.add_parser("scan", parents=[common],
                       help="check a family over an index range")
    p.add_argument("id", metavar="id")
    p.add_argument("--from", dest="scan_from", type=int, required=True)
    p.add_argument("--to", dest="scan_to", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--variant", type=int)

    p = sub.add_parser("table", parents=[common],
                       help="reproduce verification-table rows")
    p.add_argument("--from", dest="scan_from", type=int, required=True)
    p.add_argument("--to", dest="scan_to", type=int, required=True)

    p = sub.add_parser("threshold", parents=[common],
                       help="mine the empirical stable start of a family")
    p.add_argument("family", choices=("posa", "reich"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)

    p = sub.add_parser("thirty", parents=[common],
                       help="list integers with the 30 property")
    p.add_argument("--limit", type=int, required=True)

    return parser


def _cmd_verify(args) -> ReportDocument:
    ineq = _resolve_id(args.id, args.variant)
    family = FAMILIES[ineq]
    given = {
        name: getattr(args, name)
        for name in ("n", "r", "x", "k")
        if getattr(args, name) is not None
    }
    if family.index_name not in given:
        raise UsageError(f"{ineq.value} requires --{family.index_name}")
    index = given.pop(family.index_name)
    fixed = {}
    for name in family.fixed_names:
        if name not in given:
            raise UsageError(f"{ineq.value} requires --{name}")
        fixed[name] = given.pop(name)
    if given:
        stray = ", ".join(f"--{name}" for name in sorted(given))
        raise UsageError(f"{ineq.value} does not take {stray}")
    try:
        record = family.run(index, fixed, None, args.max_precision_bits)
    except ValueError as exc:
        raise UsageError(str(exc))
    parameters: Dict[str, object] = {"id": ineq.value, family.index_name: index}
    parameters.update(fixed)
    parameters["max_precision_bits"] = args.max_precision_bits
    return ReportDocument("verify", parameters, [record], summarise([record]))


def _cmd_scan(args) -> ReportDocument:
    ineq = _resolve_id(args.id, args.variant)
    family = FAMILIES[ineq]
    if args.scan_to > args.scan_limit_cap:
        raise UsageError(
            f"--to {args.scan_to} exceeds the scan limit cap {args.scan_limit_cap}"
        )
    fixed = {}
    if "k" in family.fixed_names:
        if args.k is None:
            raise UsageError(f"{ineq.value} requires --k")
        fixed["k"] = args.k
    elif args.k is not None:
        raise UsageError(f"{ineq.value} does not take --k")
    try:
        report = scan_family(
            ineq, fixed, args.scan_from, args.scan_to,
            max_precision_bits=args.max_precision_bits,
        )
    except ValueError as exc:
        raise UsageError(str(exc))
    parameters: Dict[str, object] = {
        "id": ineq.value,
        "from": args.scan_from,
        "to": args.scan_to,
    }
    parameters.update(fixed)
    parameters["max_precision_bits"] = args.max_precision_bits
    return ReportDocument("scan", parameters, [report], summarise([report]))


def _cmd_table(args) -> ReportDocument:
    lo, hi = args.scan_from, args.scan_to
    if not (20 <= lo <= hi <= 54):
        raise UsageError("table rows live in [20, 54] with --from <= --to")
    rows = [
        table_row(r, max_precision_bits=args.max_precision_bits)
        for r in range(lo, hi + 1)
    ]
    parameters: Dict[str, object] = {
        "from": lo,
        "to": hi,
        "max_precision_bits": args.max_precision_bits,
    }
    return ReportDocument("table", parameters, rows, summarise(rows))


def _cmd_threshold(args) -> ReportDocument:
    if args.limit > args.scan_limit_cap:
        raise UsageError(
            f"--limit {args.limit} exceeds the scan limit cap {args.scan_limit_cap}"
        )
    ineq = InequalityId.BONSE_POSA if args.family == "posa" else InequalityId.REICH
    if args.limit < 2:
        raise UsageError("--limit must be >= 2")
    try:
        report = scan_family(
            ineq, {"k": args.k}, 1, args.limit,
            max_precision_bits=args.max_precision_bits,
        )
    except ValueError as exc:
        raise UsageError(str(exc))
    parameters: Dict[str, object] = {
        "family": args.family,
        "k": args.k,
        "limit": args.limit,
        "max_precision_bits": args.max_precision_bits,
    }
    return ReportDocument("threshold", parameters, [report], summarise([report]))


def _cmd_thirty(args) -> ReportDocument:
    if args.limit < 1:
        raise UsageError("--limit must be >= 1")
    if args.limit > args.scan_limit_cap:
        raise UsageError(
            f"--limit {args.limit} exceeds the scan limit cap {args.scan_limit_cap}"
        )
    values = thirty_property(args.limit)
    records: List[Record] = [
        CheckRecord(
            InequalityId.THIRTY_PROPERTY,
            {"n": n},
            Verdict(Outcome.HOLDS, Method.EXACT, 0),
        )
        for n in values
    ]
    parameters: Dict[str, object] = {"limit": args.limit}
    return ReportDocument("thirty", parameters, records, summarise(records))


_DISPATCH = {
    "verify": _cmd_verify,
    "scan": _cmd_scan,
    "table": _cmd_table,
    "threshold": _cmd_threshold,
    "thirty": _cmd_thirty,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Execute one invocation; returns the exit code, report on stdout."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        doc = _DISPATCH[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SieveLimitError, TableGrowthRequired, MemoryError) as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    sys.stdout.write(format_report(doc, args.format))
    return exit_code_for(doc.summary)


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


def exit_code_for(summary: Dict[str, int]) -> int:
    if summary.get("fails", 0):
        return EXIT_FAILS
    if summary.get("undecided", 0):
        return EXIT_UNDECIDED
    return EXIT_OK


# --- serialization ---------------------------------------------------------

_CHECK_HEADER = ["id", "params", "verdict", "method", "precision_used",
                 "lhs_bits", "rhs_bits"]
_THRESHOLD_HEADER = ["id", "fixed_params", "scan_from", "scan_to", "failures",
                     "undecided", "stable_start"]
_TABLE_HEADER = ["r", "multiplier", "prime", "certified_lower", "rhs_07",
                 "chain_ok"]


def format_report(doc: ReportDocument, fmt: str = "text") -> str:
    """Deterministic rendering; identical inputs give identical bytes."""
    if fmt == "json":
        return _to_json(doc)
    if fmt == "csv":
        return _to_csv(doc)
    if fmt == "text":
        return _to_text(doc)
    raise ValueError(f"unknown format {fmt!r}")


def _record_to_obj(rec: Record) -> Dict[str, object]:
    if isinstance(rec, CheckRecord):
        return {
            "kind": "check",
            "id": rec.id.value,
            "params": {k: rec.params[k] for k in sorted(rec.params)},
            "verdict": rec.outcome.value,
            "method": rec.method.value,
            "precision_used": rec.precision_used,
            "lhs_bits": rec.lhs_bits,
            "rhs_bits": rec.rhs_bits,
        }
    if isinstance(rec, ThresholdReport):
        return {
            "kind": "threshold",
            "id": rec.id.value,
            "fixed_params": {k: rec.fixed_params[k] for k in sorted(rec.fixed_params)},
            "scan_from": rec.scan_from,
            "scan_to": rec.scan_to,
            "failures": list(rec.failures),
            "undecided": list(rec.undecided),
            "stable_start": rec.stable_start,
        }
    return {
        "kind": "table_row",
        "r": rec.r,
        "multiplier": rec.multiplier,
        "prime": rec.prime,
        "certified_lower": rec.certified_lower,
        "rhs_07": rec.rhs_07,
        "chain_ok": rec.chain_ok,
    }


def _record_from_obj(obj: Dict[str, object]) -> Record:
    kind = obj.get("kind")
    if kind == "check":
        verdict = Verdict(
            Outcome(obj["verdict"]), Method(obj["method"]), int(obj["precision_used"])
        )
        return CheckRecord(
            InequalityId(obj["id"]),
            {k: int(v) for k, v in obj["params"].items()},
            verdict,
            int(obj["lhs_bits"]),
            int(obj["rhs_bits"]),
        )
    if kind == "threshold":
        stable = obj["stable_start"]
        return ThresholdReport(
            id=InequalityId(obj["id"]),
            fixed_params={k: int(v) for k, v in obj["fixed_params"].items()},
            scan_from=int(obj["scan_from"]),
            scan_to=int(obj["scan_to"]),
            failures=[int(v) for v in obj["failures"]],
            undecided=[int(v) for v in obj["undecided"]],
            stable_start=None if stable is None else int(stable),
        )
    if kind == "table_row":
        return TableRow(
            r=int(obj["r"]),
            multiplier=int(obj["multiplier"]),
            prime=int(obj["prime"]),
            certified_lower=str(obj["certified_lower"]),
            rhs_07=str(obj["rhs_07"]),
            chain_ok=bool(obj["chain_ok"]),
        )
    raise ValueError(f"unknown record kind {kind!r}")


def _to_json(doc: ReportDocument) -> str:
    obj = {
        "command": doc.command,
        "parameters": doc.parameters,
        "records": [_record_to_obj(rec) for rec in doc.records],
        "summary": doc.summary,
        "tool_version": doc.tool_version,
    }
    return json.dumps(obj, indent=2) + "\n"


def parse_report_json(text: str) -> ReportDocument:
    """Inverse of the JSON rendering: parse(serialize(doc)) == doc."""
    obj = json.loads(text)
    return ReportDocument(
        command=obj["command"],
        parameters=obj["parameters"],
        records=[_record_from_obj(rec) for rec in obj["records"]],
        summary=obj["summary"],
        tool_version=obj["tool_version"],
    )


def _params_cell(params: Dict[str, int]) -> str:
    return ";".join(f"{k}={params[k]}" for k in sorted(params))


def _parse_params_cell(cell: str) -> Dict[str, int]:
    if not cell:
        return {}
    out = {}
    for piece in cell.split(";"):
        key, _, value = piece.partition("=")
        out[key] = int(value)
    return out


def _ints_cell(values: Sequence[int]) -> str:
    return " ".join(str(v) for v in values)


def _parse_ints_cell(cell: str) -> List[int]:
    return [int(v) for v in cell.split()] if cell else []


def _to_csv(doc: ReportDocument) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    kind = {
        "verify": "check",
        "thirty": "check",
        "scan": "threshold",
        "threshold": "threshold",
        "table": "table_row",
    }.get(doc.command, "check")
    if kind == "check":
        writer.writerow(_CHECK_HEADER)
        for rec in doc.records:
            writer.writerow([
                rec.id.value, _params_cell(rec.params), rec.outcome.value,
                rec.method.value, rec.precision_used, rec.lhs_bits, rec.rhs_bits,
            ])
    elif kind == "threshold":
        writer.writerow(_THRESHOLD_HEADER)
        for rec in doc.records:
            writer.writerow([
                rec.id.value, _params_cell(rec.fixed_params), rec.scan_from,
                rec.scan_to, _ints_cell(rec.failures), _ints_cell(rec.undecided),
                "" if rec.stable_start is None else rec.stable_start,
            ])
    else:
        writer.writerow(_TABLE_HEADER)
        for rec in doc.records:
            writer.writerow([
                rec.r, rec.multiplier, rec.prime, rec.certified_lower,
                rec.rhs_07, "true" if rec.chain_ok else "false",
            ])
    return buf.getvalue()


def parse_records_csv(text: str) -> List[Record]:
    """Parse a CSV rendering back into record objects."""
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        return []
    header, data = rows[0], rows[1:]
    if header == _CHECK_HEADER:
        return [
            CheckRecord(
                InequalityId(row[0]),
                _parse_params_cell(row[1]),
                Verdict(Outcome(row[2]), Method(row[3]), int(row[4])),
                int(row[5]),
                int(row[6]),
            )
            for row in data
        ]
    if header == _THRESHOLD_HEADER:
        return [
            ThresholdReport(
                id=InequalityId(row[0]),
                fixed_params=_parse_params_cell(row[1]),
                scan_from=int(row[2]),
                scan_to=int(row[3]),
                failures=_parse_ints_cell(row[4]),
                undecided=_parse_ints_cell(row[5]),
                stable_start=int(row[6]) if row[6] else None,
            )
            for row in data
        ]
    if header == _TABLE_HEADER:
        return [
            TableRow(
                r=int(row[0]),
                multiplier=int(row[1]),
                prime=int(row[2]),
                certified_lower=row[3],
                rhs_07=row[4],
                chain_ok=row[5] == "true",
            )
            for row in data
        ]
    raise ValueError("unrecognised CSV header")


def _record_lines(rec: Record) -> List[str]:
    if isinstance(rec, CheckRecord):
        label = " ".join(f"{k}={rec.params[k]}" for k in sorted(rec.params))
        if rec.method is Method.EXACT:
            detail = f"exact-integer; lhs {rec.lhs_bits} bits, rhs {rec.rhs_bits} bits"
        else:
            detail = f"certified-interval; {rec.precision_used} bits"
        return [f"  {rec.id.value} {label}: {rec.outcome.value} ({detail})"]
    if isinstance(rec, ThresholdReport):
        fixed = "".join(f" {k}={rec.fixed_params[k]}" for k in sorted(rec.fixed_params))
        stable = "none" if rec.stable_start is None else str(rec.stable_start)
        lines = [
            f"  {rec.id.value}{fixed} scan [{rec.scan_from}, {rec.scan_to}]: "
            f"{len(rec.failures)} fail, {len(rec.undecided)} undecided, "
            f"stable start {stable}"
        ]
        if rec.failures:
            lines.append("    failures: " + _ints_cell(rec.failures))
        if rec.undecided:
            lines.append("    undecided: " + _ints_cell(rec.undecided))
        return lines
    verdict = "ok" if rec.chain_ok else "BROKEN"
    lines = [
        f"  r={rec.r}: {rec.multiplier} x ln {rec.prime} > {rec.certified_lower}"
        f" > 0.7 x {rec.prime} = {rec.rhs_07} (chain {verdict})"
    ]
    printed = TABULATED_MULTIPLIERS.get(rec.r)
    if printed is not None and printed != rec.multiplier:
        lines.append(
            f"    note: traditionally tabulated multiplier is {printed}; "
            f"computed {rec.multiplier}"
        )
    return lines


def _to_text(doc: ReportDocument) -> str:
    lines = [f"command: {doc.command}"]
    if doc.parameters:
        lines.append(
            "parameters: "
            + " ".join(f"{k}={v}" for k, v in doc.parameters.items())
        )
    lines.append("records:")
    for rec in doc.records:
        lines.extend(_record_lines(rec))
    s = doc.summary
    lines.append(
        f"summary: {s.get('holds', 0)} holds, {s.get('fails', 0)} fails, "
        f"{s.get('undecided', 0)} undecided"
    )
    lines.append(f"tool version: {doc.tool_version}")
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    main()
