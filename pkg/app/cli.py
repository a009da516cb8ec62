"""Command-line interface: info, check, scan, serve.

Exit codes: 0 no counterexample, 2 at least one COUNTEREXAMPLE (proved
statements and conjectures are told apart in the output), 1 usage or IO error.
"""
from typing import List, Optional, Sequence
import argparse
import logging
import sys

from app.catalog.builtin import builtin_catalog
from app.catalog.spec_parser import parse_group_spec
from app.config import Settings
from app.data_import.catalog_loader import load_catalog
from app.domain.errors import GroupError
from app.domain.report import Statement, Verdict
from app.domain.scan_report import GroupScanResult
from app.export.json_exporter import JSONExporter
from app.export.report_emitter import ReportFormat, emit_report
from app.export.text_exporter import TextExporter
from app.orchestrator.scan_orchestrator import group_summary, run_statement, scan

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_COUNTEREXAMPLE = 2

DEFAULT_BUILTIN_MAX_ORDER = 64


def parse_statements(text: str) -> List[Statement]:
    """'all' or a comma-separated list of statement ids."""
    if text.strip().lower() == "all":
        return list(Statement)
    return [Statement.parse(part.strip()) for part in text.split(",") if part.strip()]


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with 1; 2 is reserved for counterexamples."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="grouplab",
                             description="Finite group invariants and theorem checks.")
    parser.add_argument("--log-level", default=None, help="Logging level (default from GROUPLAB_LOG_LEVEL)")
    parser.add_argument("--max-order", type=int, default=None, help="Largest group order to build")
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", help="Print the invariants of one group")
    info.add_argument("--group", required=True, help="Group spec, e.g. sym:4 or product:dihedral:4,cyclic:3")
    info.add_argument("--json", action="store_true", help="Structured output")
    info.add_argument("--export", metavar="PATH", help="Also write the Cayley table as a catalog file")

    check = sub.add_parser("check", help="Run one statement on one group")
    check.add_argument("--group", required=True)
    check.add_argument("--statement", required=True, choices=[s.value for s in Statement])
    check.add_argument("--subgroup-witness-search", action="store_true",
                       help="Check every normal A with C_G(A) <= A (theorem_A, corollary_B)")
    check.add_argument("--oracle-cap", type=int, default=None)
    check.add_argument("--json", action="store_true")

    scan_cmd = sub.add_parser("scan", help="Run statements over a catalog of groups")
    scan_cmd.add_argument("--builtin-max-order", type=int, default=None,
                          help=f"Include built-in groups up to this order "
                               f"(default {DEFAULT_BUILTIN_MAX_ORDER} when no catalog is given)")
    scan_cmd.add_argument("--catalog", action="append", default=[], metavar="PATH",
                          help="Catalog file (repeatable)")
    scan_cmd.add_argument("--statements", default="all", help="Comma-separated statement ids or 'all'")
    scan_cmd.add_argument("--oracle-cap", type=int, default=None)
    scan_cmd.add_argument("--jobs", type=int, default=None)
    scan_cmd.add_argument("--json", action="store_true")
    scan_cmd.add_argument("--out", metavar="PATH", help="Write the report to a file instead of stdout")

    serve = sub.add_parser("serve", help="Start the HTTP API")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _print(text: str):
    sys.stdout.write(text)
    sys.stdout.flush()


def cmd_info(args, settings: Settings) -> int:
    G = parse_group_spec(args.group).build(settings)
    summary = group_summary(G)
    if args.export:
        JSONExporter.export_group(G, args.export)
    if args.json:
        _print(JSONExporter.dumps(summary.to_dict()))
    else:
        _print(TextExporter.render_summary(summary))
    return EXIT_OK


def cmd_check(args, settings: Settings) -> int:
    G = parse_group_spec(args.group).build(settings)
    statement = Statement.parse(args.statement)
    reports = run_statement(G, statement, settings, witness_search=args.subgroup_witness_search)
    result = GroupScanResult(name=G.name, order=G.order, reports=reports)
    if args.json:
        _print(JSONExporter.dumps([report.to_dict() for report in reports]))
    else:
        _print(TextExporter.render_reports(result))
    if any(report.verdict == Verdict.COUNTEREXAMPLE for report in reports):
        kind = "proved statement" if statement.proved else "conjecture"
        sys.stderr.write(f"COUNTEREXAMPLE to {kind} {statement.value} in {G.name}\n")
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_scan(args, settings: Settings) -> int:
    statements = parse_statements(args.statements)
    if not statements:
        raise ValueError("--statements selects no statement")
    groups = []
    builtin_max = args.builtin_max_order
    if builtin_max is None and not args.catalog:
        builtin_max = DEFAULT_BUILTIN_MAX_ORDER
    if builtin_max:
        groups.extend(builtin_catalog(builtin_max, settings))
    for path in args.catalog:
        groups.extend(load_catalog(path, settings))

    report = scan(groups, statements, settings)
    fmt = ReportFormat.STRUCTURED if args.json else ReportFormat.TEXT
    text = emit_report(report, fmt, args.out)
    if args.out is None:
        _print(text)

    if report.has_counterexample():
        counterexamples = report.counterexamples()
        proved = [c for c in counterexamples if c["proved"]]
        sys.stderr.write(f"{len(proved)} counterexamples to proved statements, "
                         f"{len(counterexamples) - len(proved)} to conjectures\n")
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_serve(args, settings: Settings) -> int:
    import uvicorn
    uvicorn.run("app.main:app", host=args.host, port=args.port)
    return EXIT_OK


_COMMANDS = {"info": cmd_info, "check": cmd_check, "scan": cmd_scan, "serve": cmd_serve}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = Settings.from_env().with_overrides(
            max_order=args.max_order,
            oracle_cap=getattr(args, "oracle_cap", None),
            jobs=getattr(args, "jobs", None),
        )
        level = (args.log_level or settings.log_level).upper()
        logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                            format="%(asctime)s %(levelname)s %(name)s: %(message)s")
        return _COMMANDS[args.command](args, settings)
    except (GroupError, OSError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_ERROR
