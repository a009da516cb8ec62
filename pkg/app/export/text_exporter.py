"""Plain-text rendering of scan reports and group summaries."""
from typing import List

from app.domain.report import Verdict
from app.domain.scan_report import GroupScanResult, ScanReport

_VERDICT_SHORT = {
    Verdict.VERIFIED: "ok",
    Verdict.COUNTEREXAMPLE: "COUNTEREXAMPLE",
    Verdict.HYPOTHESIS_NOT_MET: "hyp-not-met",
    Verdict.NOT_APPLICABLE: "n/a",
}

# per statement the table shows the highest-ranked verdict over all subgroups
_RANK = {
    Verdict.NOT_APPLICABLE: 0,
    Verdict.HYPOTHESIS_NOT_MET: 1,
    Verdict.VERIFIED: 2,
    Verdict.COUNTEREXAMPLE: 3,
}


def _table(headers: List[str], rows: List[List[str]]) -> List[str]:
    widths = [max(len(str(cell)) for cell in column) for column in zip(headers, *rows)]

    def line(cells):
        return "  ".join(str(c).ljust(w) for c, w in zip(cells, widths)).rstrip()

    return [line(headers), line(["-" * w for w in widths])] + [line(r) for r in rows]


class TextExporter:
    """Human-readable tables."""

    @staticmethod
    def render_summary(result: GroupScanResult) -> str:
        """The `info` view of one group."""
        lines = [
            f"Group:          {result.name}",
            f"Order:          {result.order}",
            f"Class sizes:    {result.class_sizes}",
            f"|Z(G)|:         {result.center_order}",
            f"|M(G)|:         {result.m_order}",
            f"class of M(G):  {result.m_class}",
            f"|F(G)|:         {result.fitting_order}",
            f"Solvable:       {'yes' if result.solvable else 'no'}",
        ]
        return "\n".join(lines) + "\n"

    @staticmethod
    def render_reports(result: GroupScanResult) -> str:
        rows = []
        for report in result.reports:
            rows.append([report.statement.value, report.subject or "-",
                         report.verdict.value + (" (degenerate)" if report.degenerate else "")])
        if not rows:
            return "No reports\n"
        return "\n".join(_table(["statement", "subject", "verdict"], rows)) + "\n"

    @staticmethod
    def render_report(report: ScanReport) -> str:
        lines = [
            f"grouplab {report.tool_version} (report schema {report.schema_version})",
            "config: " + ", ".join(f"{k}={v}" for k, v in report.config.items()),
            "",
        ]
        rows = []
        for group in report.groups:
            verdicts = {}
            for r in group.reports:
                current = verdicts.get(r.statement.value)
                if current is None or _RANK[r.verdict] > _RANK[current]:
                    verdicts[r.statement.value] = r.verdict
            cells = [group.name, str(group.order), str(group.m_order), str(group.m_class),
                     str(group.fitting_order), "yes" if group.solvable else "no"]
            cells += [_VERDICT_SHORT[verdicts[s.value]] if s.value in verdicts else "-"
                      for s in report.statements]
            cells.append("; ".join(group.errors) if group.errors else "")
            rows.append(cells)
        headers = ["group", "order", "|M|", "cl(M)", "|F|", "solv"] + [s.value for s in report.statements] + ["errors"]
        lines += _table(headers, rows)

        lines += ["", "Summary:"]
        summary_rows = [[name] + [str(counts[v.value]) for v in Verdict]
                        for name, counts in report.summary().items()]
        lines += _table(["statement"] + [v.value for v in Verdict], summary_rows)

        counterexamples = report.counterexamples()
        lines += ["", f"Counterexamples: {len(counterexamples)}"]
        for entry in counterexamples:
            kind = "PROVED STATEMENT (implementation bug)" if entry["proved"] else "conjecture"
            subject = f" [{entry['subject']}]" if entry["subject"] else ""
            lines.append(f"  {entry['group']} (order {entry['order']}): {entry['statement']}{subject} - {kind}")
        return "\n".join(lines) + "\n"
