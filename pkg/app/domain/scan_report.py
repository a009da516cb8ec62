"""Scan report domain model.

The structured form is versioned; see REPORT_SCHEMA.md. Field order in
`to_dict` is part of the format.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union

from app.domain.report import Statement, TheoremReport, Verdict

SCHEMA_VERSION = "1.0"


@dataclass
class GroupScanResult:
    """Invariants of one group plus the reports of every checker run on it."""
    name: str
    order: int
    class_sizes: List[int] = field(default_factory=list)
    center_order: Optional[int] = None
    m_order: Optional[int] = None
    m_class: Union[int, str, None] = None  # "not nilpotent" when M(G) is not
    fitting_order: Optional[int] = None
    solvable: Optional[bool] = None
    reports: List[TheoremReport] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "class_sizes": list(self.class_sizes),
            "center_order": self.center_order,
            "m_order": self.m_order,
            "m_class": self.m_class,
            "fitting_order": self.fitting_order,
            "solvable": self.solvable,
            "reports": [report.to_dict() for report in self.reports],
            "errors": list(self.errors),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GroupScanResult":
        return cls(
            name=data["name"],
            order=data["order"],
            class_sizes=data.get("class_sizes", []),
            center_order=data.get("center_order"),
            m_order=data.get("m_order"),
            m_class=data.get("m_class"),
            fitting_order=data.get("fitting_order"),
            solvable=data.get("solvable"),
            reports=[TheoremReport.from_dict(r) for r in data.get("reports", [])],
            errors=data.get("errors", []),
        )


@dataclass
class ScanReport:
    """Result of a batch scan."""
    tool_version: str
    config: Dict[str, Any]
    statements: List[Statement]
    groups: List[GroupScanResult] = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    def summary(self) -> Dict[str, Dict[str, int]]:
        """Counts per statement per verdict, zeros included."""
        counts = {s.value: {v.value: 0 for v in Verdict} for s in self.statements}
        for group in self.groups:
            for report in group.reports:
                counts.setdefault(report.statement.value, {v.value: 0 for v in Verdict})
                counts[report.statement.value][report.verdict.value] += 1
        return counts

    def counterexamples(self) -> List[dict]:
        found = []
        for group in self.groups:
            for report in group.reports:
                if report.verdict == Verdict.COUNTEREXAMPLE:
                    found.append({
                        "group": group.name,
                        "order": group.order,
                        "statement": report.statement.value,
                        "subject": report.subject,
                        "proved": report.statement.proved,
                    })
        return found

    def has_counterexample(self) -> bool:
        return bool(self.counterexamples())

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "tool_version": self.tool_version,
            "config": dict(self.config),
            "statements": [s.value for s in self.statements],
            "groups": [group.to_dict() for group in self.groups],
            "summary": self.summary(),
            "counterexamples": self.counterexamples(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ScanReport":
        return cls(
            tool_version=data["tool_version"],
            config=data.get("config", {}),
            statements=[Statement(s) for s in data.get("statements", [])],
            groups=[GroupScanResult.from_dict(g) for g in data.get("groups", [])],
            schema_version=data.get("schema_version", SCHEMA_VERSION),
        )
