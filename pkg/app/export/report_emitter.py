"""Report emission in text or structured form."""
from enum import Enum
from pathlib import Path
from typing import Optional, Union
import logging

from app.domain.errors import ReportIOError
from app.domain.scan_report import ScanReport
from app.export.json_exporter import JSONExporter
from app.export.text_exporter import TextExporter

logger = logging.getLogger(__name__)


class ReportFormat(str, Enum):
    TEXT = "text"
    STRUCTURED = "structured"


def render_report(report: ScanReport, fmt: ReportFormat = ReportFormat.TEXT) -> str:
    if ReportFormat(fmt) == ReportFormat.STRUCTURED:
        return JSONExporter.report_to_json(report)
    return TextExporter.render_report(report)


def emit_report(report: ScanReport, fmt: ReportFormat = ReportFormat.TEXT,
                out: Optional[Union[str, Path]] = None) -> str:
    """Render the report and write it to `out` if given.

    Returns:
        The rendered text

    Raises:
        ReportIOError: the output file cannot be written
    """
    text = render_report(report, fmt)
    if out is not None:
        try:
            with open(out, 'w', encoding='utf-8') as f:
                f.write(text)
        except OSError as e:
            raise ReportIOError(str(out), e.strerror or str(e))
        logger.info(f"Report written to {out}")
    return text
