"""JSON exporter for scan reports and groups."""
import json
from typing import Union
from pathlib import Path

import numpy as np

from app.domain.group_table import GroupTable
from app.domain.scan_report import ScanReport


def _to_builtin(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


class JSONExporter:
    """Exports reports and Cayley tables to JSON."""

    @staticmethod
    def dumps(data: dict) -> str:
        """Stable JSON text: fixed key order, two-space indent, trailing newline."""
        return json.dumps(data, indent=2, ensure_ascii=False, default=_to_builtin) + "\n"

    @staticmethod
    def report_to_json(report: ScanReport) -> str:
        return JSONExporter.dumps(report.to_dict())

    @staticmethod
    def export_group(group: GroupTable, file_path: Union[str, Path]):
        """Write a group as a one-record catalog, loadable with load_catalog."""
        with open(file_path, 'w', encoding='utf-8') as f:
            f.write(JSONExporter.dumps([group.to_dict()]))
