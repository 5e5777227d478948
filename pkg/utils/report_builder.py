"""
Report Builder Utility for semidecomp

This module provides functions for creating consistent report documents
for every command and rendering them as a table, JSON or CSV.

Rendered output contains exact integers only and is byte-identical across
runs for the same input; elapsed time is included only on request.
"""

import io
import csv
import json
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Tuple

import config


@dataclass
class ReportDocument:
    """The machine-readable result of one command."""

    command: str
    input: Dict[str, Any]
    results: Dict[str, Any]
    elapsed_ms: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'command': self.command,
            'input': self.input,
            'results': self.results,
        }
        if self.elapsed_ms is not None:
            data['elapsed_ms'] = self.elapsed_ms
        return data


def create_report(command: str, descriptor: Dict[str, Any], results: Dict[str, Any]) -> ReportDocument:
    """Create a report document.

    Args:
        command: The command name, echoed in the output
        descriptor: How the input semigroup was given
        results: Command results (JSON-compatible, integers only)

    Returns:
        The created report
    """
    return ReportDocument(command=command, input=descriptor, results=results)


def _flatten(value: Any, prefix: str = '') -> Iterator[Tuple[str, str]]:
    if isinstance(value, dict):
        for key, item in value.items():
            yield from _flatten(item, f"{prefix}.{key}" if prefix else str(key))
    elif isinstance(value, list) and any(isinstance(item, (dict, list)) for item in value):
        for index, item in enumerate(value):
            yield from _flatten(item, f"{prefix}.{index}")
    elif isinstance(value, list):
        yield prefix, ' '.join(_scalar(item) for item in value)
    else:
        yield prefix, _scalar(value)


def _scalar(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value)


def render_json(report: ReportDocument) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True) + '\n'


def render_csv(report: ReportDocument) -> str:
    """Row tables (a 'rows' list of dicts) become one CSV line per row; anything else is field,value."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    rows = report.results.get('rows')
    if isinstance(rows, list) and rows and all(isinstance(row, dict) for row in rows):
        columns = list(rows[0])
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_scalar(row.get(column)) for column in columns])
        return buffer.getvalue()
    writer.writerow(['field', 'value'])
    for key, value in _flatten(report.to_dict()):
        writer.writerow([key, value])
    return buffer.getvalue()


def _table_lines(rows: List[Dict[str, Any]]) -> List[str]:
    columns = list(rows[0])
    cells = [[_scalar(row.get(column)) for column in columns] for row in rows]
    widths = [max(len(column), *(len(line[i]) for line in cells)) for i, column in enumerate(columns)]
    lines = ['  '.join(column.ljust(widths[i]) for i, column in enumerate(columns)).rstrip()]
    lines.append('  '.join('-' * width for width in widths))
    for line in cells:
        lines.append('  '.join(cell.ljust(widths[i]) for i, cell in enumerate(line)).rstrip())
    return lines


def render_table(report: ReportDocument) -> str:
    """Human-readable rendering: aligned key/value pairs, row tables as columns."""
    lines = [f"{report.command}"]
    for key, value in _flatten(report.input, 'input'):
        lines.append(f"  {key}: {value}")
    results = dict(report.results)
    rows = results.pop('rows', None)
    pairs = list(_flatten(results))
    if pairs:
        width = max(len(key) for key, _ in pairs)
        for key, value in pairs:
            lines.append(f"  {key.ljust(width)} : {value}")
    if isinstance(rows, list) and rows:
        lines.append('')
        lines.extend(_table_lines(rows))
    if report.elapsed_ms is not None:
        lines.append(f"  elapsed_ms: {report.elapsed_ms}")
    return '\n'.join(lines) + '\n'


RENDERERS = {
    'table': render_table,
    'json': render_json,
    'csv': render_csv,
}


def render(report: ReportDocument, output_format: str = 'table') -> str:
    """Render a report in one of config.OUTPUT_FORMATS."""
    if output_format not in config.OUTPUT_FORMATS:
        raise ValueError(f"unknown output format: {output_format}")
    return RENDERERS[output_format](report)
