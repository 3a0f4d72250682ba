"""
Results Output
CSV and JSON emission of experiment tables plus the HTML summary report
"""

import csv
import json
import os
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from jinja2 import Template
from robot.api import logger

__all__ = ['write_rows_csv', 'read_csv_rows', 'write_json', 'write_rows', 'experiment_payload',
           'write_experiment', 'render_html_report']

REPORT_TEMPLATE = Template("""<!DOCTYPE html>
<html lang="en">
<head>
    <meta charset="UTF-8">
    <title>Matching Experiment Report - {{ generated }}</title>
    <style>
        body { font-family: 'Segoe UI', Tahoma, Geneva, Verdana, sans-serif; background: #f5f7fa; color: #333; }
        .container { max-width: 1400px; margin: 0 auto; padding: 20px; }
        header { background: linear-gradient(135deg, #667eea 0%, #764ba2 100%); color: white;
                 padding: 30px; border-radius: 10px; margin-bottom: 30px; }
        .stats-grid { display: grid; grid-template-columns: repeat(auto-fit, minmax(200px, 1fr)); gap: 20px; }
        .stat-card { background: white; padding: 25px; border-radius: 10px; text-align: center;
                     border-top: 4px solid #667eea; }
        .stat-card .value { font-size: 2em; font-weight: bold; color: #667eea; }
        .section { background: white; padding: 25px; border-radius: 10px; margin-top: 30px; }
        table { border-collapse: collapse; width: 100%; }
        th, td { padding: 6px 12px; border-bottom: 1px solid #e5e7eb; text-align: right; }
        th:first-child, td:first-child { text-align: left; }
        .footer { text-align: center; color: #999; margin-top: 30px; font-size: 0.9em; }
    </style>
</head>
<body>
<div class="container">
    <header>
        <h1>Online Matching Experiment</h1>
        <div class="meta">Generated {{ generated }} | generator {{ generator.name }} | predictor {{ predictor.name }}
            | master seed {{ master_seed }}</div>
    </header>

    <div class="stats-grid">
        <div class="stat-card"><div>Trials</div><div class="value">{{ trials|length }}</div></div>
        {% for row in summary %}
        <div class="stat-card"><div>{{ row.algorithm }}</div>
            <div class="value">{{ "%.4f"|format(row.mean_ratio) }}</div>
            <div>&plusmn; {{ "%.4f"|format(row.std_ratio) }}</div></div>
        {% endfor %}
    </div>

    <div class="section">
        <h2>Parameters</h2>
        <table>
            {% for key, value in generator.items() %}<tr><td>generator.{{ key }}</td><td>{{ value }}</td></tr>{% endfor %}
            {% for key, value in predictor.items() %}<tr><td>predictor.{{ key }}</td><td>{{ value }}</td></tr>{% endfor %}
        </table>
    </div>

    <div class="section">
        <h2>Summary</h2>
        <table>
            <tr><th>algorithm</th><th>mean ratio</th><th>std ratio</th><th>mean size</th><th>mean max matching</th></tr>
            {% for row in summary %}
            <tr><td>{{ row.algorithm }}</td><td>{{ "%.4f"|format(row.mean_ratio) }}</td>
                <td>{{ "%.4f"|format(row.std_ratio) }}</td><td>{{ "%.2f"|format(row.mean_size) }}</td>
                <td>{{ "%.2f"|format(row.mean_max_matching) }}</td></tr>
            {% endfor %}
        </table>
    </div>

    <div class="section">
        <h2>Trials</h2>
        <table>
            <tr>{% for column in columns %}<th>{{ column }}</th>{% endfor %}</tr>
            {% for row in trials %}
            <tr>{% for column in columns %}<td>{{ row[column] }}</td>{% endfor %}</tr>
            {% endfor %}
        </table>
    </div>

    <div class="footer"><p>Generated by the matching experiment harness</p></div>
</div>
</body>
</html>
""")


def _format_value(value: Any) -> Any:
    if isinstance(value, float):
        return format(value, '.17g')
    return value


def _columns(rows: Sequence[Dict[str, Any]]) -> List[str]:
    columns: List[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    return columns


def _prepare(path) -> Path:
    target = Path(path)
    if target.parent and not target.parent.exists():
        os.makedirs(target.parent, exist_ok=True)
    return target


def write_rows_csv(rows: Sequence[Dict[str, Any]], path, columns: Optional[Sequence[str]] = None) -> Path:
    """
    Write rows as CSV with a header row.

    Floats are written with 17 significant digits so read_csv_rows returns
    the identical values.

    Args:
        rows: Row dictionaries
        path: Output file
        columns: Column order (first-seen key order if None)

    Returns:
        Path of the written file
    """
    target = _prepare(path)
    columns = list(columns) if columns else _columns(rows)
    with open(target, 'w', newline='', encoding='utf-8') as f:
        writer = csv.DictWriter(f, fieldnames=columns, extrasaction='ignore')
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _format_value(row.get(key, '')) for key in columns})
    logger.info(f"Wrote {len(rows)} rows to {target}")
    return target


def _parse_cell(text: str) -> Any:
    if text == '':
        return None
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def read_csv_rows(path) -> List[Dict[str, Any]]:
    """
    Reload a table written by write_rows_csv.

    Integers come back as int, other numbers as float, empty cells as None.

    Args:
        path: CSV file

    Returns:
        Row dictionaries in file order
    """
    with open(path, 'r', newline='', encoding='utf-8') as f:
        return [{key: _parse_cell(value) for key, value in row.items()} for row in csv.DictReader(f)]


def write_json(payload: Any, path) -> Path:
    """
    Write a JSON document (per-trial records, summaries).

    Args:
        payload: JSON-serializable object
        path: Output file

    Returns:
        Path of the written file
    """
    target = _prepare(path)
    with open(target, 'w', encoding='utf-8') as f:
        json.dump(payload, f, indent=2)
    logger.info(f"JSON written: {target}")
    return target


def write_rows(rows: Sequence[Dict[str, Any]], path, output_format: str = 'csv',
               columns: Optional[Sequence[str]] = None) -> Path:
    """Write rows in the configured output format."""
    if output_format == 'json':
        return write_json(list(rows), path)
    return write_rows_csv(rows, path, columns)


def experiment_payload(result) -> Dict[str, Any]:
    """JSON document of an ExperimentResult: configuration, summary and per-trial records."""
    cfg = result.config
    return {
        'generator': cfg.generator,
        'predictor': cfg.predictor,
        'algorithms': list(cfg.algorithms),
        'master_seed': cfg.master_seed,
        'trials': [trial.as_row() for trial in result.trials],
        'summary': result.summary_rows(),
    }


def write_experiment(result, path, output_format: str = 'csv') -> Path:
    """
    Write an ExperimentResult: per-trial rows as CSV, or the full payload as JSON.

    Args:
        result: ExperimentResult
        path: Output file
        output_format: "csv" or "json"

    Returns:
        Path of the written file
    """
    if output_format == 'json':
        return write_json(experiment_payload(result), path)
    return write_rows_csv([trial.as_row() for trial in result.trials], path)


def render_html_report(result, path) -> Path:
    """
    Render the HTML summary of an ExperimentResult.

    Args:
        result: ExperimentResult
        path: Output HTML file

    Returns:
        Path of the written report
    """
    trials = [trial.as_row() for trial in result.trials]
    html = REPORT_TEMPLATE.render(
        generated=datetime.now().strftime('%Y-%m-%d %H:%M'),
        generator=result.config.generator,
        predictor=result.config.predictor,
        master_seed=result.config.master_seed,
        summary=result.summary_rows(),
        trials=trials,
        columns=_columns(trials),
    )
    target = _prepare(path)
    with open(target, 'w', encoding='utf-8') as f:
        f.write(html)
    logger.info(f"HTML report generated: {target}")
    return target
