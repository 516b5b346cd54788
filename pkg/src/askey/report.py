"""Structured and text renderings of a VerificationReport."""
import json
from pathlib import Path
from typing import Any, Dict, Union

import pandas as pd

from src.askey.models import STATUSES, VerificationReport


REPORT_FIELDS = ("family", "binding", "suite", "check", "n", "status", "reason", "residual")


def report_to_dict(report: VerificationReport) -> Dict[str, Any]:
    """Plain-data form of a report.

    ``wall_time`` is left out so that identical specs give identical documents.
    """
    return {
        "spec": report.spec,
        "bindings": report.bindings,
        "counts": report.counts(),
        "runs": [{key: getattr(run, key) for key in REPORT_FIELDS} for run in report.runs],
    }


def to_json(report: VerificationReport) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2) + "\n"


def runs_frame(report: VerificationReport) -> pd.DataFrame:
    data = []
    for run in report.runs:
        data.append({
            'Family': run.family,
            'Binding': run.binding,
            'Suite': run.suite,
            'Check': run.check,
            'n': run.n,
            'Status': run.status,
            'Reason': run.reason,
            'Seconds': run.wall_time,
        })
    return pd.DataFrame(data, columns=['Family', 'Binding', 'Suite', 'Check', 'n', 'Status', 'Reason', 'Seconds'])


def summary_frame(report: VerificationReport) -> pd.DataFrame:
    """Pass/fail/skipped counts per family and suite."""
    df = runs_frame(report)
    if df.empty:
        return pd.DataFrame(columns=list(STATUSES))
    table = df.groupby(['Family', 'Suite'])['Status'].value_counts().unstack(fill_value=0)
    return table.reindex(columns=list(STATUSES), fill_value=0)


def to_text(report: VerificationReport) -> str:
    """Human-readable table of counts followed by the failing checks."""
    df = runs_frame(report)
    counts = report.counts()
    lines = [
        summary_frame(report).to_string(),
        "",
        f"total: {counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped",
    ]
    failures = df[df['Status'] == 'fail']
    if not failures.empty:
        lines += ["", "failures:", failures[['Family', 'Binding', 'Suite', 'Check', 'n', 'Reason']].to_string(index=False)]
    return "\n".join(lines) + "\n"


def render(report: VerificationReport, fmt: str) -> str:
    if fmt == "structured":
        return to_json(report)
    if fmt == "text":
        return to_text(report)
    raise ValueError(f"format must be text or structured, got {fmt}")


def write_report(report: VerificationReport, path: Union[str, Path], fmt: str = "structured") -> Path:
    path = Path(path)
    path.write_text(render(report, fmt))
    return path
