# chromapath/reports.py — tabular summaries of verification reports
from __future__ import annotations
import json
from pathlib import Path
from typing import Iterable, List

import pandas as pd

from chromapath.harness import VerificationReport

COLUMNS = ["campaign", "passed", "orders", "classes", "samples", "seed",
           "failures", "observations", "elapsed_ms"]


def summary_frame(reports: Iterable[VerificationReport], timing: bool = True) -> pd.DataFrame:
    """
    One row per campaign. elapsed_ms is left empty when timing is off so the
    table stays identical between runs with the same seed.
    """
    rows = []
    for r in reports:
        rows.append({
            "campaign": r.campaign,
            "passed": r.passed,
            "orders": ",".join(str(n) for n in r.scope.get("orders", [])),
            "classes": r.scope.get("classes", 0),
            "samples": r.scope.get("samples", 0),
            "seed": r.scope.get("seed"),
            "failures": len(r.failures),
            "observations": len(r.observations),
            "elapsed_ms": r.elapsed_ms if timing else None,
        })
    return pd.DataFrame(rows, columns=COLUMNS)


def format_text(report: VerificationReport, timing: bool = True) -> str:
    lines = [summary_frame([report], timing).to_string(index=False)]
    for title, entries in (("failures", report.failures), ("observations", report.observations)):
        if not entries:
            continue
        lines.append("")
        lines.append(f"{title}:")
        details = pd.Series([e["detail"] for e in entries]).value_counts()
        for detail, count in details.items():
            lines.append(f"  {count:>5}  {detail}")
    return "\n".join(lines)


def save_reports(reports: List[VerificationReport], out_dir: Path, timing: bool = True) -> Path:
    """Write <campaign>.json per report plus summary.csv; returns the csv path."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for r in reports:
        with open(out_dir / f"{r.campaign}.json", "w", encoding="utf-8") as f:
            json.dump(r.to_json(timing), f, indent=2, sort_keys=True)
    csv = out_dir / "summary.csv"
    summary_frame(reports, timing).to_csv(csv, index=False)
    return csv


def load_report(path: Path) -> VerificationReport:
    with open(path, "r", encoding="utf-8") as f:
        data = json.load(f)
    return VerificationReport(data["campaign"], data["scope"], data.get("failures", []),
                              data.get("observations", []), data.get("elapsed_ms"))
