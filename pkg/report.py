"""
Report payloads and their text/JSON renderings
"""

from typing import List, Literal, Optional

from pydantic import BaseModel

from runner import RunStats
from state import StateSum


class CoeffModel(BaseModel):
    a: int
    b: int
    c: int
    d: int
    h: int
    approx: str


class TermModel(BaseModel):
    coeff: CoeffModel
    vops: List[str]
    edges: List[List[int]]


class ReportModel(BaseModel):
    n: int
    terms: List[TermModel]
    stats: RunStats
    amplitudes: Optional[List[List[str]]] = None
    verified: Optional[bool] = None


class ReportOptions(BaseModel):
    format: Literal["text", "json"] = "text"
    show_stats: bool = False


def build_report(
    sum_: StateSum,
    stats: RunStats,
    amplitudes: Optional[List[List[str]]] = None,
    verified: Optional[bool] = None,
) -> ReportModel:
    return ReportModel(
        n=sum_.n,
        terms=[TermModel(**t.to_dict()) for t in sum_],
        stats=stats,
        amplitudes=amplitudes,
        verified=verified,
    )


def _text(report: ReportModel, show_stats: bool) -> str:
    rows = [("#", "coeff", "vops", "edges")]
    for i, term in enumerate(report.terms, start=1):
        vops = " ".join(w or "I" for w in term.vops)
        edges = " ".join(f"{a}-{b}" for a, b in term.edges) or "-"
        rows.append((str(i), term.coeff.approx, vops, edges))
    widths = [max(len(row[col]) for row in rows) for col in range(3)]
    lines = [f"qubits: {report.n}  terms: {len(report.terms)}", ""]
    for row in rows:
        cells = [row[col].ljust(widths[col]) for col in range(3)] + [row[3]]
        lines.append("  ".join(cells).rstrip())

    stats = report.stats
    lines += [
        "",
        f"final terms:   {stats.final_terms}",
        f"peak terms:    {stats.peak_terms}",
        f"merges:        {stats.merges}",
        f"cancellations: {stats.cancellations}",
    ]
    if show_stats:
        lines += [
            f"avg degree:    {stats.average_degree:.3f}",
            f"wall time:     {stats.wall_time:.6f}s",
            f"clifford gates: {stats.clifford_gates}",
            f"c3 gates:      {stats.c3_gates}",
        ]
    if report.amplitudes is not None:
        lines += ["", "amplitudes:"]
        width = len(str(len(report.amplitudes) - 1))
        for index, (re, im) in enumerate(report.amplitudes):
            lines.append(f"  {index:>{width}}  {re} {im}")
    if report.verified is not None:
        lines += ["", f"verified: {'yes' if report.verified else 'NO'}"]
    return "\n".join(lines)


def emit_report(
    sum_: StateSum,
    stats: RunStats,
    opts: ReportOptions = None,
    amplitudes: Optional[List[List[str]]] = None,
    verified: Optional[bool] = None,
) -> str:
    opts = opts or ReportOptions()
    report = build_report(sum_, stats, amplitudes, verified)
    if opts.format == "json":
        return report.model_dump_json(indent=2, exclude_none=True)
    return _text(report, opts.show_stats)
