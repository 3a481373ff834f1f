"""Batch survey pipeline: classify, bound, solve, audit, and optionally
double every graph in a stream, emitting one CSV record per input.

Per-record problems (disconnected or edgeless inputs) are recorded as blank
fields, never abort the stream. A computed W that exceeds an applicable
bound, or a doubling certificate that fails validation, is escalated as an
internal defect instead, because those are correctness bugs. Output is
deterministic: records appear in input order and booleans render as
lowercase true/false.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .bounds import applicable_bounds, audit, best_upper_bound
from .doubling import double_with_certificate
from .errors import InternalInvariantError
from .graph import Graph, classify, write_graph6
from .solver import SearchLimits, SolveStatus, compute_W

CSV_COLUMNS = (
    "graph6",
    "n",
    "m",
    "delta",
    "connected",
    "bipartite",
    "regular_r",
    "triangle_free",
    "W",
    "best_bound",
    "slack",
    "tight_theorems",
    "doubling_ok",
)

NOT_COLORABLE = "not-colorable"
ABORTED = "aborted"


@dataclass(frozen=True)
class SurveyRecord:
    graph6: str
    n: int
    m: int
    delta: int
    connected: bool
    bipartite: bool
    regular_r: int | None
    triangle_free: bool
    w: int | str | None  # int, "not-colorable", "aborted", or None when skipped
    best_bound: int | None
    slack: int | None
    tight_theorems: tuple[str, ...]
    doubling_ok: bool | None


def survey_graph(
    g: Graph, limits: SearchLimits | None = None, with_doubling: bool = False
) -> SurveyRecord:
    limits = limits or SearchLimits()
    cls = classify(g)
    base = dict(
        graph6=write_graph6(g),
        n=g.n,
        m=g.m,
        delta=cls.max_degree,
        connected=cls.connected,
        bipartite=cls.bipartition is not None,
        regular_r=cls.regular_degree,
        triangle_free=cls.triangle_free,
    )
    skipped = SurveyRecord(
        **base, w=None, best_bound=None, slack=None, tight_theorems=(), doubling_ok=None
    )
    if not cls.connected or g.m == 0:
        return skipped
    claims = applicable_bounds(g, cls)
    best = best_upper_bound(g, cls)
    outcome = compute_W(g, limits)
    if outcome.status is SolveStatus.ABORTED:
        return SurveyRecord(
            **base, w=ABORTED, best_bound=best, slack=None, tight_theorems=(), doubling_ok=None
        )
    if outcome.status is SolveStatus.INFEASIBLE:
        return SurveyRecord(
            **base,
            w=NOT_COLORABLE,
            best_bound=best,
            slack=None,
            tight_theorems=(),
            doubling_ok=None,
        )
    w = outcome.w
    assert w is not None and outcome.witness is not None
    report = audit(g, w, claims)
    if report.violations:
        raise InternalInvariantError(
            f"W={w} for {base['graph6']} violates "
            + ", ".join(f"{c.theorem_id} (bound {c.bound})" for c in report.violations)
        )
    slack = best - w
    if slack < 0:
        raise InternalInvariantError(f"negative slack {slack} for {base['graph6']}")
    doubling_ok: bool | None = None
    if with_doubling:
        cert = double_with_certificate(g, outcome.witness)
        doubling_ok = cert.validation.verdict
    return SurveyRecord(
        **base,
        w=w,
        best_bound=best,
        slack=slack,
        tight_theorems=tuple(c.theorem_id for c in claims if c.bound == w),
        doubling_ok=doubling_ok,
    )


def run_survey(
    graphs: Iterable[Graph],
    limits: SearchLimits | None = None,
    with_doubling: bool = False,
) -> Iterator[SurveyRecord]:
    for g in graphs:
        yield survey_graph(g, limits, with_doubling)


def _render(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def record_to_row(rec: SurveyRecord) -> list[str]:
    return [
        rec.graph6,
        str(rec.n),
        str(rec.m),
        str(rec.delta),
        _render(rec.connected),
        _render(rec.bipartite),
        _render(rec.regular_r),
        _render(rec.triangle_free),
        _render(rec.w),
        _render(rec.best_bound),
        _render(rec.slack),
        ";".join(rec.tight_theorems),
        _render(rec.doubling_ok),
    ]


def write_survey_csv(records: Iterable[SurveyRecord], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow(record_to_row(rec))
