"""Edge colorings, vertex spectra, and the interval-coloring validity check.

A coloring with declared palette size t is *valid* when three conditions
hold: adjacent edges carry distinct colors, the colors at each vertex of
positive degree form a set of consecutive integers whose size equals the
degree, and every color in 1..t appears on some edge. Degree-0 vertices
impose no constraint, which keeps the validator total on subgraphs and
certificates even though the solver itself rejects edgeless graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ParseError
from .graph import Graph


@dataclass(frozen=True)
class EdgeColoring:
    """One positive color per edge, indexed like ``Graph.edges``, plus t."""

    t: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError(f"palette size must be >= 1, got {self.t}")
        object.__setattr__(self, "colors", tuple(self.colors))
        for k, c in enumerate(self.colors):
            if not 1 <= c <= self.t:
                raise ValueError(f"color {c} at edge index {k} outside 1..{self.t}")


@dataclass(frozen=True)
class VertexSpectrum:
    colors: tuple[int, ...]  # sorted, distinct
    lo: int | None
    hi: int | None


@dataclass(frozen=True)
class SpectrumReport:
    vertices: tuple[VertexSpectrum, ...]
    used_colors: tuple[int, ...]


@dataclass(frozen=True)
class Failure:
    kind: str  # "proper" | "interval" | "surjective"
    subject: int  # vertex for proper/interval, color for surjective
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    proper: bool
    interval_at_every_vertex: bool
    surjective: bool
    verdict: bool
    failures: tuple[Failure, ...]


def _check_sized(g: Graph, c: EdgeColoring) -> None:
    if len(c.colors) != g.m:
        raise DomainError(f"coloring has {len(c.colors)} colors but graph has {g.m} edges")


def incident_colors(g: Graph, c: EdgeColoring, v: int) -> tuple[int, ...]:
    """Raw multiset of colors on edges at v, in canonical edge order."""
    _check_sized(g, c)
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} out of range for n={g.n}")
    return tuple(c.colors[k] for k in g.incidence[v])


def spectrum(g: Graph, c: EdgeColoring, v: int) -> tuple[int, ...]:
    """Sorted distinct colors at v; duplicates collapse here and are flagged
    as proper-coloring collisions by the validator instead."""
    return tuple(sorted(set(incident_colors(g, c, v))))


def spectrum_report(g: Graph, c: EdgeColoring) -> SpectrumReport:
    _check_sized(g, c)
    per_vertex = []
    for v in range(g.n):
        s = tuple(sorted({c.colors[k] for k in g.incidence[v]}))
        per_vertex.append(VertexSpectrum(s, s[0] if s else None, s[-1] if s else None))
    used = tuple(sorted(set(c.colors)))
    return SpectrumReport(tuple(per_vertex), used)


def validate_interval(g: Graph, c: EdgeColoring) -> ValidationReport:
    """Full validity check; failures accumulate instead of short-circuiting."""
    _check_sized(g, c)
    failures: list[Failure] = []
    proper = True
    interval_ok = True
    for v in range(g.n):
        raw = [c.colors[k] for k in g.incidence[v]]
        if not raw:
            continue
        distinct = sorted(set(raw))
        if len(distinct) < len(raw):
            proper = False
            dupes = sorted({x for x in distinct if raw.count(x) > 1})
            failures.append(Failure("proper", v, f"repeated colors {dupes} at vertex {v}"))
        deg = len(raw)
        lo, hi = distinct[0], distinct[-1]
        if len(distinct) != deg or hi - lo + 1 != deg:
            interval_ok = False
            failures.append(
                Failure(
                    "interval",
                    v,
                    f"spectrum {distinct} at vertex {v} is not {deg} consecutive integers",
                )
            )
    used = set(c.colors)
    surjective = True
    for color in range(1, c.t + 1):
        if color not in used:
            surjective = False
            failures.append(Failure("surjective", color, f"color {color} is unused"))
    verdict = proper and interval_ok and surjective
    return ValidationReport(proper, interval_ok, surjective, verdict, tuple(failures))


# --------------------------------------------------------------------------
# JSON coloring document: {"t": T, "edges": [{"u": i, "v": j, "color": c}, ...]}
# --------------------------------------------------------------------------


def coloring_to_json(g: Graph, c: EdgeColoring) -> dict:
    _check_sized(g, c)
    return {
        "t": c.t,
        "edges": [
            {"u": i, "v": j, "color": color} for (i, j), color in zip(g.edges, c.colors)
        ],
    }


def coloring_from_json(g: Graph, doc: dict) -> EdgeColoring:
    """Accepts edges in any order but requires exactly the graph's edge set."""
    if not isinstance(doc, dict) or "t" not in doc or "edges" not in doc:
        raise ParseError("coloring document must have 't' and 'edges' keys")
    t = doc["t"]
    if not isinstance(t, int):
        raise ParseError(f"'t' must be an integer, got {t!r}")
    assigned: dict[tuple[int, int], int] = {}
    for k, entry in enumerate(doc["edges"]):
        try:
            u, v, color = entry["u"], entry["v"], entry["color"]
        except (TypeError, KeyError):
            raise ParseError(f"edge entry {k} must have 'u', 'v', 'color'") from None
        if not all(isinstance(x, int) for x in (u, v, color)):
            raise ParseError(f"edge entry {k} has non-integer fields")
        pair = (u, v) if u < v else (v, u)
        if pair in assigned:
            raise ParseError(f"duplicate edge {pair} in coloring document")
        assigned[pair] = color
    edge_set = set(g.edges)
    missing = [e for e in g.edges if e not in assigned]
    unknown = [e for e in assigned if e not in edge_set]
    if missing or unknown:
        raise ParseError(f"edge set mismatch: missing {missing}, unknown {unknown}")
    colors = tuple(assigned[e] for e in g.edges)
    try:
        return EdgeColoring(t, colors)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def validation_report_to_json(report: ValidationReport) -> dict:
    return {
        "proper": report.proper,
        "interval_at_every_vertex": report.interval_at_every_vertex,
        "surjective": report.surjective,
        "verdict": report.verdict,
        "failures": [
            {"kind": f.kind, "subject": f.subject, "detail": f.detail} for f in report.failures
        ],
    }
