"""Bipartite doubling: lift an interval t-coloring to an interval (t+2)-coloring.

Given a connected graph G on vertices v_0..v_{n-1} with an interval
t-coloring alpha, the auxiliary graph H lives on 2n vertices: the bipartite
double cover of G (u_i adjacent to w_j whenever v_i v_j is an edge) plus the
perfect matching u_i w_i. Vertex numbering is fixed: u_i = i, w_i = n + i.

The lifted coloring beta gives both cover copies of an edge its alpha color
plus one, and gives the matching edge at i the color max S(v_i, alpha) + 2;
beta therefore uses colors 2..t+2 and satisfies
min S(u_i, beta) = min S(w_i, beta) for every i. Recoloring one matching
edge whose endpoints have minimum spectrum 2 with the color 1 (the smallest
such index is chosen, for reproducibility) yields an interval
(t+2)-coloring of H. Every step is re-validated; a failure is raised as an
internal defect because the construction cannot fail on valid input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    EdgeColoring,
    ValidationReport,
    coloring_to_json,
    validate_interval,
    validation_report_to_json,
)
from .errors import DomainError, InternalInvariantError, InvalidColoringError
from .graph import Graph, is_connected, write_graph6


@dataclass(frozen=True)
class CrossEdge:
    """Cover copy of source edge (v_i, v_j): u_i w_j, or u_j w_i when flipped."""

    source_index: int
    flipped: bool


@dataclass(frozen=True)
class MatchingEdge:
    vertex: int


@dataclass(frozen=True)
class DoublingResult:
    h: Graph
    u_map: tuple[int, ...]
    w_map: tuple[int, ...]
    edge_provenance: tuple[CrossEdge | MatchingEdge, ...]  # aligned with h.edges


@dataclass(frozen=True)
class DoublingCertificate:
    g: Graph
    alpha: EdgeColoring
    result: DoublingResult
    beta: EdgeColoring
    chosen_i0: int
    final: EdgeColoring
    validation: ValidationReport


def double_graph(g: Graph) -> DoublingResult:
    """Build H = double cover of g plus the identity matching, with checks."""
    if g.m == 0:
        raise DomainError("doubling requires at least one edge")
    if not is_connected(g):
        raise DomainError("doubling requires a connected graph")
    n = g.n
    provenance: dict[tuple[int, int], CrossEdge | MatchingEdge] = {}
    for idx, (i, j) in enumerate(g.edges):
        provenance[(i, n + j)] = CrossEdge(idx, flipped=False)
        provenance[(j, n + i)] = CrossEdge(idx, flipped=True)
    for i in range(n):
        provenance[(i, n + i)] = MatchingEdge(i)
    h = Graph(2 * n, tuple(provenance))
    result = DoublingResult(
        h=h,
        u_map=tuple(range(n)),
        w_map=tuple(range(n, 2 * n)),
        edge_provenance=tuple(provenance[e] for e in h.edges),
    )
    _check_structure(g, result)
    return result


def _check_structure(g: Graph, d: DoublingResult) -> None:
    h = d.h
    n = g.n
    if h.n != 2 * n:
        raise InternalInvariantError(f"|V(H)| = {h.n}, expected {2 * n}")
    if h.m != 2 * g.m + n:
        raise InternalInvariantError(f"|E(H)| = {h.m}, expected {2 * g.m + n}")
    for a, b in h.edges:
        if not (a < n <= b):
            raise InternalInvariantError(f"edge ({a}, {b}) does not cross the U/W parts")
    if not is_connected(h):
        raise InternalInvariantError("H is disconnected for a connected source graph")
    g_degs = set(g.degrees())
    if len(g_degs) == 1:
        r = g_degs.pop()
        h_degs = set(h.degrees())
        if h_degs != {r + 1}:
            raise InternalInvariantError(
                f"H of an {r}-regular graph has degrees {sorted(h_degs)}, expected {r + 1}"
            )


def lift_coloring(g: Graph, alpha: EdgeColoring, d: DoublingResult) -> EdgeColoring:
    """Lift alpha to beta on H; beta uses colors 2..t+2 with palette t+2."""
    report = validate_interval(g, alpha)
    if not report.verdict:
        raise InvalidColoringError(
            f"source coloring is not a valid interval coloring: {[f.detail for f in report.failures]}"
        )
    max_spectrum = [0] * g.n
    for idx, (i, j) in enumerate(g.edges):
        c = alpha.colors[idx]
        max_spectrum[i] = max(max_spectrum[i], c)
        max_spectrum[j] = max(max_spectrum[j], c)
    colors = []
    for prov in d.edge_provenance:
        if isinstance(prov, CrossEdge):
            colors.append(alpha.colors[prov.source_index] + 1)
        else:
            colors.append(max_spectrum[prov.vertex] + 2)
    return EdgeColoring(alpha.t + 2, tuple(colors))


def finalize_recolor(
    d: DoublingResult, beta: EdgeColoring, t: int
) -> tuple[int, EdgeColoring]:
    """Recolor the matching edge of the smallest index whose minimum spectrum
    is 2 with the color 1, completing the interval (t+2)-coloring."""
    h = d.h
    n = len(d.u_map)
    candidates = []
    for i in range(n):
        u_min = min(beta.colors[k] for k in h.incidence[i])
        w_min = min(beta.colors[k] for k in h.incidence[n + i])
        if u_min != w_min:
            raise InternalInvariantError(
                f"lifted coloring has min spectrum {u_min} at u_{i} but {w_min} at w_{i}"
            )
        if u_min == 2:
            candidates.append(i)
    if not candidates:
        raise InternalInvariantError("no matching edge with minimum spectrum 2 exists")
    i0 = min(candidates)
    matching_index = next(
        k for k, prov in enumerate(d.edge_provenance)
        if isinstance(prov, MatchingEdge) and prov.vertex == i0
    )
    colors = list(beta.colors)
    colors[matching_index] = 1
    final = EdgeColoring(t + 2, tuple(colors))
    report = validate_interval(h, final)
    if not report.verdict:
        raise InternalInvariantError(
            f"recolored lift fails validation: {[f.detail for f in report.failures]}"
        )
    return i0, final


def double_with_certificate(g: Graph, alpha: EdgeColoring) -> DoublingCertificate:
    """Full pipeline: build H, lift, recolor, validate, package."""
    d = double_graph(g)
    beta = lift_coloring(g, alpha, d)
    i0, final = finalize_recolor(d, beta, alpha.t)
    validation = validate_interval(d.h, final)
    if not validation.verdict:
        raise InternalInvariantError(
            "certificate validation failed: "
            + "; ".join(f.detail for f in validation.failures)
        )
    return DoublingCertificate(
        g=g, alpha=alpha, result=d, beta=beta, chosen_i0=i0, final=final, validation=validation
    )


def _provenance_to_json(prov: CrossEdge | MatchingEdge) -> dict:
    if isinstance(prov, CrossEdge):
        return {"kind": "cross", "source_index": prov.source_index, "flipped": prov.flipped}
    return {"kind": "matching", "vertex": prov.vertex}


def certificate_to_json(cert: DoublingCertificate) -> dict:
    """Self-contained document a third party can re-verify mechanically."""
    return {
        "g": {"graph6": write_graph6(cert.g)},
        "alpha": coloring_to_json(cert.g, cert.alpha),
        "h": {"graph6": write_graph6(cert.result.h)},
        "u_map": list(cert.result.u_map),
        "w_map": list(cert.result.w_map),
        "edge_provenance": [_provenance_to_json(p) for p in cert.result.edge_provenance],
        "beta": coloring_to_json(cert.result.h, cert.beta),
        "chosen_i0": cert.chosen_i0,
        "final": coloring_to_json(cert.result.h, cert.final),
        "validation": validation_report_to_json(cert.validation),
    }
