"""Exact decision and optimization for interval colorings.

``find_interval_coloring`` decides one palette size t by backtracking;
``compute_W`` finds the maximum feasible t by iterating downward from the
tightest registered upper bound; ``brute_force_W`` is the testing oracle
that literally enumerates every assignment of colors to edges.

Search strategy (deterministic): edges are ordered by a breadth-first
traversal from a maximum-degree vertex (ties broken by lowest vertex index)
so consecutive edges share endpoints; colors are tried ascending. Pruning at
every assignment, per endpoint v: colors at v stay distinct, their spread
(max - min + 1) stays within deg(v), and some window of deg(v) consecutive
colors containing them still fits inside [1, t]. Globally, a branch is cut
when fewer uncolored edges remain than colors not yet used anywhere.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import bounds as bounds_mod
from .coloring import EdgeColoring, coloring_to_json, validate_interval
from .errors import DomainError, InternalInvariantError
from .graph import Graph, classify, is_connected


class SolveStatus(Enum):
    FOUND = "found"
    INFEASIBLE = "infeasible"
    ABORTED = "aborted"


@dataclass(frozen=True)
class SearchLimits:
    """node_limit caps backtracking nodes (0 = unlimited); t_override caps
    the palette sizes compute_W will consider."""

    node_limit: int = 0
    t_override: int | None = None

    def __post_init__(self) -> None:
        if self.node_limit < 0:
            raise ValueError(f"node_limit must be >= 0, got {self.node_limit}")


@dataclass(frozen=True)
class SolveOutcome:
    status: SolveStatus
    witness: EdgeColoring | None = None
    nodes_expanded: int = 0
    w: int | None = None
    interval_colorable: bool | None = None
    feasible_t_set: tuple[int, ...] = ()
    last_explored_t: int | None = None


class _Abort(Exception):
    pass


def _bfs_edge_order(g: Graph) -> list[int]:
    degs = g.degrees()
    delta = max(degs)
    start = min(v for v in range(g.n) if degs[v] == delta)
    edge_idx = g.edge_index()
    order: list[int] = []
    edge_seen = [False] * g.m
    visited = [False] * g.n
    visited[start] = True
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            eid = edge_idx[(u, v) if u < v else (v, u)]
            if not edge_seen[eid]:
                edge_seen[eid] = True
                order.append(eid)
            if not visited[v]:
                visited[v] = True
                queue.append(v)
    return order


def _require_solvable_input(g: Graph) -> None:
    if g.m == 0:
        raise DomainError("graph has no edges; an interval coloring needs at least color 1")
    if not is_connected(g):
        raise DomainError("graph is disconnected")


def _search(g: Graph, t: int, node_budget: int) -> tuple[SolveStatus, list[int] | None, int]:
    """Exhaustive backtracking for one t. Returns (status, colors, nodes)."""
    n, m = g.n, g.m
    order = _bfs_edge_order(g)
    ends = [g.edges[eid] for eid in order]
    deg = g.degrees()
    inf = t + 2
    lo = [inf] * n
    hi = [0] * n
    mask = [0] * n
    color_count = [0] * (t + 1)
    assignment = [0] * m
    state = {"nodes": 0}

    def dfs(k: int, unused: int, remaining: int) -> bool:
        if k == m:
            return True
        eid = order[k]
        a, b = ends[k]
        deg_a, deg_b = deg[a], deg[b]
        mask_a, mask_b = mask[a], mask[b]
        lo_a, hi_a = lo[a], hi[a]
        lo_b, hi_b = lo[b], hi[b]
        for c in range(1, t + 1):
            if (mask_a >> c) & 1 or (mask_b >> c) & 1:
                continue
            nl_a = c if c < lo_a else lo_a
            nh_a = c if c > hi_a else hi_a
            if nh_a - nl_a + 1 > deg_a:
                continue
            if max(1, nh_a - deg_a + 1) > min(nl_a, t - deg_a + 1):
                continue
            nl_b = c if c < lo_b else lo_b
            nh_b = c if c > hi_b else hi_b
            if nh_b - nl_b + 1 > deg_b:
                continue
            if max(1, nh_b - deg_b + 1) > min(nl_b, t - deg_b + 1):
                continue
            fresh = color_count[c] == 0
            next_unused = unused - 1 if fresh else unused
            if remaining - 1 < next_unused:
                continue
            if node_budget and state["nodes"] >= node_budget:
                raise _Abort
            state["nodes"] += 1
            mask[a] = mask_a | (1 << c)
            mask[b] = mask_b | (1 << c)
            lo[a], hi[a] = nl_a, nh_a
            lo[b], hi[b] = nl_b, nh_b
            color_count[c] += 1
            assignment[eid] = c
            if dfs(k + 1, next_unused, remaining - 1):
                return True
            color_count[c] -= 1
            mask[a], mask[b] = mask_a, mask_b
            lo[a], hi[a] = lo_a, hi_a
            lo[b], hi[b] = lo_b, hi_b
        return False

    try:
        found = dfs(0, t, m)
    except _Abort:
        return SolveStatus.ABORTED, None, state["nodes"]
    if found:
        return SolveStatus.FOUND, assignment, state["nodes"]
    return SolveStatus.INFEASIBLE, None, state["nodes"]


def find_interval_coloring(g: Graph, t: int, limits: SearchLimits | None = None) -> SolveOutcome:
    """Decide whether g has an interval t-coloring; exhaustive unless aborted."""
    limits = limits or SearchLimits()
    _require_solvable_input(g)
    delta = g.max_degree
    if not delta <= t <= g.m:
        raise DomainError(f"t={t} outside the feasible range [{delta}, {g.m}]")
    status, colors, nodes = _search(g, t, limits.node_limit)
    if status is SolveStatus.ABORTED:
        return SolveOutcome(SolveStatus.ABORTED, nodes_expanded=nodes)
    if status is SolveStatus.INFEASIBLE:
        return SolveOutcome(SolveStatus.INFEASIBLE, nodes_expanded=nodes)
    witness = EdgeColoring(t, tuple(colors))
    if not validate_interval(g, witness).verdict:
        raise InternalInvariantError(f"search returned a non-validating witness for t={t}")
    return SolveOutcome(
        SolveStatus.FOUND,
        witness=witness,
        nodes_expanded=nodes,
        interval_colorable=True,
        feasible_t_set=(t,),
    )


def compute_W(g: Graph, limits: SearchLimits | None = None) -> SolveOutcome:
    """Maximum feasible palette size, or proof that none exists.

    Iterates t downward from min(|E|, tightest theorem bound) to the maximum
    degree; the first feasible t is W. The node budget, when set, is shared
    across the whole descent; on exhaustion the outcome reports the last t
    that was fully decided.
    """
    limits = limits or SearchLimits()
    _require_solvable_input(g)
    cls = classify(g)
    cutoff = bounds_mod.best_upper_bound(g, cls, planar_asserted=False)
    if limits.t_override is not None:
        cutoff = min(cutoff, limits.t_override)
    delta = g.max_degree
    total_nodes = 0
    last_explored: int | None = None
    for t in range(cutoff, delta - 1, -1):
        remaining_budget = 0
        if limits.node_limit:
            remaining_budget = limits.node_limit - total_nodes
            if remaining_budget <= 0:
                return SolveOutcome(
                    SolveStatus.ABORTED,
                    nodes_expanded=total_nodes,
                    last_explored_t=last_explored,
                )
        status, colors, nodes = _search(g, t, remaining_budget)
        total_nodes += nodes
        if status is SolveStatus.ABORTED:
            return SolveOutcome(
                SolveStatus.ABORTED,
                nodes_expanded=total_nodes,
                last_explored_t=last_explored,
            )
        last_explored = t
        if status is SolveStatus.FOUND:
            witness = EdgeColoring(t, tuple(colors))
            if not validate_interval(g, witness).verdict:
                raise InternalInvariantError(f"search returned a non-validating witness for t={t}")
            return SolveOutcome(
                SolveStatus.FOUND,
                witness=witness,
                nodes_expanded=total_nodes,
                w=t,
                interval_colorable=True,
                feasible_t_set=(t,),
                last_explored_t=t,
            )
    return SolveOutcome(
        SolveStatus.INFEASIBLE,
        nodes_expanded=total_nodes,
        interval_colorable=False,
        feasible_t_set=(),
        last_explored_t=last_explored,
    )


# --------------------------------------------------------------------------
# Exhaustive oracle. Enumerates all t^|E| assignments for every t <= t_max,
# so it shares no logic with the backtracking path. Assignments are scanned
# in ascending mixed-radix order (edge 0 most significant); chunks are
# aligned so the low-order digit block is built once per t, the surjectivity
# test runs as a single vector pass, and the per-vertex checks only touch
# surviving rows.
# --------------------------------------------------------------------------

_ORACLE_EDGE_LIMIT = 10
_ORACLE_T_LIMIT = 8
_CHUNK_ROWS = 1 << 19

_POPCOUNT = np.array([bin(x).count("1") for x in range(1 << (_ORACLE_T_LIMIT + 1))], dtype=np.uint8)


def _interval_rows(g: Graph, colors: np.ndarray) -> np.ndarray:
    """Rows whose every positive-degree vertex sees deg distinct consecutive
    colors (surjectivity is checked by the caller)."""
    keep = np.ones(colors.shape[0], dtype=bool)
    one = np.uint16(1)
    for v in range(g.n):
        inc = g.incidence[v]
        d = len(inc)
        if d == 0:
            continue
        sub = colors[:, inc]
        vmask = np.zeros(colors.shape[0], dtype=np.uint16)
        for col in range(d):
            vmask |= one << sub[:, col].astype(np.uint16)
        keep &= (_POPCOUNT[vmask] == d) & ((sub.max(axis=1) - sub.min(axis=1) + 1) == d)
        if not keep.any():
            break
    return keep


def _scan_palette(g: Graph, t: int) -> tuple[int, tuple[int, ...] | None]:
    """Scan all t^m assignments for one t; returns (rows scanned, first valid)."""
    m = g.m
    k0 = 0
    while k0 < m and t ** (k0 + 1) <= _CHUNK_ROWS:
        k0 += 1
    low_n = t**k0
    idx = np.arange(low_n, dtype=np.int64)
    low = np.empty((low_n, k0), dtype=np.uint8)
    for col in range(k0):
        low[:, col] = (idx // (t ** (k0 - 1 - col))) % t
    low += 1
    one = np.uint16(1)
    low_or = np.zeros(low_n, dtype=np.uint16)
    for col in range(k0):
        low_or |= one << low[:, col].astype(np.uint16)
    mh = m - k0
    full = np.uint16((1 << (t + 1)) - 2)
    scanned = 0
    for h in range(t**mh):
        rest, digits = h, []
        for _ in range(mh):
            digits.append(rest % t + 1)
            rest //= t
        digits.reverse()
        high_or = 0
        for d in digits:
            high_or |= 1 << d
        scanned += low_n
        alive = np.flatnonzero((low_or | np.uint16(high_or)) == full)
        if alive.size == 0:
            continue
        sub = np.empty((alive.size, m), dtype=np.uint8)
        for col, d in enumerate(digits):
            sub[:, col] = d
        sub[:, mh:] = low[alive]
        hits = np.flatnonzero(_interval_rows(g, sub))
        if hits.size:
            return scanned, tuple(int(x) for x in sub[hits[0]])
    return scanned, None


def brute_force_W(g: Graph, t_max: int) -> SolveOutcome:
    """Testing oracle: full enumeration of assignments E -> [1, t] per t.

    Guarded at |E| <= 10 and t_max <= 8 because the enumeration is t_max^|E|.
    Returns the maximum feasible t together with the whole feasible t-set.
    """
    if g.m > _ORACLE_EDGE_LIMIT:
        raise DomainError(f"brute force refuses |E|={g.m} > {_ORACLE_EDGE_LIMIT}")
    if not 1 <= t_max <= _ORACLE_T_LIMIT:
        raise DomainError(f"brute force refuses t_max={t_max} outside 1..{_ORACLE_T_LIMIT}")
    if g.m == 0:
        return SolveOutcome(SolveStatus.INFEASIBLE, interval_colorable=False)
    nodes = 0
    feasible: list[int] = []
    witnesses: dict[int, tuple[int, ...]] = {}
    for t in range(1, t_max + 1):
        scanned, witness_colors = _scan_palette(g, t)
        nodes += scanned
        if witness_colors is not None:
            feasible.append(t)
            witnesses[t] = witness_colors
    if not feasible:
        return SolveOutcome(
            SolveStatus.INFEASIBLE,
            nodes_expanded=nodes,
            interval_colorable=False,
            feasible_t_set=(),
        )
    w = max(feasible)
    witness = EdgeColoring(w, witnesses[w])
    if not validate_interval(g, witness).verdict:
        raise InternalInvariantError("brute force accepted a non-validating assignment")
    return SolveOutcome(
        SolveStatus.FOUND,
        witness=witness,
        nodes_expanded=nodes,
        w=w,
        interval_colorable=True,
        feasible_t_set=tuple(feasible),
    )


def outcome_to_json(outcome: SolveOutcome, g: Graph) -> dict:
    witness_doc = None
    if outcome.witness is not None:
        witness_doc = coloring_to_json(g, outcome.witness)
    return {
        "status": outcome.status.value,
        "witness": witness_doc,
        "nodes_expanded": outcome.nodes_expanded,
        "W": outcome.w,
        "interval_colorable": outcome.interval_colorable,
        "feasible_t_set": list(outcome.feasible_t_set),
        "last_explored_t": outcome.last_explored_t,
    }
