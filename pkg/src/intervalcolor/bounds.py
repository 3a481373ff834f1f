"""Registry of upper bounds on the maximum interval palette size W.

Each entry is emitted only when its structural precondition verifiably
holds on the given graph; the planar bound additionally requires an explicit
caller assertion because planarity testing is out of scope. The registered
bounds, for connected graphs on n vertices:

  T1_triangle_free    W <= n - 1        triangle-free
  T2_biregular        W <= n - 3        (a,b)-biregular bipartite, n >= 2(a+b)
  T3_general          W <= 2n - 3       always
  T4_general_n3       W <= 2n - 4       n >= 3
  T6_planar_asserted  W <= floor(11n/6) planarity asserted by the caller
  T7_regular          W <= 2n - 5       r-regular, n >= 2r + 2

The surjectivity cap W <= |E| is applied in best_upper_bound, not stored as
a claim. The 11n/6 bound is floored because W is an integer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graph import Graph, GraphClass

T1_TRIANGLE_FREE = "T1_triangle_free"
T2_BIREGULAR = "T2_biregular"
T3_GENERAL = "T3_general"
T4_GENERAL_N3 = "T4_general_n3"
T6_PLANAR_ASSERTED = "T6_planar_asserted"
T7_REGULAR = "T7_regular"

THEOREM_IDS = (
    T1_TRIANGLE_FREE,
    T2_BIREGULAR,
    T3_GENERAL,
    T4_GENERAL_N3,
    T6_PLANAR_ASSERTED,
    T7_REGULAR,
)


@dataclass(frozen=True)
class BoundClaim:
    theorem_id: str
    bound: int
    evidence: dict


@dataclass(frozen=True)
class BoundReport:
    claims: tuple[BoundClaim, ...]
    best: int
    audited_W: int | None
    violations: tuple[BoundClaim, ...]


def applicable_bounds(
    g: Graph, cls: GraphClass, planar_asserted: bool = False
) -> tuple[BoundClaim, ...]:
    """All claims whose preconditions hold, in fixed registry order."""
    if not cls.connected:
        raise DomainError("bound registry applies to connected graphs only")
    n = g.n
    claims: list[BoundClaim] = []
    if cls.triangle_free:
        claims.append(BoundClaim(T1_TRIANGLE_FREE, n - 1, {"n": n}))
    if cls.biregular_degrees is not None:
        a, b = cls.biregular_degrees
        if n >= 2 * (a + b):
            claims.append(BoundClaim(T2_BIREGULAR, n - 3, {"n": n, "a": a, "b": b}))
    claims.append(BoundClaim(T3_GENERAL, 2 * n - 3, {"n": n}))
    if n >= 3:
        claims.append(BoundClaim(T4_GENERAL_N3, 2 * n - 4, {"n": n}))
    if planar_asserted:
        claims.append(
            BoundClaim(T6_PLANAR_ASSERTED, (11 * n) // 6, {"n": n, "planar_asserted": True})
        )
    if cls.regular_degree is not None and n >= 2 * cls.regular_degree + 2:
        claims.append(BoundClaim(T7_REGULAR, 2 * n - 5, {"n": n, "r": cls.regular_degree}))
    return tuple(claims)


def best_upper_bound(g: Graph, cls: GraphClass, planar_asserted: bool = False) -> int:
    """Minimum over applicable claims, capped by |E| (each color needs an edge)."""
    claims = applicable_bounds(g, cls, planar_asserted)
    return min(min(c.bound for c in claims), g.m)


def audit(g: Graph, w: int, claims: tuple[BoundClaim, ...]) -> BoundReport:
    """Check a computed W against every claim; violations must stay empty."""
    violations = tuple(c for c in claims if w > c.bound)
    return BoundReport(
        claims=claims,
        best=min(c.bound for c in claims),
        audited_W=w,
        violations=violations,
    )


def claim_to_json(claim: BoundClaim) -> dict:
    return {"theorem_id": claim.theorem_id, "bound": claim.bound, "evidence": claim.evidence}


def bound_report_to_json(report: BoundReport) -> dict:
    return {
        "claims": [claim_to_json(c) for c in report.claims],
        "best": report.best,
        "audited_W": report.audited_W,
        "violations": [claim_to_json(c) for c in report.violations],
    }
