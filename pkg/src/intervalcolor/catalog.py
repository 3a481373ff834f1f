"""Exhaustive small-graph catalogs, one representative per isomorphism class.

Deduplication uses the minimum adjacency-matrix encoding over all n! vertex
orderings: the upper-triangle bits in column order (0,1),(0,2),(1,2),...
compared lexicographically. The minimum is found exactly by a depth-first
search over vertex orderings that prunes any prefix already larger than the
incumbent, which keeps n = 7 tractable without changing the value computed.
Column order matches the graph6 bit layout, so the canonical representative
also has the lexicographically smallest graph6 body of its class.
"""

from __future__ import annotations

from typing import Iterator

from .errors import DomainError
from .graph import Graph, _column_order_pairs

CATALOG_MAX_N = 7


def minimum_adjacency_encoding(g: Graph) -> tuple[int, ...]:
    """Exact minimum of the column-order upper-triangle bits over all vertex
    orderings; returns the flat bit tuple (length n(n-1)/2)."""
    n = g.n
    if n == 1:
        return ()
    masks = [0] * n
    for a, b in g.edges:
        masks[a] |= 1 << b
        masks[b] |= 1 << a

    # prefix is one integer per placed vertex k >= 1, holding the k bits
    # (0,k),(1,k),...,(k-1,k) MSB-first; segment lengths align, so comparing
    # these integer lists positionally is the bit-string comparison.
    best: list[int] | None = None
    chosen: list[int] = []

    def place(used: int, prefix: list[int]) -> None:
        nonlocal best
        k = len(chosen)
        if k == n:
            if best is None or prefix < best:
                best = prefix.copy()
            return
        scored = []
        for x in range(n):
            if (used >> x) & 1:
                continue
            segment = 0
            mask_x = masks[x]
            for i in range(k):
                segment = (segment << 1) | ((mask_x >> chosen[i]) & 1)
            scored.append((segment, x))
        scored.sort()
        depth = len(prefix)
        for segment, x in scored:
            if best is not None:
                prefix.append(segment)
                worse = prefix > best[: depth + 1]
                prefix.pop()
                if worse:
                    break  # candidates are sorted; the rest only get larger
            chosen.append(x)
            prefix.append(segment)
            place(used | (1 << x), prefix)
            prefix.pop()
            chosen.pop()

    place(0, [])
    assert best is not None
    bits: list[int] = []
    for k, segment in enumerate(best):  # segment k carries the k bits (0,k)..(k-1,k)
        bits.extend((segment >> shift) & 1 for shift in range(k - 1, -1, -1))
    return tuple(bits)


def graph_from_encoding(n: int, bits: tuple[int, ...]) -> Graph:
    edges = [pair for pair, bit in zip(_column_order_pairs(n), bits) if bit]
    return Graph(n, tuple(edges))


def generate_connected_catalog(n: int) -> Iterator[Graph]:
    """All connected graphs on n vertices, one canonical representative per
    isomorphism class, in increasing canonical-encoding order.

    Built by extending the (n-1)-vertex catalog with one new vertex joined to
    every nonempty subset of old vertices; every connected graph has a vertex
    whose removal keeps it connected (a leaf of any spanning tree), so every
    class is reached. Guarded at n <= 7; pipe in an external graph6 stream
    for anything larger.
    """
    if not 1 <= n <= CATALOG_MAX_N:
        raise DomainError(
            f"naive catalog generation is guarded at n <= {CATALOG_MAX_N}; "
            "feed larger catalogs from an external graph6 stream"
        )
    level: dict[tuple[int, ...], Graph] = {(): Graph(1, ())}
    for size in range(2, n + 1):
        new_v = size - 1
        grown: dict[tuple[int, ...], Graph] = {}
        for parent in level.values():
            for subset in range(1, 1 << new_v):
                edges = list(parent.edges)
                edges.extend((i, new_v) for i in range(new_v) if (subset >> i) & 1)
                enc = minimum_adjacency_encoding(Graph(size, tuple(edges)))
                if enc not in grown:
                    grown[enc] = graph_from_encoding(size, enc)
        level = grown
    for enc in sorted(level):
        yield level[enc]
