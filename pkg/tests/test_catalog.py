from __future__ import annotations

from itertools import permutations

import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g

from intervalcolor import (
    DomainError,
    Graph,
    generate_connected_catalog,
    is_connected,
    minimum_adjacency_encoding,
)
from smallgraphs import c4, k3, k4, p4, star

KNOWN_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}


def naive_minimum_encoding(g: Graph) -> tuple[int, ...]:
    """Reference: scan all n! orderings literally."""
    n = g.n
    present = set(g.edges)
    best = None
    for perm in permutations(range(n)):
        inverse = [0] * n
        for old, new in enumerate(perm):
            inverse[new] = old
        bits = []
        for j in range(1, n):
            for i in range(j):
                a, b = inverse[i], inverse[j]
                bits.append(1 if (min(a, b), max(a, b)) in present else 0)
        candidate = tuple(bits)
        if best is None or candidate < best:
            best = candidate
    return best or ()


class TestMinimumEncoding:
    def test_matches_naive_scan(self):
        for g in (k3(), p4(), c4(), star(3), k4(), Graph(5, ((0, 1), (1, 2), (0, 2), (2, 3)))):
            assert minimum_adjacency_encoding(g) == naive_minimum_encoding(g)

    def test_isomorphism_invariant(self):
        g = Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)))
        enc = minimum_adjacency_encoding(g)
        for perm in permutations(range(5)):
            relabeled = Graph(5, tuple((perm[a], perm[b]) for a, b in g.edges))
            assert minimum_adjacency_encoding(relabeled) == enc

    def test_distinguishes_classes(self):
        assert minimum_adjacency_encoding(c4()) != minimum_adjacency_encoding(star(3))

    def test_single_vertex(self):
        assert minimum_adjacency_encoding(Graph(1, ())) == ()


class TestCatalog:
    def test_counts(self, catalogs):
        for n, expected in KNOWN_CONNECTED_COUNTS.items():
            assert len(catalogs[n]) == expected

    def test_all_connected_with_right_order(self, catalogs):
        for n, graphs in catalogs.items():
            for g in graphs:
                assert g.n == n
                assert is_connected(g)

    def test_representatives_are_canonical(self, catalogs):
        for g in catalogs[5]:
            enc = minimum_adjacency_encoding(g)
            rebuilt_bits = []
            present = set(g.edges)
            for j in range(1, g.n):
                for i in range(j):
                    rebuilt_bits.append(1 if (i, j) in present else 0)
            assert tuple(rebuilt_bits) == enc

    def test_deterministic_and_sorted(self):
        first = [g.edges for g in generate_connected_catalog(5)]
        second = [g.edges for g in generate_connected_catalog(5)]
        assert first == second
        encs = [minimum_adjacency_encoding(g) for g in generate_connected_catalog(5)]
        assert encs == sorted(encs)

    def test_guard(self):
        with pytest.raises(DomainError, match="graph6 stream"):
            list(generate_connected_catalog(8))
        with pytest.raises(DomainError):
            list(generate_connected_catalog(0))

    def test_pairwise_distinct_encodings(self, catalogs):
        encs = [minimum_adjacency_encoding(g) for g in catalogs[6]]
        assert len(set(encs)) == len(encs)


@pytest.fixture(scope="module")
def atlas_by_n():
    buckets: dict[int, list] = {n: [] for n in range(1, 7)}
    for G in graph_atlas_g()[1:]:  # entry 0 is the empty graph
        n = G.number_of_nodes()
        if 1 <= n <= 6 and nx.is_connected(G):
            buckets[n].append(G)
    return buckets


class TestAgainstNetworkxAtlas:
    """The published atlas of all graphs on up to 7 vertices is an
    independent census; its connected members must match ours exactly."""

    def test_connected_counts_match(self, atlas_by_n):
        for n, expected in KNOWN_CONNECTED_COUNTS.items():
            assert len(atlas_by_n[n]) == expected

    def test_isomorphism_classes_match(self, atlas_by_n, catalogs):
        for n in range(1, 7):
            mine = {minimum_adjacency_encoding(g) for g in catalogs[n]}
            theirs = {
                minimum_adjacency_encoding(
                    Graph(n, tuple((min(a, b), max(a, b)) for a, b in G.edges()))
                )
                for G in atlas_by_n[n]
            }
            assert mine == theirs
