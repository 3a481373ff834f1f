"""Named small graphs used throughout the tests."""

from __future__ import annotations

from intervalcolor import Graph


def k1() -> Graph:
    return Graph(1, ())


def k2() -> Graph:
    return Graph(2, ((0, 1),))


def p3() -> Graph:
    return Graph(3, ((0, 1), (1, 2)))


def k3() -> Graph:
    return Graph(3, ((0, 1), (0, 2), (1, 2)))


def p4() -> Graph:
    return Graph(4, ((0, 1), (1, 2), (2, 3)))


def c4() -> Graph:
    return Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def k4() -> Graph:
    return Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))


def k5() -> Graph:
    return Graph(5, tuple((i, j) for i in range(5) for j in range(i + 1, 5)))


def cycle(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def two_k2() -> Graph:
    """Disconnected: two disjoint edges."""
    return Graph(4, ((0, 1), (2, 3)))
