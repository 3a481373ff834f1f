from __future__ import annotations

import pytest

from intervalcolor import Graph, generate_connected_catalog


@pytest.fixture(scope="session")
def catalogs() -> dict[int, list[Graph]]:
    """Connected-graph catalogs for n = 1..6, shared across the suite."""
    return {n: list(generate_connected_catalog(n)) for n in range(1, 7)}
