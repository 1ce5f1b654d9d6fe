from __future__ import annotations

import pytest

from pentafactor.graphs import CubicGraph, PETERSEN_EDGES


@pytest.fixture
def petersen() -> CubicGraph:
    return CubicGraph(PETERSEN_EDGES)


@pytest.fixture
def k4() -> CubicGraph:
    return CubicGraph([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def k33() -> CubicGraph:
    return CubicGraph([(a, b) for a in range(3) for b in range(3, 6)])


@pytest.fixture
def theta() -> CubicGraph:
    return CubicGraph([(0, 1), (0, 1), (0, 1)])


@pytest.fixture
def cube() -> CubicGraph:
    edges = []
    for v in range(8):
        for bit in (1, 2, 4):
            if v < (w := v ^ bit):
                edges.append((v, w))
    return CubicGraph(edges)
