from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from invcover.core import Hypergraph
from invcover.cover import CoverFamily, HostGraph, all_pairs_cover
from invcover.constructions import cover_to_critical


@pytest.fixture
def triangle_cover() -> CoverFamily:
    """The three 2-subsets of a 3-vertex complete host."""
    return all_pairs_cover(3)


@pytest.fixture
def triangle_critical(triangle_cover) -> Hypergraph:
    """The padded triangle: 3 edges, 5 vertices, invertibility critical."""
    return cover_to_critical(triangle_cover)


@pytest.fixture
def single_edge_small() -> Hypergraph:
    """One edge on its own two vertices; never invertible."""
    return Hypergraph(["a", "b"], [["a", "b"]])


@pytest.fixture
def single_edge_roomy() -> Hypergraph:
    """One edge with two spare vertices; invertible."""
    return Hypergraph(["a", "b", "c", "d"], [["a", "b"]])
