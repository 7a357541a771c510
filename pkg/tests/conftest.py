"""Shared fixtures: small graphs and a networkx converter used as an oracle."""

import networkx as nx
import numpy as np
import pytest

from unit_dimension.families import complete_graph, cycle_graph, mycielski_cycle
from unit_dimension.graph_core import Graph


def _to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.num_vertices))
    h.add_edges_from(g.edges())
    return h


@pytest.fixture
def to_networkx():
    return _to_networkx


@pytest.fixture
def triangle() -> Graph:
    return cycle_graph(3)


@pytest.fixture
def square() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def mc10() -> Graph:
    return mycielski_cycle(10)


@pytest.fixture
def unit_square_points() -> np.ndarray:
    return np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
