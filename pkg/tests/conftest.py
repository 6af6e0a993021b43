import itertools

import pytest
from hypothesis import strategies as st

from rigmat.graphcore import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    prism_graph,
)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def k33():
    return complete_bipartite(3, 3)


@pytest.fixture
def prism():
    return prism_graph()


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def p3():
    return path_graph(3)


@st.composite
def graphs(draw, min_n=1, max_n=8, max_edges=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    if not pairs:
        return Graph(n)
    edges = draw(
        st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges or len(pairs))
    )
    return Graph.from_edges(n, edges)
