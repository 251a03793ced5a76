import pytest

from graph_core import build_digraph, subgraph
from instances import figure1_sbss, figure1_scss, load_figure1


@pytest.fixture
def figure1():
    return load_figure1()


@pytest.fixture
def figure1_b(figure1):
    return subgraph(figure1, figure1_scss(figure1))


@pytest.fixture
def figure1_c(figure1):
    return subgraph(figure1, figure1_sbss(figure1))


@pytest.fixture
def triangle():
    return build_digraph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def bidirected_triangle():
    return build_digraph(3, [(0, 1), (1, 2), (2, 0), (1, 0), (2, 1), (0, 2)])
