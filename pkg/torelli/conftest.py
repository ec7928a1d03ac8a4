import pytest

from .curve import build_curve, curve_from_graph
from .graph_core import build_graph
from .testing import cycle_graph


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: exhaustive corpus checks')


@pytest.fixture
def theta():
    return build_graph({'vertices': [{'id': 'u', 'genus': 0}, {'id': 'v', 'genus': 0}],
                        'edges': [{'id': 'e1', 'ends': ['u', 'v']},
                                  {'id': 'e2', 'ends': ['u', 'v']},
                                  {'id': 'e3', 'ends': ['u', 'v']}]})


@pytest.fixture
def cycle2():
    return cycle_graph(2)


@pytest.fixture
def cycle4():
    return cycle_graph(4)


@pytest.fixture
def loopgraph():
    return build_graph({'vertices': [{'id': 'u', 'genus': 1}, {'id': 'v', 'genus': 0}],
                        'edges': [{'id': 'a', 'ends': ['u', 'v']},
                                  {'id': 'b', 'ends': ['u', 'v']},
                                  {'id': 'l', 'ends': ['v', 'v']}]})


@pytest.fixture
def dumbbell():
    return build_graph({'vertices': [{'id': 'x', 'genus': 1}, {'id': 'y', 'genus': 1}],
                        'edges': [{'id': 'lx', 'ends': ['x', 'x']},
                                  {'id': 'ly', 'ends': ['y', 'y']},
                                  {'id': 'br', 'ends': ['x', 'y']}]})


@pytest.fixture
def theta_curve(theta):
    return curve_from_graph(theta)


def _two_component_curve(nodes, swap=False):
    return build_curve({'components': [{'id': 'C1', 'genus': 2, 'iso_label': 'C1', 'points': ['p1', 'q1'],
                                        'symmetries': [['q1', 'p1']] if swap else []},
                                       {'id': 'C2', 'genus': 2, 'iso_label': 'C2', 'points': ['p2', 'q2']}],
                        'nodes': nodes})


@pytest.fixture
def c1_pair():
    """ two genus-2 components glued at two nodes, once straight and once crossed """
    return (_two_component_curve([['p1', 'p2'], ['q1', 'q2']]),
            _two_component_curve([['p1', 'q2'], ['q1', 'p2']]))


@pytest.fixture
def c1_pair_with_swap():
    return (_two_component_curve([['p1', 'p2'], ['q1', 'q2']], swap=True),
            _two_component_curve([['p1', 'q2'], ['q1', 'p2']], swap=True))
