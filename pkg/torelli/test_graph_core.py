import itertools

import pytest
from pydantic import ValidationError

from .graph_core import (build_graph, connected_components, contract_to, curve_genus, delete_edges, dump_graph,
                         first_betti, fundamental_cycles, graph_to_json, is_isomorphic, is_stable, is_three_edge_connected,
                         load_graph, make_graph, separating_edges, spanning_forest)
from .testing import all_graphs, cycle_graph
from .utils import InputError, PreconditionError, write_text


def test_build_theta(theta):
    assert theta.vertex_ids == ('u', 'v')
    assert theta.edge_ids == ('e1', 'e2', 'e3')
    assert theta.ends['e2'] == ('u', 'v')


def test_build_orders_by_id():
    G = build_graph({'vertices': [{'id': 'b', 'genus': 1}, {'id': 'a', 'genus': 0}],
                     'edges': [{'id': 'z', 'ends': ['b', 'a']}, {'id': 'y', 'ends': ['a', 'a']}]})
    assert G.vertex_ids == ('a', 'b')
    assert G.edge_ids == ('y', 'z')
    assert G.ends['z'] == ('b', 'a')
    assert G.is_loop('y')


@pytest.mark.parametrize('data, message', [
    ({'vertices': [{'id': 'u', 'genus': 0}], 'edges': [{'id': 'e', 'ends': ['u', 'w']}]}, 'dangling endpoint w'),
    ({'vertices': [{'id': 'u', 'genus': 0}, {'id': 'u', 'genus': 1}]}, 'duplicate vertex id: u'),
    ({'vertices': [{'id': 'u', 'genus': -1}]}, 'negative genus at vertex u'),
    ({'vertices': [{'id': 'u', 'genus': 0}],
      'edges': [{'id': 'e', 'ends': ['u', 'u']}, {'id': 'e', 'ends': ['u', 'u']}]}, 'duplicate edge id: e'),
])
def test_build_errors(data, message):
    with pytest.raises(InputError, match=message):
        build_graph(data)


def test_unknown_field_is_rejected():
    with pytest.raises(ValidationError):
        build_graph({'vertices': [{'id': 'u', 'genus': 0, 'weight': 3}]})


def test_file_round_trip(tmp_path, loopgraph):
    path = tmp_path / 'loop.json'
    write_text(str(path), '{"vertices": [{"id": "u", "genus": 1}, {"id": "v", "genus": 0}], '
                          '"edges": [{"id": "a", "ends": ["u", "v"]}, {"id": "b", "ends": ["u", "v"]}, '
                          '{"id": "l", "ends": ["v", "v"]}]}')
    assert load_graph(str(path)) == loopgraph
    assert build_graph(dump_graph(loopgraph)) == loopgraph
    write_text(str(path), graph_to_json(loopgraph))
    assert load_graph(str(path)) == loopgraph


def test_components(theta):
    assert connected_components(theta) == [('u', 'v')]
    assert connected_components(delete_edges(theta, {'e1', 'e2', 'e3'})) == [('u',), ('v',)]


def test_betti_and_genus(theta):
    assert first_betti(theta) == 2
    assert curve_genus(theta) == 2
    assert curve_genus(cycle_graph(4)) == 5


def test_separating_edges(theta, dumbbell, loopgraph):
    assert separating_edges(theta) == frozenset()
    assert separating_edges(loopgraph) == frozenset()
    assert separating_edges(dumbbell) == frozenset({'br'})


def test_stability(theta, loopgraph):
    assert is_stable(theta)
    assert is_stable(loopgraph)
    unstable = make_graph([('u', 1), ('v', 0)], [('a1', ('u', 'v')), ('a2', ('v', 'u'))])
    assert not is_stable(unstable)


def test_stability_needs_connected():
    with pytest.raises(PreconditionError):
        is_stable(make_graph([('u', 2), ('v', 2)], []))


def test_contract_to(theta):
    contracted = contract_to(theta, {'e1'})
    assert contracted.vertices == (('u', 0),)
    assert contracted.edges == (('e1', ('u', 'u')),)


def test_contract_keeps_singleton_genus(cycle4):
    contracted = contract_to(cycle4, {'a1', 'a2', 'a3', 'a4'})
    assert contracted == cycle4
    merged = contract_to(cycle4, {'a1', 'a3'})
    assert len(merged.vertices) == 2
    assert all(g == 0 for _, g in merged.vertices)


def test_delete_edges(theta):
    assert delete_edges(theta, {'e1'}).edge_ids == ('e2', 'e3')
    with pytest.raises(InputError, match='unknown edge id: e9'):
        delete_edges(theta, {'e9'})


def test_three_edge_connected(theta, cycle4):
    assert is_three_edge_connected(theta)
    assert not is_three_edge_connected(cycle4)
    assert is_three_edge_connected(make_graph([('u', 0)], [('l', ('u', 'u'))]))


def test_isomorphism_respects_genus():
    G = make_graph([('a', 1), ('b', 2)], [('e', ('a', 'b')), ('f', ('a', 'b'))])
    H = make_graph([('x', 2), ('y', 1)], [('g', ('y', 'x')), ('h', ('x', 'y'))])
    K = make_graph([('x', 2), ('y', 2)], [('g', ('y', 'x')), ('h', ('x', 'y'))])
    assert is_isomorphic(G, H)
    assert not is_isomorphic(G, K)


def test_fundamental_cycles(theta):
    assert spanning_forest(theta) == ('e1',)
    cycles = fundamental_cycles(theta)
    assert cycles == [(('e2', 1), ('e1', -1)), (('e3', 1), ('e1', -1))]


def test_fundamental_cycles_follow_directions(theta):
    cycles = fundamental_cycles(theta, {'e1': ('u', 'v'), 'e2': ('v', 'u'), 'e3': ('u', 'v')})
    assert cycles[0] == (('e2', 1), ('e1', 1))


def test_loop_is_its_own_cycle(loopgraph):
    cycles = fundamental_cycles(loopgraph)
    assert (('l', 1),) in cycles
    assert len(cycles) == first_betti(loopgraph)


def _edge_subsets(G, max_size=None):
    sizes = range(len(G.edges) + 1 if max_size is None else max_size + 1)
    return [frozenset(S) for k in sizes for S in itertools.combinations(G.edge_ids, k)]


@pytest.mark.slow
def test_betti_splits_over_any_edge_set():
    checked = 0
    for G in all_graphs(max_vertices=3, max_edges=5, genera=(0, 1)):
        for S in _edge_subsets(G):
            assert first_betti(G) == first_betti(delete_edges(G, S)) + first_betti(contract_to(G, S))
        checked += 1
    assert checked > 50


@pytest.mark.slow
def test_separating_edges_disconnect():
    for G in all_graphs(max_vertices=4, max_edges=5):
        components = len(connected_components(G))
        bridges = {e for e in G.edge_ids
                   if not G.is_loop(e) and len(connected_components(delete_edges(G, {e}))) > components}
        assert separating_edges(G) == bridges


@pytest.mark.slow
def test_three_edge_connected_against_edge_pairs():
    checked = 0
    for G in all_graphs(max_vertices=4, max_edges=6):
        expected = all(len(connected_components(delete_edges(G, S))) == 1 for S in _edge_subsets(G, 2))
        assert is_three_edge_connected(G) == expected
        checked += 1
    assert checked > 100
