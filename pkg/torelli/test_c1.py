import itertools

import pytest

from .c1 import c1_partition, codim, cut_pairs_closure, format_edge_set, is_c1_set, is_in_sp, sp_elements, sp_poset
from .graph_core import (connected_components, contract_to, delete_edges, is_connected, is_three_edge_connected,
                         separating_edges, valence)
from .testing import all_graphs
from .utils import PreconditionError, SizeCapExceeded


def test_codim(theta, cycle4):
    assert codim(theta, {'e1'}) == 1
    assert codim(theta, {'e1', 'e2'}) == 2
    assert codim(cycle4, {'a1', 'a2', 'a3', 'a4'}) == 1


def test_is_c1_set(theta, cycle4):
    assert is_c1_set(theta, {'e1'})
    assert not is_c1_set(theta, {'e1', 'e2'})
    assert is_c1_set(cycle4, {'a1', 'a2', 'a3', 'a4'})
    # contracting a3, a4 also gives a cycle, but removing a1, a2 leaves bridges
    assert not is_c1_set(cycle4, {'a1', 'a2'})


def test_is_c1_set_preconditions(theta, dumbbell):
    with pytest.raises(PreconditionError):
        is_c1_set(theta, set())
    with pytest.raises(PreconditionError):
        is_c1_set(dumbbell, {'lx'})


def test_c1_partition(theta, cycle4, loopgraph):
    assert c1_partition(theta) == [('e1',), ('e2',), ('e3',)]
    assert c1_partition(cycle4) == [('a1', 'a2', 'a3', 'a4')]
    assert c1_partition(loopgraph) == [('a', 'b'), ('l',)]


def test_sp_elements(theta, cycle2):
    assert list(sp_elements(theta)) == [frozenset(), frozenset({'e1'}), frozenset({'e2'}), frozenset({'e3'}),
                                        frozenset({'e1', 'e2', 'e3'})]
    assert list(sp_elements(cycle2)) == [frozenset(), frozenset({'a1', 'a2'})]


def test_sp_cap(theta):
    with pytest.raises(SizeCapExceeded):
        list(sp_elements(theta, max_edges=2))


def test_sp_poset(theta, cycle2):
    poset = sp_poset(theta)
    assert len(poset) == 5
    top, bottom = frozenset(), frozenset({'e1', 'e2', 'e3'})
    singles = [frozenset({e}) for e in ('e1', 'e2', 'e3')]
    assert poset.covers == [(top, s) for s in singles] + [(s, bottom) for s in singles]
    assert poset.maximum() == top
    assert poset.minimum() == bottom
    chain = sp_poset(cycle2)
    assert chain.covers == [(frozenset(), frozenset({'a1', 'a2'}))]


def test_format_edge_set():
    assert format_edge_set({'e2', 'e1'}) == '{e1,e2}'
    assert format_edge_set(set()) == '{}'


def _brute_force_partition(G):
    """ blocks of the pairwise-disconnection relation, closed transitively by hand """
    blocks = [{e} for e in G.edge_ids]
    for e1, e2 in itertools.combinations(G.edge_ids, 2):
        if not is_connected(delete_edges(G, {e1, e2})):
            first = next(b for b in blocks if e1 in b)
            second = next(b for b in blocks if e2 in b)
            if first is not second:
                first |= second
                blocks.remove(second)
    return sorted(tuple(sorted(b)) for b in blocks)


@pytest.mark.slow
def test_c1_partition_against_disconnection_closure():
    checked = 0
    for G in all_graphs(max_vertices=4, max_edges=6, min_edges=1, bridge_free=True):
        blocks = c1_partition(G)
        assert sorted(blocks) == _brute_force_partition(G)
        assert sorted(e for b in blocks for e in b) == sorted(G.edge_ids)
        for block in blocks:
            assert is_c1_set(G, block)
            contracted = contract_to(G, block)
            assert len(contracted.vertices) == len(block)
            assert all(valence(contracted, v) == 2 for v in contracted.vertex_ids)
            assert is_in_sp(G, block)
        checked += 1
    assert checked > 50


def test_closure_is_exposed(cycle4):
    closure = cut_pairs_closure(cycle4)
    assert closure['a1'] == closure['a3']
    assert not separating_edges(cycle4)


@pytest.mark.slow
def test_each_c1_set_stays_in_one_component_of_another():
    checked = 0
    for G in all_graphs(max_vertices=4, max_edges=6, min_edges=1, bridge_free=True):
        blocks = c1_partition(G)
        for S, T in itertools.permutations(blocks, 2):
            component = {v: k for k, block in enumerate(connected_components(delete_edges(G, S))) for v in block}
            assert len({component[v] for e in T for v in G.ends[e]}) == 1
            checked += 1
    assert checked > 50


@pytest.mark.slow
def test_three_edge_connected_iff_c1_sets_are_singletons():
    seen = set()
    for G in all_graphs(max_vertices=4, max_edges=6, min_edges=1, bridge_free=True):
        singletons = all(len(block) == 1 for block in c1_partition(G))
        assert is_three_edge_connected(G) == singletons
        seen.add(singletons)
    assert seen == {True, False}


@pytest.mark.slow
def test_codim_decreases_along_sp():
    for G in all_graphs(max_vertices=3, max_edges=5, min_edges=1, bridge_free=True):
        elements = list(sp_elements(G))
        for S, T in itertools.permutations(elements, 2):
            if S < T:
                assert codim(G, S) < codim(G, T)
