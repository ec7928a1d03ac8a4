import pytest

from .c1 import c1_partition, sp_elements
from .graph_core import is_stable as graph_is_stable
from .orientation import Multidegree, balanced_multidegrees, opbar_poset
from .strata import (Stratum, c1_supports, codim_one_strata, maximal_strata, smallest_stratum, st_elements,
                     st_poset, strata_dot, stratum_codim, stratum_dim, stratum_label, support_map,
                     theta_components)
from .testing import all_graphs, cycle_graph


def _stratum(support, values, vertices=('u', 'v')):
    return Stratum(frozenset(support), Multidegree(tuple(zip(vertices, values))))


def test_theta_strata(theta):
    strata = st_elements(theta)
    assert strata == [_stratum((), (0, 1)), _stratum((), (1, 0)), _stratum({'e1'}, (0, 0)),
                      _stratum({'e2'}, (0, 0)), _stratum({'e3'}, (0, 0)), _stratum({'e1', 'e2', 'e3'}, (-1, -1))]
    assert [stratum_dim(theta, s) for s in strata] == [2, 2, 1, 1, 1, 0]


def test_cycle2_strata(cycle2):
    strata = st_elements(cycle2)
    assert [(sorted(s.support), str(s.multidegree)) for s in strata] == [([], '(1,1)'), (['a1', 'a2'], '(0,0)')]


def test_theta_order(theta):
    poset = st_poset(theta)
    assert len(poset) == 6
    top = _stratum((), (0, 1))
    assert all(poset.gt(top, _stratum({e}, (0, 0))) for e in ('e1', 'e2', 'e3'))
    assert poset.minimum() == _stratum({'e1', 'e2', 'e3'}, (-1, -1))
    assert len(poset.covers) == 9


def test_dimensions(theta):
    assert stratum_dim(theta, _stratum((), (1, 0))) == 2
    assert stratum_dim(theta, _stratum({'e1'}, (0, 0))) == 1
    assert stratum_codim(theta, _stratum({'e1'}, (0, 0))) == 1
    assert stratum_dim(theta, _stratum({'e1', 'e2', 'e3'}, (-1, -1))) == 0


def test_support_map(theta, cycle2):
    projection, surjective, quotient = support_map(theta)
    assert surjective and quotient
    assert set(projection.values()) == set(sp_elements(theta))
    assert support_map(cycle2).surjective


def test_smallest_stratum(theta, cycle2, cycle4):
    assert smallest_stratum(theta) == _stratum({'e1', 'e2', 'e3'}, (-1, -1))
    assert str(smallest_stratum(cycle4).multidegree) == '(0,0,0,0)'
    assert str(smallest_stratum(cycle2).multidegree) == '(0,0)'


def test_theta_components(theta, cycle2):
    assert theta_components(theta, _stratum({'e1'}, (0, 0))) == 1
    assert theta_components(cycle2, Stratum(frozenset({'a1', 'a2'}),
                                            Multidegree((('u1', 0), ('u2', 0))))) == 2


def test_codim_one_strata_are_supported_on_c1_sets(theta, cycle4):
    for G in (theta, cycle4):
        strata = codim_one_strata(G)
        assert {s.support for s in strata} == set(c1_supports(G))
        for s in strata:
            assert theta_components(G, s) == len(s.support)


def test_maximal_strata(theta):
    assert len(maximal_strata(theta)) == 2


def test_labels_and_dot(theta):
    s = _stratum({'e2', 'e1'}, (0, 0))
    assert s.node_id() == 'S:{e1,e2}|d:(0,0)'
    assert stratum_label(theta, _stratum({'e1'}, (0, 0))) == '({e1} | (0,0) | 1)'
    dot = strata_dot(theta, st_poset(theta))
    assert '"S:{}|d:(0,1)" [label="({} | (0,1) | 2)"];' in dot
    assert '"S:{}|d:(0,1)" -> "S:{e1}|d:(0,0)";' in dot


def test_st_is_isomorphic_to_opbar(cycle4):
    assert len(st_poset(cycle4)) == len(opbar_poset(cycle4))
    assert len(st_poset(cycle_graph(2))) == 2


@pytest.mark.slow
def test_support_map_is_a_quotient_on_small_graphs():
    checked = 0
    for G in all_graphs(max_vertices=4, max_edges=6, min_edges=1, bridge_free=True):
        _, surjective, quotient = support_map(G)
        assert surjective and quotient
        if graph_is_stable(G):
            for s in codim_one_strata(G):
                assert tuple(sorted(s.support)) in c1_partition(G)
                assert theta_components(G, s) == len(s.support)
        checked += 1
    assert checked > 50


@pytest.mark.slow
def test_order_shrinks_support_and_degree():
    checked = 0
    for G in all_graphs(max_vertices=3, max_edges=5, min_edges=1, genera=(0, 1), bridge_free=True):
        poset = st_poset(G)
        for a, b in poset.pairs():
            assert poset.ge(a, b)
            assert a.support <= b.support
            assert all(a.multidegree[v] >= b.multidegree[v] for v in G.vertex_ids)
            checked += 1
        assert len(maximal_strata(G)) == len(balanced_multidegrees(G))
    assert checked > 50
