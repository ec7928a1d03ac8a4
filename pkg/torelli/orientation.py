#  torelli_toolkit
#  Copyright (C) 2018 the torelli_toolkit authors
#
#  This program is free software: you can redistribute it and/or modify
#  it under the terms of the GNU Affero General Public License as published by
#  the Free Software Foundation, either version 3 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU Affero General Public License for more details.
#
#  You should have received a copy of the GNU Affero General Public License
#  along with this program.  If not, see <http://www.gnu.org/licenses/>.

import itertools
import logging
from collections import Counter, OrderedDict
from dataclasses import dataclass
from typing import FrozenSet, Tuple

import networkx as nx

from .c1 import sp_elements
from .graph_core import (DecGraph, check_edge_set, connected_components, curve_genus, delete_edges,
                         induced_subgraph, separating_edges, valence)
from .poset import Poset
from .utils import DEFAULT_MAX_EDGES, PreconditionError, check_cap

logger = logging.getLogger(__file__)


@dataclass(frozen=True)
class Orientation:
    """ Directions (edge, (tail, head)) of every edge of G - support, sorted by edge id. """
    graph: DecGraph
    support: FrozenSet[str]
    directions: Tuple[Tuple[str, Tuple[str, str]], ...]

    def outdegrees(self):
        out = Counter({v: 0 for v in self.graph.vertex_ids})
        for _, (tail, _) in self.directions:
            out[tail] += 1
        return tuple((v, out[v]) for v in self.graph.vertex_ids)

    def as_dict(self):
        return dict(self.directions)


@dataclass(frozen=True, order=True)
class Multidegree:
    values: Tuple[Tuple[str, int], ...]

    @classmethod
    def from_mapping(cls, G, mapping):
        return cls(tuple((v, int(mapping[v])) for v in G.vertex_ids))

    def __getitem__(self, v):
        return dict(self.values)[v]

    def total(self):
        return sum(d for _, d in self.values)

    def as_tuple(self):
        return tuple(d for _, d in self.values)

    def __str__(self):
        return '(' + ','.join(str(d) for d in self.as_tuple()) + ')'


@dataclass(frozen=True)
class OrientationClass:
    support: FrozenSet[str]
    outdegrees: Tuple[Tuple[str, int], ...]


def is_totally_cyclic(o):
    """ every connected component of G - S is strongly connected """
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(o.graph.vertex_ids)
    for e, (tail, head) in o.directions:
        graph.add_edge(tail, head, key=e)
    weak = {frozenset(c) for c in nx.weakly_connected_components(graph)}
    strong = {frozenset(c) for c in nx.strongly_connected_components(graph)}
    return weak == strong


def is_totally_cyclic_by_cuts(o):
    """ no proper non-empty W inside a component with all crossing edges leaving W, or all entering it """
    Y = delete_edges(o.graph, o.support)
    directions = o.as_dict()
    for block in connected_components(Y):
        for size in range(1, len(block)):
            for W in itertools.combinations(block, size):
                W = set(W)
                crossing = [(tail in W) for e, (tail, head) in directions.items() if (tail in W) != (head in W)]
                if crossing and (all(crossing) or not any(crossing)):
                    return False
    return True


def _orientation(G, S, directions):
    return Orientation(G, frozenset(S), tuple(sorted(directions.items())))


def totally_cyclic_orientations(G, S=frozenset()):
    """ totally cyclic orientations of G - S in lexicographic order of the flips """
    S = check_edge_set(G, S)
    Y = delete_edges(G, S)
    if separating_edges(Y):
        return []
    movable = [e for e in Y.edge_ids if not Y.is_loop(e)]
    fixed = {e: Y.ends[e] for e in Y.edge_ids if Y.is_loop(e)}
    orientations = []
    for flips in itertools.product((False, True), repeat=len(movable)):
        directions = dict(fixed)
        for e, flip in zip(movable, flips):
            a, b = Y.ends[e]
            directions[e] = (b, a) if flip else (a, b)
        o = _orientation(G, S, directions)
        if is_totally_cyclic(o):
            orientations.append(o)
    return orientations


def restrict(o, T):
    T = check_edge_set(o.graph, T)
    if not o.support <= T:
        raise PreconditionError('restriction needs a larger support')
    return Orientation(o.graph, T, tuple((e, d) for e, d in o.directions if e not in T))


def multidegree_of(o):
    """ genus - 1 + outdegree at every vertex; a loop adds one to the outdegree """
    G = o.graph
    return Multidegree(tuple((v, G.genus(v) - 1 + out) for v, out in o.outdegrees()))


def _balancing(Y, d, strict):
    if d.total() != curve_genus(Y) - 1:
        raise PreconditionError('degree {} does not match genus {}'.format(d.total(), curve_genus(Y)))
    components = [set(c) for c in connected_components(Y)]
    degree = dict(d.values)
    vertices = Y.vertex_ids
    for size in range(1, len(vertices) + 1):
        for Z in itertools.combinations(vertices, size):
            g_Z = curve_genus(induced_subgraph(Y, Z))
            d_Z = sum(degree[v] for v in Z)
            if g_Z - 1 > d_Z:
                return False
            if strict and g_Z - 1 == d_Z:
                Z = set(Z)
                if not all(c <= Z or not (c & Z) for c in components):
                    return False
    return True


def is_semistable(Y, d):
    return _balancing(Y, d, strict=False)


def is_stable(Y, d):
    return _balancing(Y, d, strict=True)


def stable_multidegrees(Y):
    return frozenset(multidegree_of(o) for o in totally_cyclic_orientations(Y))


def balanced_multidegrees(Y):
    """ stable multidegrees by brute force over the box g_v - 1 <= d_v <= g_v - 1 + valence(v) """
    target = curve_genus(Y) - 1
    ranges = [range(Y.genus(v) - 1, Y.genus(v) + valence(Y, v)) for v in Y.vertex_ids]
    found = set()
    for values in itertools.product(*ranges):
        if sum(values) != target:
            continue
        d = Multidegree(tuple(zip(Y.vertex_ids, values)))
        if is_stable(Y, d):
            found.add(d)
    return frozenset(found)


def orientation_class(o):
    return OrientationClass(o.support, o.outdegrees())


def op_elements(G, max_edges=DEFAULT_MAX_EDGES):
    """ OrderedDict support -> totally cyclic orientations of G - support """
    check_cap('edges', len(G.edges), max_edges)
    return OrderedDict((S, totally_cyclic_orientations(G, S)) for S in sp_elements(G, max_edges=max_edges))


def _restriction_pairs(by_support):
    for S, orientations in by_support.items():
        for T, targets in by_support.items():
            if not S < T:
                continue
            targets = set(targets)
            for o in orientations:
                r = restrict(o, T)
                if r in targets:
                    yield o, r


def op_poset(G, max_edges=DEFAULT_MAX_EDGES):
    by_support = op_elements(G, max_edges=max_edges)
    elements = [o for orientations in by_support.values() for o in orientations]
    logger.debug('OP has {} elements'.format(len(elements)))
    return Poset(elements, _restriction_pairs(by_support))


def opbar_poset(G, max_edges=DEFAULT_MAX_EDGES):
    by_support = op_elements(G, max_edges=max_edges)
    classes = OrderedDict()
    for orientations in by_support.values():
        for o in orientations:
            classes.setdefault(orientation_class(o), o)
    pairs = {(orientation_class(a), orientation_class(b)) for a, b in _restriction_pairs(by_support)}
    return Poset(list(classes), pairs)


def class_representatives(G, S=frozenset()):
    """ class -> least orientation in it """
    representatives = OrderedDict()
    for o in totally_cyclic_orientations(G, S):
        representatives.setdefault(orientation_class(o), o)
    return representatives
