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

import json
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

import networkx as nx
from networkx.utils import UnionFind

from .schemas import GraphSchema
from .utils import InputError, PreconditionError, read_json, sorted_blocks

logger = logging.getLogger(__file__)


@dataclass(frozen=True)
class DecGraph:
    """ Multigraph with loops whose vertices carry a geometric genus.

    vertices: ((vertex id, genus), ...) sorted by id
    edges: ((edge id, (end, end)), ...) sorted by id; the order of the ends is kept
    and only used as the default direction of the edge
    """
    vertices: Tuple[Tuple[str, int], ...]
    edges: Tuple[Tuple[str, Tuple[str, str]], ...] = ()

    @cached_property
    def vertex_ids(self):
        return tuple(v for v, _ in self.vertices)

    @cached_property
    def edge_ids(self):
        return tuple(e for e, _ in self.edges)

    @cached_property
    def genera(self):
        return dict(self.vertices)

    @cached_property
    def ends(self):
        return dict(self.edges)

    def genus(self, v):
        return self.genera[v]

    def is_loop(self, e):
        a, b = self.ends[e]
        return a == b

    @cached_property
    def loops_at(self):
        loops = {v: [] for v in self.vertex_ids}
        for e, (a, b) in self.edges:
            if a == b:
                loops[a].append(e)
        return loops

    def to_networkx(self, skip_loops=False):
        graph = nx.MultiGraph()
        for v, g in self.vertices:
            graph.add_node(v, genus=g)
        for e, (a, b) in self.edges:
            if skip_loops and a == b:
                continue
            graph.add_edge(a, b, key=e)
        return graph


def make_graph(vertices, edges):
    return DecGraph(tuple(sorted(vertices)), tuple(sorted((e, tuple(ends)) for e, ends in edges)))


def build_graph(data):
    """ validated DecGraph from a dict or GraphSchema of the graph file format """
    if not isinstance(data, GraphSchema):
        data = GraphSchema.model_validate(data)

    genera = {}
    for vertex in data.vertices:
        if vertex.id in genera:
            raise InputError('duplicate vertex id: {}'.format(vertex.id))
        if vertex.genus < 0:
            raise InputError('negative genus at vertex {}: {}'.format(vertex.id, vertex.genus))
        genera[vertex.id] = vertex.genus

    edges = {}
    for edge in data.edges:
        if edge.id in edges:
            raise InputError('duplicate edge id: {}'.format(edge.id))
        for end in edge.ends:
            if end not in genera:
                raise InputError('dangling endpoint {} of edge {}'.format(end, edge.id))
        edges[edge.id] = tuple(edge.ends)

    return make_graph(genera.items(), edges.items())


def load_graph(path):
    return build_graph(read_json(path))


def dump_graph(G):
    return {'vertices': [{'id': v, 'genus': g} for v, g in G.vertices],
            'edges': [{'id': e, 'ends': list(ends)} for e, ends in G.edges]}


def graph_to_json(G):
    return json.dumps(dump_graph(G), sort_keys=True, indent=2)


def check_edge_set(G, S):
    S = frozenset(S)
    unknown = sorted(S - set(G.edge_ids))
    if unknown:
        raise InputError('unknown edge id: {}'.format(', '.join(unknown)))
    return S


def connected_components(G):
    """ blocks of vertex ids, each sorted, ordered by their least vertex id """
    blocks = (tuple(sorted(c)) for c in nx.connected_components(G.to_networkx()))
    return sorted(blocks, key=lambda b: b[0])


def is_connected(G):
    return len(connected_components(G)) <= 1


def first_betti(G):
    return len(G.edges) - len(G.vertices) + len(connected_components(G))


def curve_genus(G):
    # g = sum g_v + b1 - c + 1, which combines disconnected parts as sum g_i - (c - 1)
    return sum(G.genera.values()) + len(G.edges) - len(G.vertices) + 1


def valence(G, v):
    return sum((a == v) + (b == v) for _, (a, b) in G.edges)


def separating_edges(G):
    """ the bridges of G; loops and parallel edges never separate """
    graph = G.to_networkx(skip_loops=True)
    bridges = set()
    for a, b in nx.bridges(graph):
        keys = list(graph[a][b])
        assert len(keys) == 1
        bridges.add(keys[0])
    return frozenset(bridges)


def require_connected(G):
    if not is_connected(G):
        raise PreconditionError('not connected')


def require_bridge_free(G):
    require_connected(G)
    bridges = separating_edges(G)
    if bridges:
        raise PreconditionError('has separating edge: {}'.format(', '.join(sorted(bridges))))


def is_stable(G):
    require_connected(G)
    if len(G.vertices) == 1:
        return True
    for v, g in G.vertices:
        if g == 0 and not G.loops_at[v] and valence(G, v) < 3:
            return False
    return True


def contraction_map(G, S):
    """ vertex -> vertex of Gamma(S), named by the least vertex id of its class """
    S = check_edge_set(G, S)
    classes = UnionFind(G.vertex_ids)
    for e, (a, b) in G.edges:
        if e not in S:
            classes.union(a, b)
    mapping = {}
    for block in sorted_blocks(classes):
        for v in block:
            mapping[v] = block[0]
    return mapping


def contract_to(G, S):
    """ Gamma(S): every edge outside S contracted; merged vertices get genus 0 """
    S = check_edge_set(G, S)
    mapping = contraction_map(G, S)
    sizes = Counter(mapping.values())
    vertices = [(w, G.genus(w) if sizes[w] == 1 else 0) for w in sizes]
    edges = [(e, (mapping[a], mapping[b])) for e, (a, b) in G.edges if e in S]
    return make_graph(vertices, edges)


def delete_edges(G, S):
    S = check_edge_set(G, S)
    return DecGraph(G.vertices, tuple((e, ends) for e, ends in G.edges if e not in S))


def induced_subgraph(G, vertices):
    vertices = set(vertices)
    return DecGraph(tuple((v, g) for v, g in G.vertices if v in vertices),
                    tuple((e, (a, b)) for e, (a, b) in G.edges if a in vertices and b in vertices))


def is_three_edge_connected(G):
    require_connected(G)
    if len(G.vertices) == 1:
        return True
    simple = nx.Graph()
    simple.add_nodes_from(G.vertex_ids)
    for _, (a, b) in G.edges:
        if a == b:
            continue
        if simple.has_edge(a, b):
            simple[a][b]['weight'] += 1
        else:
            simple.add_edge(a, b, weight=1)
    cut_value, _ = nx.stoer_wagner(simple)
    return cut_value >= 3


def _invariant_key(G):
    degrees = sorted((g, valence(G, v), len(G.loops_at[v])) for v, g in G.vertices)
    return len(G.vertices), len(G.edges), tuple(degrees)


def is_isomorphic(G, G2):
    """ genus-preserving multigraph isomorphism """
    if _invariant_key(G) != _invariant_key(G2):
        return False
    return nx.is_isomorphic(G.to_networkx(), G2.to_networkx(),
                            node_match=lambda x, y: x['genus'] == y['genus'])


def isomorphism_bucket(G):
    return _invariant_key(G)


def spanning_forest(G):
    """ edge ids of a spanning forest grown by least edge id first """
    classes = UnionFind(G.vertex_ids)
    forest = []
    for e, (a, b) in G.edges:
        if classes[a] != classes[b]:
            classes.union(a, b)
            forest.append(e)
    return tuple(forest)


def fundamental_cycles(G, directions=None):
    """ signed fundamental cycles ((edge, +-1), ...), one per edge off the spanning forest.

    directions maps edge -> (tail, head) and defaults to the stored order of the ends.
    The cycle runs along its defining edge, so that edge always has sign +1.
    """
    directions = directions or G.ends
    forest = spanning_forest(G)
    tree = nx.Graph()
    tree.add_nodes_from(G.vertex_ids)
    for e in forest:
        a, b = G.ends[e]
        tree.add_edge(a, b, id=e)

    cycles = []
    in_forest = set(forest)
    for e in G.edge_ids:
        if e in in_forest:
            continue
        tail, head = directions[e]
        cycle = [(e, 1)]
        if tail != head:
            path = nx.shortest_path(tree, head, tail)
            for x, y in zip(path, path[1:]):
                f = tree[x][y]['id']
                cycle.append((f, 1 if tuple(directions[f]) == (x, y) else -1))
        cycles.append(tuple(cycle))
    return cycles
