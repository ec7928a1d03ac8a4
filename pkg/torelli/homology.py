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
from collections import defaultdict, namedtuple
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .c1 import c1_partition
from .curve import dual_graph, isomorphisms, node_id
from .cyceq import cyclically_equivalent, is_cyclic_bijection
from .graph_core import contraction_map, fundamental_cycles, require_bridge_free, spanning_forest
from .orientation import Orientation
from .utils import DEFAULT_MAX_CYCLIC_EDGES, DEFAULT_MAX_FIBER, DEFAULT_MAX_SEARCH, check_cap

logger = logging.getLogger(__file__)

Decomposition = namedtuple('Decomposition', ['blocks', 'images', 'cycles_in_blocks', 'sums_to_inclusion',
                                             'injective'])


@dataclass(frozen=True, eq=False)
class EtaMatrix:
    """ rows: signed fundamental cycles of the dual graph; columns: marked points.

    directions holds (node id, (s, t)) for every node, the orientation the rows refer to.
    """
    matrix: np.ndarray
    cycles: Tuple[Tuple[Tuple[str, int], ...], ...]
    columns: Tuple[str, ...]
    directions: Tuple[Tuple[str, Tuple[str, str]], ...]

    def to_tsv(self):
        lines = ['\t'.join(('cycle',) + self.columns)]
        for i, row in enumerate(self.matrix):
            lines.append('\t'.join(['c{}'.format(i)] + [str(int(x)) for x in row]))
        return '\n'.join(lines) + '\n'


def signed_cycle_basis(G, directions=None):
    return fundamental_cycles(G, directions)


def _point_directions(X, orientation):
    """ node id -> (s, t) as points; an Orientation of the dual graph picks s on the tail component """
    directions = {}
    if isinstance(orientation, Orientation):
        orientation = orientation.as_dict()
    orientation = orientation or {}
    for a, b in X.nodes:
        n = node_id(a, b)
        if n not in orientation:
            directions[n] = (a, b)
            continue
        tail, head = orientation[n]
        if tail in X.component_of:
            directions[n] = (tail, head)
        elif X.component_of[a] == tail and X.component_of[b] == head:
            directions[n] = (a, b)
        else:
            directions[n] = (b, a)
    return directions


def eta_matrix(X, orientation=None):
    """ cycle -> sum of its signed edges e |-> t_e - s_e, as an integer matrix over the marked points """
    directions = _point_directions(X, orientation)
    graph_directions = {n: (X.component_of[s], X.component_of[t]) for n, (s, t) in directions.items()}
    cycles = fundamental_cycles(dual_graph(X), graph_directions)
    columns = tuple(p for c in X.components for p in c.points)
    column = {p: j for j, p in enumerate(columns)}

    matrix = np.zeros((len(cycles), len(columns)), dtype=np.int64)
    for i, cycle in enumerate(cycles):
        for n, sign in cycle:
            s, t = directions[n]
            matrix[i, column[t]] += sign
            matrix[i, column[s]] -= sign
    for c in X.components:
        if c.points:
            assert not matrix[:, [column[p] for p in c.points]].sum(axis=1).any(), 'row leaves Div^0'
    return EtaMatrix(matrix, tuple(cycles), columns, tuple(sorted(directions.items())))


def cycle_matrix(G, cycles):
    index = {e: j for j, e in enumerate(G.edge_ids)}
    matrix = np.zeros((len(cycles), len(G.edges)), dtype=np.int64)
    for i, cycle in enumerate(cycles):
        for e, sign in cycle:
            matrix[i, index[e]] += sign
    return matrix


def sign_vectors(X):
    """ the sign group: every assignment component -> +1 / -1 """
    ids = [c.id for c in X.components]
    return [dict(zip(ids, signs)) for signs in itertools.product((1, -1), repeat=len(ids))]


def _column_key(v):
    nonzero = np.flatnonzero(v)
    if len(nonzero) and v[nonzero[0]] < 0:
        v = -v
    return tuple(int(x) for x in v)


def _match_columns(C, edges, C2, edges2):
    """ edge bijection with C2[:, eps(e)] = +-C[:, e], or None """
    groups = defaultdict(list)
    for j, e in enumerate(edges2):
        groups[_column_key(C2[:, j])].append(e)
    eps = {}
    for j, e in enumerate(edges):
        bucket = groups.get(_column_key(C[:, j]))
        if not bucket:
            return None
        eps[e] = bucket.pop(0)
    return eps


def t_equivalence_witness(X, X2, orientation=None, max_fiber=DEFAULT_MAX_FIBER, max_search=DEFAULT_MAX_SEARCH,
                          max_cyclic_edges=DEFAULT_MAX_CYCLIC_EDGES):
    """ (phi, alpha, eps) making the eta square commute, or None """
    G, G2 = dual_graph(X), dual_graph(X2)
    require_bridge_free(G)
    require_bridge_free(G2)
    if cyclically_equivalent(G, G2, max_edges=max_cyclic_edges) is None:
        return None

    eta = eta_matrix(X, orientation)
    C = cycle_matrix(G, eta.cycles)
    columns2 = tuple(p for c in X2.components for p in c.points)
    column2 = {p: j for j, p in enumerate(columns2)}
    source = {p: j for j, p in enumerate(eta.columns)}
    s_index = [column2[s] for s, _ in X2.nodes]
    t_index = [column2[t] for _, t in X2.nodes]
    edges2 = [node_id(s, t) for s, t in X2.nodes]

    count = 0
    for phi in isomorphisms(X, X2, nodes=False, max_search=max_search):
        count += 1
        check_cap('normalization isomorphisms', count, max_fiber)
        inverse = {q: p for p, q in phi.items()}
        moved = eta.matrix[:, [source[inverse[q]] for q in columns2]]
        owner = [X.component_of[inverse[q]] for q in columns2]
        for alpha in sign_vectors(X):
            D = moved * np.array([alpha[c] for c in owner], dtype=np.int64)
            chain = D[:, t_index]
            if not np.array_equal(D[:, s_index], -chain):
                continue
            eps = _match_columns(C, G.edge_ids, chain, edges2)
            if eps is not None and is_cyclic_bijection(G, G2, eps):
                return phi, alpha, eps
    return None


def is_t_equivalent(X, X2, orientation=None, max_fiber=DEFAULT_MAX_FIBER, max_search=DEFAULT_MAX_SEARCH,
                    max_cyclic_edges=DEFAULT_MAX_CYCLIC_EDGES):
    return t_equivalence_witness(X, X2, orientation, max_fiber=max_fiber, max_search=max_search,
                                 max_cyclic_edges=max_cyclic_edges) is not None


def c1_homology_decomposition(G):
    """ split every fundamental cycle along the C1-sets and check the pieces """
    require_bridge_free(G)
    blocks = [frozenset(b) for b in c1_partition(G)]
    cycles = fundamental_cycles(G)
    images = []
    cycles_in_blocks = True
    sums_to_inclusion = True
    for cycle in cycles:
        split = {}
        for S in blocks:
            part = tuple((e, c) for e, c in cycle if e in S)
            contracted = contraction_map(G, S)
            boundary = defaultdict(int)
            for e, c in part:
                tail, head = G.ends[e]
                boundary[contracted[head]] += c
                boundary[contracted[tail]] -= c
            cycles_in_blocks &= not any(boundary.values())
            split[S] = part
        total = defaultdict(int)
        for part in split.values():
            for e, c in part:
                total[e] += c
        sums_to_inclusion &= dict(total) == dict(cycle)
        images.append(split)

    # every fundamental cycle owns its defining edge, so the images are independent
    forest = set(spanning_forest(G))
    off_forest = [e for e in G.edge_ids if e not in forest]
    stacked = cycle_matrix(G, cycles)
    index = {e: j for j, e in enumerate(G.edge_ids)}
    injective = np.array_equal(stacked[:, [index[e] for e in off_forest]], np.eye(len(cycles), dtype=np.int64))
    return Decomposition(blocks, images, cycles_in_blocks, sums_to_inclusion, injective)
