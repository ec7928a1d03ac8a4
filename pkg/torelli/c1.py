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

from networkx.utils import UnionFind

from .graph_core import (check_edge_set, contract_to, delete_edges, first_betti, is_connected,
                         require_bridge_free, separating_edges)
from .poset import Poset
from .utils import DEFAULT_MAX_EDGES, PreconditionError, check_cap, sorted_blocks

logger = logging.getLogger(__file__)


def codim(G, S):
    return first_betti(contract_to(G, S))


def is_in_sp(G, S):
    return not separating_edges(delete_edges(G, S))


def is_c1_set(G, S):
    """ S is a C1-set iff G - S has no bridge and Gamma(S) is a cycle (codim 1) """
    S = check_edge_set(G, S)
    require_bridge_free(G)
    if not S:
        raise PreconditionError('empty edge set')
    return codim(G, S) == 1 and is_in_sp(G, S)


def cut_pairs_closure(G):
    """ union-find closure of the relation e1 ~ e2 iff G - {e1, e2} is disconnected """
    require_bridge_free(G)
    classes = UnionFind(G.edge_ids)
    for e1, e2 in itertools.combinations(G.edge_ids, 2):
        if not is_connected(delete_edges(G, {e1, e2})):
            classes.union(e1, e2)
    return classes


def c1_partition(G):
    """ C1-sets of G as sorted tuples of edge ids, ordered by their least edge id """
    return sorted_blocks(cut_pairs_closure(G))


def sp_elements(G, max_edges=DEFAULT_MAX_EDGES):
    """ every S with G - S bridge-free, by size and then lexicographically; lazy """
    require_bridge_free(G)
    check_cap('edges', len(G.edges), max_edges)
    for size in range(len(G.edges) + 1):
        for S in itertools.combinations(G.edge_ids, size):
            S = frozenset(S)
            if is_in_sp(G, S):
                yield S


def sp_poset(G, max_edges=DEFAULT_MAX_EDGES):
    elements = list(sp_elements(G, max_edges=max_edges))
    logger.debug('SP has {} elements'.format(len(elements)))
    greater = [(S, T) for S, T in itertools.permutations(elements, 2) if S < T]
    return Poset(elements, greater)


def format_edge_set(S):
    return '{' + ','.join(sorted(S)) + '}'
