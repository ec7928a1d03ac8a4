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

import logging
from collections import namedtuple
from dataclasses import dataclass
from typing import FrozenSet

from .c1 import c1_partition, codim, format_edge_set, sp_elements
from .graph_core import (connected_components, curve_genus, delete_edges, induced_subgraph,
                         require_bridge_free)
from .orientation import Multidegree, multidegree_of, op_elements, restrict, stable_multidegrees
from .poset import Poset, check_poset_axioms
from .utils import DEFAULT_MAX_EDGES

logger = logging.getLogger(__file__)

SupportMap = namedtuple('SupportMap', ['projection', 'surjective', 'quotient'])


@dataclass(frozen=True)
class Stratum:
    support: FrozenSet[str]
    multidegree: Multidegree

    def sort_key(self):
        return len(self.support), sorted(self.support), self.multidegree

    def node_id(self):
        return 'S:{}|d:{}'.format(format_edge_set(self.support), self.multidegree)


def st_elements(G, max_edges=DEFAULT_MAX_EDGES):
    strata = []
    for S in sp_elements(G, max_edges=max_edges):
        for d in sorted(stable_multidegrees(delete_edges(G, S))):
            strata.append(Stratum(S, d))
    return strata


def st_poset(G, max_edges=DEFAULT_MAX_EDGES):
    """ strata ordered through restriction of totally cyclic orientations """
    by_support = op_elements(G, max_edges=max_edges)
    elements = st_elements(G, max_edges=max_edges)
    pairs = set()
    for S, orientations in by_support.items():
        for T, targets in by_support.items():
            if not S < T:
                continue
            targets = set(targets)
            for o in orientations:
                r = restrict(o, T)
                if r in targets:
                    pairs.add((Stratum(S, multidegree_of(o)), Stratum(T, multidegree_of(r))))
    logger.debug('ST has {} strata and {} strict pairs'.format(len(elements), len(pairs)))
    poset = Poset(elements, pairs)
    assert check_poset_axioms(poset)
    return poset


def _component_count(G, S):
    return len(connected_components(delete_edges(G, S)))


def stratum_codim(G, s):
    return codim(G, s.support)


def stratum_dim(G, s):
    g = curve_genus(G)
    dim = g - codim(G, s.support)
    assert dim == g - len(s.support) + _component_count(G, s.support) - 1
    return dim


def support_map(G, poset=None, max_edges=DEFAULT_MAX_EDGES):
    """ the projection (S, d) -> S, whether it is onto SP, and whether SP is the quotient order """
    poset = poset or st_poset(G, max_edges=max_edges)
    supports = list(sp_elements(G, max_edges=max_edges))
    projection = {s: s.support for s in poset}
    surjective = set(projection.values()) == set(supports)
    images = poset.quotient_pairs(lambda s: s.support)
    quotient = all(((S, T) in images) == (S < T) for S in supports for T in supports if S != T)
    return SupportMap(projection, surjective, quotient)


def smallest_stratum(G, poset=None, max_edges=DEFAULT_MAX_EDGES):
    require_bridge_free(G)
    bottom = Stratum(frozenset(G.edge_ids), Multidegree(tuple((v, g - 1) for v, g in G.vertices)))
    poset = poset or st_poset(G, max_edges=max_edges)
    assert all(poset.ge(s, bottom) for s in poset)
    return bottom


def theta_components(G, s):
    Y = delete_edges(G, s.support)
    return sum(curve_genus(induced_subgraph(Y, block)) > 0 for block in connected_components(Y))


def maximal_strata(G, max_edges=DEFAULT_MAX_EDGES):
    return [s for s in st_elements(G, max_edges=max_edges) if not s.support]


def codim_one_strata(G, max_edges=DEFAULT_MAX_EDGES):
    return [s for s in st_elements(G, max_edges=max_edges) if stratum_codim(G, s) == 1]


def c1_supports(G):
    return [frozenset(block) for block in c1_partition(G)]


def stratum_label(G, s):
    return '({} | {} | {})'.format(format_edge_set(s.support), s.multidegree, stratum_dim(G, s))


def strata_dot(G, poset):
    return poset.export_dot(labels=lambda s: stratum_label(G, s), ids=lambda s: s.node_id())
