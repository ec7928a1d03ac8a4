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

import networkx as nx


class Poset:
    """ Finite poset given by its elements and the strict relation a > b.

    The relation is taken as given; check_poset_axioms tells whether it is transitive
    and antisymmetric. Covers are those of its transitive closure.
    """

    def __init__(self, elements, greater):
        self.elements = tuple(elements)
        self._index = {x: i for i, x in enumerate(self.elements)}
        assert len(self._index) == len(self.elements), 'repeated elements'
        self.graph = nx.DiGraph()
        self.graph.add_nodes_from(self.elements)
        for a, b in greater:
            assert a in self._index and b in self._index
            if a != b:
                self.graph.add_edge(a, b)
        self._covers = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._index

    def index(self, x):
        return self._index[x]

    def ge(self, a, b):
        return a == b or self.graph.has_edge(a, b)

    def gt(self, a, b):
        return a != b and self.graph.has_edge(a, b)

    def pairs(self):
        """ strict pairs (a, b) with a > b, in element order """
        return sorted(self.graph.edges, key=lambda ab: (self._index[ab[0]], self._index[ab[1]]))

    @property
    def covers(self):
        """ (a, b) such that a covers b """
        if self._covers is None:
            reduction = nx.transitive_reduction(self.graph)
            self._covers = sorted(reduction.edges, key=lambda ab: (self._index[ab[0]], self._index[ab[1]]))
        return self._covers

    def maximal_elements(self):
        return [x for x in self.elements if self.graph.in_degree(x) == 0]

    def minimal_elements(self):
        return [x for x in self.elements if self.graph.out_degree(x) == 0]

    def maximum(self):
        maximal = self.maximal_elements()
        return maximal[0] if len(maximal) == 1 and self.graph.out_degree(maximal[0]) == len(self) - 1 else None

    def minimum(self):
        minimal = self.minimal_elements()
        return minimal[0] if len(minimal) == 1 and self.graph.in_degree(minimal[0]) == len(self) - 1 else None

    def quotient_pairs(self, projection):
        """ strict pairs of the images of comparable elements under projection """
        pairs = set()
        for a, b in self.graph.edges:
            pa, pb = projection(a), projection(b)
            if pa != pb:
                pairs.add((pa, pb))
        return pairs

    def export_dot(self, labels=None, ids=None):
        """ DOT digraph of the covering relation, arcs from the greater element """
        labels = labels or str
        ids = ids or (lambda x: 'n{}'.format(self._index[x]))
        lines = ['digraph poset {']
        for x in self.elements:
            lines.append('  "{}" [label="{}"];'.format(_escape(ids(x)), _escape(labels(x))))
        for a, b in self.covers:
            lines.append('  "{}" -> "{}";'.format(_escape(ids(a)), _escape(ids(b))))
        lines.append('}')
        return '\n'.join(lines) + '\n'


def _escape(text):
    return str(text).replace('\\', '\\\\').replace('"', '\\"')


def check_poset_axioms(P):
    """ the strict relation of P is irreflexive, antisymmetric and transitive """
    for a, b in P.graph.edges:
        if a == b or P.graph.has_edge(b, a):
            return False
    for a in P.elements:
        for b in P.graph.successors(a):
            for c in P.graph.successors(b):
                if not P.graph.has_edge(a, c):
                    return False
    return True


def chain(elements):
    """ total order elements[0] > elements[1] > ... """
    return Poset(elements, itertools.combinations(elements, 2))
