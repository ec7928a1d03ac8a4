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

""" Generators for the exhaustive test corpora: small graphs, cycle curves and tree-like curves. """

import itertools
import math
import random
from collections import Counter
from functools import lru_cache

from networkx.utils import UnionFind

from .curve import build_curve, curve_from_graph, dual_graph, fiber_bound
from .graph_core import curve_genus, is_stable, make_graph, separating_edges, valence


def graph_from_pairs(n, pairs, genera=None):
    """ vertices v0..v(n-1), edges e1..em in the order of pairs """
    genera = genera or (0,) * n
    vertices = [('v{}'.format(i), genera[i]) for i in range(n)]
    edges = [('e{}'.format(k + 1), ('v{}'.format(a), 'v{}'.format(b))) for k, (a, b) in enumerate(pairs)]
    return make_graph(vertices, edges)


@lru_cache(maxsize=None)
def _shapes(n, m):
    """ connected loop-allowed multigraph shapes on n vertices with m edges, one per isomorphism class """
    slots = [(a, b) for a in range(n) for b in range(a, n)]
    permutations = list(itertools.permutations(range(n)))
    seen, shapes = set(), []
    for pairs in itertools.combinations_with_replacement(slots, m):
        classes = UnionFind(range(n))
        for a, b in pairs:
            classes.union(a, b)
        if len(list(classes.to_sets())) > 1:
            continue
        key = min(tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in pairs)) for p in permutations)
        if key in seen:
            continue
        seen.add(key)
        shapes.append(pairs)
    return tuple(shapes)


def all_graphs(max_vertices=4, max_edges=6, min_edges=0, genera=(0,), bridge_free=False):
    """ connected graphs up to isomorphism of the underlying multigraph, every genus assignment from genera """
    for n in range(1, max_vertices + 1):
        for m in range(max(min_edges, n - 1), max_edges + 1):
            for pairs in _shapes(n, m):
                if bridge_free and separating_edges(graph_from_pairs(n, pairs)):
                    continue
                for assignment in itertools.product(genera, repeat=n):
                    yield graph_from_pairs(n, pairs, assignment)


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def stable_graphs_of_genus(g, max_vertices=4):
    """ stable bridge-free connected graphs of genus g """
    for n in range(1, max_vertices + 1):
        for m in range(n - 1, g + n):
            for pairs in _shapes(n, m):
                shape = graph_from_pairs(n, pairs)
                if separating_edges(shape):
                    continue
                for genera in _compositions(g - (m - n + 1), n):
                    G = graph_from_pairs(n, pairs, genera)
                    if is_stable(G):
                        yield G


def cycle_graph(h, genus=1):
    """ h vertices of the given genus in a cycle with edges a1..ah """
    vertices = [('u{}'.format(i), genus) for i in range(1, h + 1)]
    edges = [('a{}'.format(i), ('u{}'.format(i), 'u{}'.format(i % h + 1))) for i in range(1, h + 1)]
    return make_graph(vertices, edges)


def cycle_curve(h, genus=1, same_label=False, swaps=True):
    """ curve with dual graph CYCLE_h; swaps declares the exchange of the two points on every component """
    G = cycle_graph(h, genus)
    labels = {v: 'C' for v in G.vertex_ids} if same_label else None
    generators = {v: [(1, 0)] for v in G.vertex_ids} if swaps else None
    return curve_from_graph(G, labels, generators)


def labelings(G):
    """ curves over G: distinct labels, swaps on two-pointed components, and one shared label when possible """
    curves = [curve_from_graph(G)]
    two_pointed = [v for v in G.vertex_ids if valence(G, v) == 2 and G.genus(v) >= 2]
    if two_pointed:
        curves.append(curve_from_graph(G, generators={v: [(1, 0)] for v in two_pointed}))
    shapes = {(G.genus(v), valence(G, v)) for v in G.vertex_ids}
    if len(G.vertices) > 1 and len(shapes) == 1:
        labels = {v: 'C' for v in G.vertex_ids}
        curves.append(curve_from_graph(G, labels))
        if two_pointed:
            curves.append(curve_from_graph(G, labels, {v: [(1, 0)] for v in G.vertex_ids}))
    return curves


def normalization_size(X):
    """ order of the group of label-preserving automorphisms of the normalization """
    size = 1
    for c in X.components:
        size *= len(c.symmetries)
    for count in Counter(c.iso_label for c in X.components).values():
        size *= math.factorial(count)
    return size


def curve_corpus(size=250, seed=0, max_vertices=5, max_edges=6, genera=(0, 1, 2), max_work=20000):
    """ seeded sample of stable bridge-free curves of genus >= 2 whose fiber search stays small """
    candidates = []
    for G in all_graphs(max_vertices, max_edges, min_edges=1, genera=genera, bridge_free=True):
        if curve_genus(G) < 2 or not is_stable(G):
            continue
        for X in labelings(G):
            if fiber_bound(X) * normalization_size(X) <= max_work:
                candidates.append(X)
    rng = random.Random(seed)
    if len(candidates) > size:
        candidates = rng.sample(candidates, size)
    return candidates


def _prufer_trees(n):
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for sequence in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in sequence:
            degree[x] += 1
        edges = []
        for x in sequence:
            leaf = min(i for i in range(n) if degree[i] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, w = [i for i in range(n) if degree[i] == 1]
        edges.append((u, w))
        yield edges


def tree_curves(pieces, hubs=0):
    """ every stable curve made of the given positive-genus pieces and rational hubs joined along a tree.

    A piece is an integer genus (one smooth component) or 'nodal' (a rational component with a loop).
    The separating nodes at a nodal piece sit either on its main component or on rational beads
    inserted in its loop.
    """
    k = len(pieces)
    for tree in _prufer_trees(k + hubs):
        degree = Counter(x for edge in tree for x in edge)
        if any(degree[k + j] < 3 for j in range(hubs)):
            continue
        ends = {i: [] for i in range(k + hubs)}
        for index, (a, b) in enumerate(tree):
            ends[a].append('x{}'.format(index))
            ends[b].append('y{}'.format(index))
        nodal = [i for i in range(k) if pieces[i] == 'nodal']
        choices = [list(itertools.product((False, True), repeat=len(ends[i]))) for i in nodal]
        for beads in itertools.product(*choices):
            X = _tree_curve(pieces, hubs, tree, ends, dict(zip(nodal, beads)))
            if is_stable(dual_graph(X)):
                yield X


def _tree_curve(pieces, hubs, tree, ends, beads):
    components, nodes = [], [('x{}'.format(i), 'y{}'.format(i)) for i in range(len(tree))]
    for i, piece in enumerate(pieces):
        name = 'P{}'.format(i)
        if piece != 'nodal':
            components.append({'id': name, 'genus': piece, 'iso_label': name, 'points': ends[i]})
            continue
        on_main = [p for p, bead in zip(ends[i], beads[i]) if not bead]
        on_beads = [p for p, bead in zip(ends[i], beads[i]) if bead]
        # the loop of the main component runs through the beads in order
        chain = ['{}.a'.format(name)]
        for j, p in enumerate(on_beads):
            bead = '{}.b{}'.format(name, j)
            components.append({'id': bead, 'genus': 0, 'iso_label': bead,
                               'points': [bead + '.in', bead + '.out', p]})
            nodes.append((chain[-1], bead + '.in'))
            chain.append(bead + '.out')
        nodes.append((chain[-1], '{}.b'.format(name)))
        components.append({'id': name, 'genus': 0, 'iso_label': name,
                           'points': ['{}.a'.format(name), '{}.b'.format(name)] + on_main})
    for j in range(hubs):
        name = 'H{}'.format(j)
        components.append({'id': name, 'genus': 0, 'iso_label': name, 'points': ends[len(pieces) + j]})
    return build_curve({'components': components, 'nodes': nodes})


def looped_pair_curves(bead=None):
    """ two genus-2 components A and B with four points each, a loop on both and two nodes between them.

    The 72 curves come in C1-classes of two, one per choice of the looped points. bead='node' puts a
    rational component E on the node at the least remaining point of A, bead='loop' puts it on the loop of A.
    """
    a_points = ['a{}'.format(i) for i in range(1, 5)]
    b_points = ['b{}'.format(i) for i in range(1, 5)]
    curves = []
    for loop_a in itertools.combinations(a_points, 2):
        for loop_b in itertools.combinations(b_points, 2):
            rest_a = [p for p in a_points if p not in loop_a]
            rest_b = [p for p in b_points if p not in loop_b]
            for matched in itertools.permutations(rest_b):
                nodes = [loop_a, loop_b] + list(zip(rest_a, matched))
                components = [{'id': 'A', 'genus': 2, 'iso_label': 'A', 'points': a_points},
                              {'id': 'B', 'genus': 2, 'iso_label': 'B', 'points': b_points}]
                if bead:
                    s, t = nodes.pop(2 if bead == 'node' else 0)
                    nodes += [(s, 'x'), ('y', t)]
                    components.append({'id': 'E', 'genus': 0, 'iso_label': 'E', 'points': ['x', 'y']})
                curves.append(build_curve({'components': components, 'nodes': nodes}))
    return curves


def looped_points(X):
    """ the point pairs of the nodes joining a component to itself """
    return frozenset(frozenset((a, b)) for a, b in X.nodes if X.component_of[a] == X.component_of[b])
