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
import json
import logging
import math
from collections import Counter, namedtuple
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Tuple

import networkx as nx
from tqdm import tqdm

from .c1 import c1_partition
from .graph_core import (connected_components, curve_genus, is_stable, make_graph, require_bridge_free,
                         require_connected, separating_edges)
from .schemas import CurveSchema
from .utils import (DEFAULT_MAX_FIBER, DEFAULT_MAX_SEARCH, InputError, PreconditionError, check_cap,
                    close_group, half_factorial_ceil, read_json, symmetric_group)

logger = logging.getLogger(__file__)

TildeProfile = namedtuple('TildeProfile', ['gamma', 'gamma0', 'gamma1', 'gamma_plus', 'e'])
FiberDimensionBounds = namedtuple('FiberDimensionBounds', ['upper', 'lower', 'upper_tight', 'lower_tight'])


@dataclass(frozen=True)
class MarkedComponent:
    """ A component of the normalization with its marked points.

    symmetries is a closed group of permutations of point positions: the permutation s
    sends points[i] to points[s[i]]. Components of genus <= 1 always carry the full
    symmetric group on their points.
    """
    id: str
    genus: int
    iso_label: str
    points: Tuple[str, ...]
    symmetries: FrozenSet[Tuple[int, ...]]


def make_component(id, genus, iso_label, points, generators=()):
    points = tuple(points)
    if genus <= 1:
        group = symmetric_group(len(points))
    else:
        group = close_group(generators, len(points))
    return MarkedComponent(id, genus, iso_label, points, group)


def node_id(a, b):
    return '~'.join(sorted((a, b)))


@dataclass(frozen=True)
class CombCurve:
    """ Components sorted by id, nodes (s, t) sorted by node id; points outside the nodes are free. """
    components: Tuple[MarkedComponent, ...]
    nodes: Tuple[Tuple[str, str], ...] = ()

    @cached_property
    def component(self):
        return {c.id: c for c in self.components}

    @cached_property
    def component_of(self):
        return {p: c.id for c in self.components for p in c.points}

    @cached_property
    def partner(self):
        partner = {}
        for a, b in self.nodes:
            partner[a] = b
            partner[b] = a
        return partner

    @cached_property
    def node_ids(self):
        return tuple(node_id(a, b) for a, b in self.nodes)

    @cached_property
    def node_by_id(self):
        return {node_id(a, b): (a, b) for a, b in self.nodes}

    @cached_property
    def free_points(self):
        return tuple(sorted(p for p in self.component_of if p not in self.partner))

    def has_loop(self, c):
        return any(self.component_of[a] == c and self.component_of[b] == c for a, b in self.nodes)


def _make_curve(components, nodes):
    return CombCurve(tuple(sorted(components, key=lambda c: c.id)),
                     tuple(sorted((tuple(n) for n in nodes), key=lambda n: node_id(*n))))


def _check_labels(components):
    by_label = {}
    for c in components:
        other = by_label.setdefault(c.iso_label, c)
        if (other.genus, len(other.points), other.symmetries) != (c.genus, len(c.points), c.symmetries):
            raise InputError('components {} and {} share iso_label {} but differ in genus, points or symmetries'
                             .format(other.id, c.id, c.iso_label))


def build_curve(data):
    """ validated CombCurve from a dict or CurveSchema of the curve file format """
    if not isinstance(data, CurveSchema):
        data = CurveSchema.model_validate(data)

    components, owners = {}, {}
    for item in data.components:
        if item.id in components:
            raise InputError('duplicate component id: {}'.format(item.id))
        if item.genus < 0:
            raise InputError('negative genus at component {}: {}'.format(item.id, item.genus))
        for p in item.points:
            if p in owners:
                raise InputError('duplicate point id: {}'.format(p))
            owners[p] = item.id
        position = {p: i for i, p in enumerate(item.points)}
        generators = []
        for images in item.symmetries:
            if sorted(images) != sorted(item.points):
                raise InputError('symmetry of component {} is not a permutation of its points'.format(item.id))
            generators.append(tuple(position[q] for q in images))
        components[item.id] = make_component(item.id, item.genus, item.iso_label, item.points, generators)

    used = set()
    for a, b in data.nodes:
        for p in (a, b):
            if p not in owners:
                raise InputError('unknown point in node: {}'.format(p))
            if p in used:
                raise InputError('point in more than one node: {}'.format(p))
            used.add(p)
        if a == b:
            raise InputError('node joins a point to itself: {}'.format(a))
    unused = sorted(set(owners) - used)
    if unused:
        raise InputError('point not in any node: {}'.format(unused[0]))

    _check_labels(components.values())
    return _make_curve(components.values(), data.nodes)


def load_curve(path):
    return build_curve(read_json(path))


def dump_curve(X):
    components = []
    for c in X.components:
        symmetries = []
        if c.genus > 1:
            identity = tuple(range(len(c.points)))
            symmetries = [[c.points[i] for i in s] for s in sorted(c.symmetries) if s != identity]
        components.append({'id': c.id, 'genus': c.genus, 'iso_label': c.iso_label,
                           'points': list(c.points), 'symmetries': symmetries})
    return {'components': components, 'nodes': [list(n) for n in X.nodes]}


def curve_to_json(X):
    return json.dumps(dump_curve(X), sort_keys=True, indent=2)


def curve_from_graph(G, labels=None, generators=None):
    """ a curve with dual graph G: edge e becomes the node (e.s, e.t) """
    labels = labels or {}
    generators = generators or {}
    points = {v: [] for v in G.vertex_ids}
    nodes = []
    for e, (a, b) in G.edges:
        points[a].append('{}.s'.format(e))
        points[b].append('{}.t'.format(e))
        nodes.append(('{}.s'.format(e), '{}.t'.format(e)))
    components = [make_component(v, g, labels.get(v, 'L:{}'.format(v)), points[v], generators.get(v, ()))
                  for v, g in G.vertices]
    _check_labels(components)
    return _make_curve(components, nodes)


def dual_graph(X):
    return make_graph([(c.id, c.genus) for c in X.components],
                      [(node_id(a, b), (X.component_of[a], X.component_of[b])) for a, b in X.nodes])


def genus(X):
    return curve_genus(dual_graph(X))


def _node_pairs(X, N):
    pairs = []
    for n in N:
        if n not in X.node_by_id:
            raise InputError('unknown node: {}'.format(n))
        pairs.append(X.node_by_id[n])
    return pairs


def normalize_at(X, N):
    """ the partial normalization at the nodes N (node ids); their points become free """
    removed = set(_node_pairs(X, N))
    return CombCurve(X.components, tuple(n for n in X.nodes if n not in removed))


def connected_subcurves(X):
    """ connected pieces of X, ordered by their least component id """
    pieces = []
    for block in connected_components(dual_graph(X)):
        block = set(block)
        pieces.append(CombCurve(tuple(c for c in X.components if c.id in block),
                                tuple(n for n in X.nodes if X.component_of[n[0]] in block)))
    return pieces


def c1_point_partition(X):
    """ the gluing sets G_S, one frozenset of points per C1-set """
    return [frozenset(p for n in block for p in X.node_by_id[n]) for block in c1_partition(dual_graph(X))]


def _require_c1_set(X, S):
    S = tuple(sorted(S))
    if S not in c1_partition(dual_graph(X)):
        raise PreconditionError('not a C1-set: {}'.format(', '.join(S)))
    return S


def _pieces_at(X, S):
    """ connected pieces of the normalization at S with their two points of G_S """
    gluing_points = {p for n in _node_pairs(X, S) for p in n}
    result = []
    for piece in connected_subcurves(normalize_at(X, S)):
        pair = tuple(sorted(p for p in piece.free_points if p in gluing_points))
        assert len(pair) == 2
        result.append((piece, pair))
    return sorted(result, key=lambda item: item[1])


def c1_involution(X, S):
    """ pairs of G_S lying on the same connected piece of the normalization at S """
    S = _require_c1_set(X, S)
    return tuple(pair for _, pair in _pieces_at(X, S))


def subcurves_from_gluing_sets(X):
    """ pieces and involutions of every C1-set, recovered from the normalization and the sets G_S alone """
    gluing_sets = c1_point_partition(X)
    component_of = X.component_of
    touched = [{component_of[p] for p in G_T} for G_T in gluing_sets]
    result = []
    for k, G_S in enumerate(gluing_sets):
        pieces = []
        remaining = set(G_S)
        while remaining:
            Z = {component_of[min(remaining)]}
            grown = True
            while grown:
                grown = False
                for j, comps in enumerate(touched):
                    if j != k and comps & Z and not comps <= Z:
                        Z |= comps
                        grown = True
            pair = tuple(sorted(p for p in G_S if component_of[p] in Z))
            assert len(pair) == 2
            remaining -= set(pair)
            pieces.append((frozenset(Z), pair))
        result.append(sorted(pieces, key=lambda item: item[1]))
    return result


def _search_order(X):
    """ components in breadth-first order over the dual graph, least id first """
    G = dual_graph(X)
    graph = G.to_networkx()
    order = []
    for block in connected_components(G):
        order.append(block[0])
        order.extend(v for _, v in nx.bfs_edges(graph, block[0], sort_neighbors=sorted))
    return [X.component[c] for c in order]


def _quick_invariants(X):
    return (sorted((c.iso_label, c.genus, len(c.points)) for c in X.components),
            len(X.nodes), len(X.free_points))


def isomorphisms(X, X2, nodes=True, blocks=None, fixed=None, max_search=DEFAULT_MAX_SEARCH):
    """ point maps X -> X2 from label-preserving component bijections composed with symmetries.

    nodes: the map must carry nodes onto nodes and free points onto free points
    blocks: pair of maps point -> block key; blocks must be carried onto blocks
    fixed: prescribed images of some points
    """
    if _quick_invariants(X)[0] != _quick_invariants(X2)[0]:
        return
    if nodes and _quick_invariants(X)[1:] != _quick_invariants(X2)[1:]:
        return
    fixed = fixed or {}
    block_of, block_of2 = blocks or ({}, {})
    if blocks and sorted(Counter(block_of.values()).values()) != sorted(Counter(block_of2.values()).values()):
        return

    order = _search_order(X)
    by_label = {}
    for c in X2.components:
        by_label.setdefault(c.iso_label, []).append(c)
    point_map, used = {}, set()
    block_map, block_inverse = {}, {}
    steps = [0]

    def consistent(assignment):
        local = dict(assignment)
        added_blocks = []
        ok = True
        for p, q in assignment:
            if p in fixed and fixed[p] != q:
                ok = False
                break
            if nodes:
                r = X.partner.get(p)
                r2 = X2.partner.get(q)
                if (r is None) != (r2 is None):
                    ok = False
                    break
                if r is not None:
                    image = local.get(r, point_map.get(r))
                    if image is not None and image != r2:
                        ok = False
                        break
            if blocks and p in block_of:
                k, k2 = block_of[p], block_of2.get(q)
                if k2 is None or block_map.get(k, k2) != k2 or block_inverse.get(k2, k) != k:
                    ok = False
                    break
                if k not in block_map:
                    block_map[k] = k2
                    block_inverse[k2] = k
                    added_blocks.append(k)
            elif blocks and q in block_of2:
                ok = False
                break
        if not ok:
            for k in added_blocks:
                del block_inverse[block_map.pop(k)]
            return None
        return added_blocks

    def extend(i):
        if i == len(order):
            yield dict(point_map)
            return
        c = order[i]
        for c2 in by_label[c.iso_label]:
            if c2.id in used:
                continue
            for s in sorted(c2.symmetries):
                steps[0] += 1
                check_cap('isomorphism search steps', steps[0], max_search)
                assignment = [(p, c2.points[s[k]]) for k, p in enumerate(c.points)]
                added_blocks = consistent(assignment)
                if added_blocks is None:
                    continue
                used.add(c2.id)
                point_map.update(assignment)
                yield from extend(i + 1)
                for p, _ in assignment:
                    del point_map[p]
                used.discard(c2.id)
                for k in added_blocks:
                    del block_inverse[block_map.pop(k)]

    yield from extend(0)


def find_isomorphism(X, X2, **kwargs):
    return next(isomorphisms(X, X2, **kwargs), None)


def curve_isomorphic(X, X2, max_search=DEFAULT_MAX_SEARCH):
    return find_isomorphism(X, X2, max_search=max_search) is not None


def normalization_automorphisms(X, max_fiber=DEFAULT_MAX_FIBER, max_search=DEFAULT_MAX_SEARCH):
    automorphisms = []
    for phi in isomorphisms(X, X, nodes=False, max_search=max_search):
        automorphisms.append(phi)
        check_cap('normalization automorphisms', len(automorphisms), max_fiber)
    return automorphisms


def _c1_witness(X, X2, max_search):
    partition = c1_point_partition(X)
    partition2 = c1_point_partition(X2)
    if sorted(map(len, partition)) != sorted(map(len, partition2)):
        return None
    block_of = {p: k for k, block in enumerate(partition) for p in block}
    block_of2 = {p: k for k, block in enumerate(partition2) for p in block}
    return find_isomorphism(X, X2, nodes=False, blocks=(block_of, block_of2), max_search=max_search)


def _match_pieces(pieces, pieces2, witness):
    """ bijection pieces -> pieces2 with a witness for every pair, merged into one point map """
    if len(pieces) != len(pieces2):
        return None
    cache = {}

    def search(i, used, merged):
        if i == len(pieces):
            return merged
        for j in range(len(pieces2)):
            if j in used:
                continue
            if (i, j) not in cache:
                cache[i, j] = witness(pieces[i], pieces2[j])
            if cache[i, j] is not None:
                found = search(i + 1, used | {j}, {**merged, **cache[i, j]})
                if found is not None:
                    return found
        return None

    return search(0, frozenset(), {})


def is_c1_equivalent(X, X2, max_search=DEFAULT_MAX_SEARCH):
    """ (True, point map) if some normalization isomorphism carries the gluing sets onto the gluing sets """
    pieces, pieces2 = connected_subcurves(X), connected_subcurves(X2)
    for piece in pieces + pieces2:
        require_bridge_free(dual_graph(piece))
    witness = _match_pieces(pieces, pieces2, lambda A, B: _c1_witness(A, B, max_search))
    return witness is not None, witness


def exceptional_components(X):
    """ genus-0 components without loops carrying exactly two points """
    if len(X.components) == 1:
        return []
    return [c for c in X.components if c.genus == 0 and len(c.points) == 2 and not X.has_loop(c.id)]


def _canonical_removal(c, removed):
    """ the symmetry moving the removed positions to the least set in their orbit, least such symmetry first """
    return min(c.symmetries, key=lambda s: (sorted(s[i] for i in removed), s))


def forget_points(X, points):
    """ drop free points; a component losing points gets the label label[kept positions].

    Kept positions are read after moving the removed points to the least position set
    in their orbit under the symmetries, so isomorphic components get equal labels.
    """
    points = set(points)
    for p in sorted(points):
        if p not in X.component_of:
            raise InputError('unknown point: {}'.format(p))
        if p in X.partner:
            raise PreconditionError('point {} lies on a node'.format(p))
    components = []
    for c in X.components:
        removed = {i for i, p in enumerate(c.points) if p in points}
        if not removed:
            components.append(c)
            continue
        s = _canonical_removal(c, removed)
        moved = [None] * len(c.points)
        for i, p in enumerate(c.points):
            moved[s[i]] = p
        target = {s[i] for i in removed}
        kept = [j for j in range(len(c.points)) if j not in target]
        position = {j: k for k, j in enumerate(kept)}
        label = '{}[{}]'.format(c.iso_label, ','.join(map(str, kept)))
        if c.genus <= 1:
            group = symmetric_group(len(kept))
        else:
            # reordering by a symmetry leaves the group unchanged; keep the stabilizer of target
            group = frozenset(tuple(position[t[j]] for j in kept)
                              for t in c.symmetries if {t[j] for j in target} == target)
        components.append(MarkedComponent(c.id, c.genus, label, tuple(moved[j] for j in kept), group))
    return CombCurve(tuple(components), X.nodes)


def stabilize(X):
    """ contract genus-0 loop-free components with at most two points until none is left """
    require_connected(dual_graph(X))
    if X.free_points:
        raise PreconditionError('curve has free points: {}'.format(', '.join(X.free_points)))
    while len(X.components) > 1:
        candidates = [c for c in X.components if c.genus == 0 and len(c.points) <= 2 and not X.has_loop(c.id)]
        if not candidates:
            break
        c = candidates[0]
        assert c.points, 'connected curve with an isolated component'
        others = tuple(d for d in X.components if d.id != c.id)
        stubs = [X.partner[p] for p in c.points]
        nodes = [n for n in X.nodes if n[0] not in c.points and n[1] not in c.points]
        if len(stubs) == 2:
            X = _make_curve(others, nodes + [tuple(stubs)])
        else:
            X = forget_points(_make_curve(others, nodes), stubs)
        logger.debug('contracted exceptional component {}'.format(c.id))
    return X


def separating_nodes(X):
    return separating_edges(dual_graph(X))


def _tilde_pieces(X):
    require_connected(dual_graph(X))
    return connected_subcurves(normalize_at(X, separating_nodes(X)))


def tilde_profile(X):
    pieces = _tilde_pieces(X)
    genera = [genus(piece) for piece in pieces]
    e = 0
    for piece, g in zip(pieces, genera):
        if g > 0 and len(piece.components) > 1:
            e += sum(1 for c in piece.components
                     if c.genus == 0 and not piece.has_loop(c.id)
                     and sum(p in piece.partner for p in c.points) == 2)
    count = Counter(min(g, 2) for g in genera)
    return TildeProfile(len(pieces), count[0], count[1], len(pieces) - count[0], e)


def piece_genera(X):
    return [genus(piece) for piece in _tilde_pieces(X)]


def _require_stable(X):
    G = dual_graph(X)
    if not is_stable(G):
        raise PreconditionError('not stable')
    if curve_genus(G) < 2:
        raise PreconditionError('genus {} < 2'.format(curve_genus(G)))


def fiber_dimension(X):
    _require_stable(X)
    profile = tilde_profile(X)
    return 2 * profile.gamma_plus - profile.gamma1 - 2


def topotype_dimension(X):
    """ dimension of the locus of curves with the topological type of X inside its fiber """
    _require_stable(X)
    profile = tilde_profile(X)
    return 2 * len(separating_nodes(X)) - 3 * profile.gamma0 - profile.gamma1 - profile.e


def fiber_dimension_bounds(X):
    _require_stable(X)
    genera = piece_genera(X)
    profile = tilde_profile(X)
    return FiberDimensionBounds(genus(X) - 2, profile.gamma_plus - 2,
                                all(g <= 2 for g in genera), all(g <= 1 for g in genera))


def has_finite_fiber(X):
    return genus(X) == 2 or not separating_nodes(X)


def fiber_bound(X):
    require_bridge_free(dual_graph(X))
    bound = 1
    for block in c1_partition(dual_graph(X)):
        h = len(block)
        bound *= 2 ** (h - 1) * math.factorial(h - 1)
    return bound


def fiber_bound_global(X):
    require_bridge_free(dual_graph(X))
    g = genus(X)
    if g < 2:
        raise PreconditionError('genus {} < 2'.format(g))
    return half_factorial_ceil(g - 2 + len(exceptional_components(X)))


@dataclass(frozen=True)
class GluingData:
    """ sigma[i] is the piece following piece i; marking[i] = (s_i, t_i), and s_i is glued to t_sigma(i).

    Stored as the representative with s_0 the smaller point of piece 0.
    """
    sigma: Tuple[int, ...]
    marking: Tuple[Tuple[str, str], ...]

    def nodes(self):
        return [(s, self.marking[self.sigma[i]][1]) for i, (s, _) in enumerate(self.marking)]


def gluing_data(X, S):
    S = _require_c1_set(X, S)
    pairs = [pair for _, pair in _pieces_at(X, S)]
    piece_of = {p: i for i, pair in enumerate(pairs) for p in pair}
    sigma = [None] * len(pairs)
    marking = [None] * len(pairs)
    i, s = 0, pairs[0][0]
    while marking[i] is None:
        t = pairs[i][1] if s == pairs[i][0] else pairs[i][0]
        marking[i] = (s, t)
        r = X.partner[s]
        j = piece_of[r]
        sigma[i] = j
        i, s = j, (pairs[j][1] if r == pairs[j][0] else pairs[j][0])
    return GluingData(tuple(sigma), tuple(marking))


def all_gluing_data(X, S):
    """ the 2^(h-1) (h-1)! gluing data of a C1-set of size h """
    S = _require_c1_set(X, S)
    pairs = [pair for _, pair in _pieces_at(X, S)]
    h = len(pairs)
    for rest in itertools.permutations(range(1, h)):
        cycle = (0,) + rest
        sigma = [None] * h
        for k in range(h):
            sigma[cycle[k]] = cycle[(k + 1) % h]
        for flips in itertools.product((False, True), repeat=h - 1):
            marking = [pairs[0]] + [pairs[j][::-1] if flip else pairs[j] for j, flip in zip(range(1, h), flips)]
            yield GluingData(tuple(sigma), tuple(marking))


def glue(X, data):
    """ the curve with the normalization of X glued by data (C1-set -> GluingData), X's gluing elsewhere """
    nodes = []
    for block in c1_partition(dual_graph(X)):
        datum = data.get(frozenset(block)) or gluing_data(X, block)
        nodes.extend(datum.nodes())
    return _make_curve(X.components, nodes)


def _canonical_key(nodes, automorphisms):
    return min(tuple(sorted(tuple(sorted((phi[a], phi[b]))) for a, b in nodes)) for phi in automorphisms)


def _require_fiber_input(X):
    G = dual_graph(X)
    require_bridge_free(G)
    if not is_stable(G):
        raise PreconditionError('not stable')


def enumerate_fiber(X, max_fiber=DEFAULT_MAX_FIBER, max_search=DEFAULT_MAX_SEARCH, progress=False):
    """ the C1-equivalence class of X, one curve per isomorphism class, X representing its own """
    _require_fiber_input(X)
    raw = fiber_bound(X)
    check_cap('gluing data', raw, max_fiber)
    blocks = c1_partition(dual_graph(X))
    options = [list(all_gluing_data(X, block)) for block in blocks]
    automorphisms = normalization_automorphisms(X, max_fiber=max_fiber, max_search=max_search)
    logger.info('fiber search: {} gluings, {} normalization automorphisms'.format(raw, len(automorphisms)))

    representatives = {_canonical_key(X.nodes, automorphisms): X}
    for choice in tqdm(itertools.product(*options), total=raw, disable=not progress):
        nodes = [n for datum in choice for n in datum.nodes()]
        key = _canonical_key(nodes, automorphisms)
        if key not in representatives:
            representatives[key] = _make_curve(X.components, nodes)
    return [representatives[key] for key in sorted(representatives)]


def _has_swap(piece, p, q, max_search):
    return find_isomorphism(piece, piece, fixed={p: q, q: p}, max_search=max_search) is not None


def _marked_isomorphic(A, pair, B, pair2, max_search):
    (p, q), (p2, q2) = pair, pair2
    return any(find_isomorphism(A, B, fixed=fixed, max_search=max_search) is not None
               for fixed in ({p: p2, q: q2}, {p: q2, q: p2}))


def is_torelli_curve(X, max_search=DEFAULT_MAX_SEARCH):
    """ every C1-set has a distinguished piece such that the other pieces admit swaps of their two
    gluing points and are pairwise isomorphic as marked curves, or has three pieces that all admit swaps """
    _require_fiber_input(X)
    for block in c1_partition(dual_graph(X)):
        h = len(block)
        if h < 2:
            continue
        pieces = _pieces_at(X, block)
        swaps = [_has_swap(piece, p, q, max_search) for piece, (p, q) in pieces]
        if h == 3 and all(swaps):
            continue
        if not any(_torelli_at(pieces, swaps, k, max_search) for k in range(h)):
            return False
    return True


def _torelli_at(pieces, swaps, k, max_search):
    others = [i for i in range(len(pieces)) if i != k]
    if not all(swaps[i] for i in others):
        return False
    first, pair = pieces[others[0]]
    # marked isomorphism is an equivalence relation, so comparing with the first piece suffices
    return all(_marked_isomorphic(first, pair, pieces[i][0], pieces[i][1], max_search) for i in others[1:])


def torelli_image_pieces(X):
    """ positive-genus pieces of the normalization at the separating nodes, points forgotten, stabilized """
    pieces = []
    for piece in _tilde_pieces(X):
        if genus(piece) > 0:
            pieces.append(stabilize(forget_points(piece, piece.free_points)))
    return pieces


def torelli_image_equivalent(X, X2, max_search=DEFAULT_MAX_SEARCH):
    _require_stable(X)
    _require_stable(X2)
    if genus(X) != genus(X2):
        return False
    pieces, pieces2 = torelli_image_pieces(X), torelli_image_pieces(X2)
    return _match_pieces(pieces, pieces2, lambda A, B: _c1_witness(A, B, max_search)) is not None
