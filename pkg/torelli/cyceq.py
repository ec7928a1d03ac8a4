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
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Tuple

from .graph_core import (DecGraph, connected_components, delete_edges, first_betti, fundamental_cycles,
                         is_connected, is_isomorphic, isomorphism_bucket, require_bridge_free)
from .utils import DEFAULT_MAX_CYCLIC_EDGES, DEFAULT_MAX_ORBIT, PreconditionError, check_cap

logger = logging.getLogger(__file__)


@dataclass(frozen=True)
class CycleSpace:
    """ Cycle space over GF(2); supports are kept as bitmasks over the ambient edge order. """
    edges: Tuple[str, ...]
    basis: Tuple[FrozenSet[str], ...]

    @cached_property
    def bit(self):
        return {e: 1 << i for i, e in enumerate(self.edges)}

    def to_mask(self, support):
        mask = 0
        for e in support:
            mask |= self.bit[e]
        return mask

    def to_support(self, mask):
        return frozenset(e for i, e in enumerate(self.edges) if mask >> i & 1)

    @cached_property
    def _echelon(self):
        pivots = {}
        for b in self.basis:
            v = _reduce(self.to_mask(b), pivots)
            assert v, 'basis is not independent'
            pivots[v.bit_length() - 1] = v
        return pivots

    def contains(self, support):
        return _reduce(self.to_mask(support), self._echelon) == 0

    def element_masks(self):
        masks = [self.to_mask(b) for b in self.basis]
        for coefficients in itertools.product((0, 1), repeat=len(masks)):
            mask = 0
            for c, m in zip(coefficients, masks):
                if c:
                    mask ^= m
            yield mask


def _reduce(vector, pivots):
    while vector:
        top = vector.bit_length() - 1
        if top not in pivots:
            return vector
        vector ^= pivots[top]
    return vector


def cycle_space(G):
    basis = tuple(frozenset(e for e, _ in cycle) for cycle in fundamental_cycles(G))
    return CycleSpace(G.edge_ids, basis)


def is_circuit(G, support):
    """ support is the edge set of a connected 2-regular subgraph """
    if not support:
        return False
    edges = tuple((e, ends) for e, ends in G.edges if e in support)
    degree = Counter()
    for _, (a, b) in edges:
        degree[a] += 1
        degree[b] += 1
    if any(d != 2 for d in degree.values()):
        return False
    sub = DecGraph(tuple((v, g) for v, g in G.vertices if v in degree), edges)
    return is_connected(sub)


def circuits(G):
    """ all circuits of G as frozensets, sorted by (size, edges) """
    space = cycle_space(G)
    found = set()
    for mask in space.element_masks():
        support = space.to_support(mask)
        if is_circuit(G, support):
            found.add(support)
    return sorted(found, key=lambda c: (len(c), sorted(c)))


def is_cyclic_bijection(G, G2, eps):
    """ eps maps the cycle space of G onto the cycle space of G2 and circuits onto circuits """
    if len(G.edges) != len(G2.edges):
        raise PreconditionError('edge counts differ')
    if set(eps) != set(G.edge_ids) or set(eps.values()) != set(G2.edge_ids):
        return False
    if first_betti(G) != first_betti(G2):
        return False
    inverse = {b: a for a, b in eps.items()}
    space, space2 = cycle_space(G), cycle_space(G2)
    if not all(space2.contains({eps[e] for e in b}) for b in space.basis):
        return False
    if not all(space.contains({inverse[e] for e in b}) for b in space2.basis):
        return False
    circuits2 = set(circuits(G2))
    return all(frozenset(eps[e] for e in c) in circuits2 for c in circuits(G))


def _edge_signatures(G, cycles):
    membership = {e: frozenset(i for i, c in enumerate(cycles) if e in c) for e in G.edge_ids}
    class_size = Counter(membership.values())
    return {e: (class_size[membership[e]], len(membership[e])) for e in G.edge_ids}


def cyclically_equivalent(G, G2, max_edges=DEFAULT_MAX_CYCLIC_EDGES):
    """ lexicographically first edge bijection carrying circuits onto circuits, or None """
    if len(G.edges) != len(G2.edges) or first_betti(G) != first_betti(G2):
        return None
    check_cap('edges', len(G.edges), max_edges)
    cycles, cycles2 = circuits(G), circuits(G2)
    if sorted(map(len, cycles)) != sorted(map(len, cycles2)):
        return None
    signature, signature2 = _edge_signatures(G, cycles), _edge_signatures(G2, cycles2)
    if sorted(signature.values()) != sorted(signature2.values()):
        return None

    targets = set(cycles2)
    order = list(G.edge_ids)
    position = {e: i for i, e in enumerate(order)}
    # circuits to check once their last edge (in search order) is assigned
    closing = {}
    for c in cycles:
        closing.setdefault(max(c, key=position.get), []).append(c)
    candidates = {e: [f for f in G2.edge_ids if signature2[f] == signature[e]] for e in order}

    eps = {}
    used = set()

    def search(i):
        if i == len(order):
            return True
        e = order[i]
        for f in candidates[e]:
            if f in used:
                continue
            eps[e] = f
            used.add(f)
            if all(frozenset(eps[x] for x in c) in targets for c in closing.get(e, ())):
                if search(i + 1):
                    return True
            del eps[e]
            used.discard(f)
        return False

    return dict(eps) if search(0) else None


def separating_pairs(G):
    """ pairs (e1, e2), e1 < e2, whose joint deletion disconnects G """
    require_bridge_free(G)
    return tuple((e1, e2) for e1, e2 in itertools.combinations(G.edge_ids, 2)
                 if not is_connected(delete_edges(G, {e1, e2})))


def twist(G, pair):
    """ re-attach the two edges of a separating pair crosswise between the two sides """
    e1, e2 = sorted(pair)
    if (e1, e2) not in separating_pairs(G):
        raise PreconditionError('not a separating pair: {}, {}'.format(e1, e2))
    side_a, side_b = (set(c) for c in connected_components(delete_edges(G, {e1, e2})))

    def split(e):
        x, y = G.ends[e]
        return (x, y) if x in side_a else (y, x)

    v1a, v1b = split(e1)
    v2a, v2b = split(e2)
    assert v1b in side_b and v2b in side_b
    new_ends = {e1: (v1a, v2b), e2: (v2a, v1b)}
    return DecGraph(G.vertices, tuple((e, new_ends.get(e, ends)) for e, ends in G.edges))


def strongly_cyclically_equivalent(G, G2, max_orbit=DEFAULT_MAX_ORBIT):
    """ breadth-first search of the twist orbit of G, up to genus-preserving isomorphism """
    require_bridge_free(G)
    require_bridge_free(G2)
    if isomorphism_bucket(G)[:2] != isomorphism_bucket(G2)[:2]:
        return False
    if sorted(G.genera.values()) != sorted(G2.genera.values()):
        return False
    if is_isomorphic(G, G2):
        return True

    seen = {isomorphism_bucket(G): [G]}
    queue = deque([G])
    size = 1
    while queue:
        H = queue.popleft()
        for pair in separating_pairs(H):
            K = twist(H, pair)
            bucket = seen.setdefault(isomorphism_bucket(K), [])
            if any(is_isomorphic(K, L) for L in bucket):
                continue
            if is_isomorphic(K, G2):
                logger.debug('twist orbit reached target after {} states'.format(size))
                return True
            bucket.append(K)
            queue.append(K)
            size += 1
            check_cap('twist orbit', size, max_orbit)
    logger.debug('twist orbit exhausted with {} states'.format(size))
    return False
