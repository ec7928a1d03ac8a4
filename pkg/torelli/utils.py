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
import math

DEFAULT_MAX_EDGES = 16
DEFAULT_MAX_CYCLIC_EDGES = 10
DEFAULT_MAX_ORBIT = 10 ** 5
DEFAULT_MAX_FIBER = 10 ** 4
DEFAULT_MAX_SEARCH = 10 ** 6


class TorelliError(Exception):
    pass


class InputError(TorelliError, ValueError):
    """ Malformed graph or curve description; the message names the offending id. """


class PreconditionError(TorelliError):
    pass


class SizeCapExceeded(TorelliError):
    def __init__(self, what, size, cap):
        super(SizeCapExceeded, self).__init__('{} exceeds cap: {} > {}'.format(what, size, cap))
        self.what = what
        self.size = size
        self.cap = cap


def check_cap(what, size, cap):
    if cap is not None and size > cap:
        raise SizeCapExceeded(what, size, cap)


def sorted_blocks(classes):
    """ blocks of a networkx UnionFind as sorted tuples, ordered by their least element """
    return sorted((tuple(sorted(block)) for block in classes.to_sets()), key=lambda b: b[0])


def compose(p, q):
    """ (p o q)[i] = p[q[i]] for permutations stored as image tuples """
    return tuple(p[i] for i in q)


def close_group(generators, degree):
    """ closure of a set of permutations of range(degree) under composition """
    identity = tuple(range(degree))
    group = {identity}
    frontier = [identity]
    generators = [tuple(g) for g in generators]
    for g in generators:
        assert sorted(g) == list(identity), 'not a permutation: {}'.format(g)
    while frontier:
        new_frontier = []
        for h in frontier:
            for g in generators:
                k = compose(g, h)
                if k not in group:
                    group.add(k)
                    new_frontier.append(k)
        frontier = new_frontier
    return frozenset(group)


def symmetric_group(degree):
    return frozenset(itertools.permutations(range(degree)))


def half_factorial_ceil(n):
    return -(-math.factorial(n) // 2)


def read_json(path):
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)


def write_text(path, text):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
