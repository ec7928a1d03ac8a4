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

""" Reports as ordered dicts of plain values, rendered as `key: value` lines or JSON. """

import json
from collections import OrderedDict

from .c1 import c1_partition, format_edge_set
from .curve import (dual_graph, fiber_dimension, has_finite_fiber, separating_nodes, tilde_profile,
                    topotype_dimension)
from .graph_core import (connected_components, curve_genus, first_betti, is_connected, is_stable,
                         is_three_edge_connected, separating_edges)
from .strata import stratum_codim, stratum_dim, stratum_label, theta_components
from .utils import PreconditionError


def format_orientation(o):
    directions = ','.join('{}:{}>{}'.format(e, tail, head) for e, (tail, head) in o.directions)
    return '{} | {}'.format(format_edge_set(o.support), directions)


def format_class(cls):
    return '{} | ({})'.format(format_edge_set(cls.support), ','.join(str(n) for _, n in cls.outdegrees))


def format_multidegree(d):
    return ','.join('{}:{}'.format(v, n) for v, n in d.values)


def format_witness(mapping):
    return ['{}\t{}'.format(a, b) for a, b in sorted(mapping.items())]


def graph_report(G):
    report = OrderedDict()
    report['genus'] = curve_genus(G)
    report['b1'] = first_betti(G)
    report['components'] = len(connected_components(G))
    report['separating_edges'] = sorted(separating_edges(G))
    if is_connected(G):
        report['stable'] = is_stable(G)
        report['three_edge_connected'] = is_three_edge_connected(G)
        if not report['separating_edges']:
            report['c1_sets'] = [list(b) for b in c1_partition(G)]
    return report


def curve_report(X):
    G = dual_graph(X)
    report = graph_report(G)
    if not is_connected(G):
        return report
    profile = tilde_profile(X)
    report['separating_nodes'] = sorted(separating_nodes(X))
    report['tilde_profile'] = OrderedDict(profile._asdict())
    try:
        report['fiber_dimension'] = fiber_dimension(X)
        report['topotype_dimension'] = topotype_dimension(X)
        report['finite_fiber'] = has_finite_fiber(X)
    except PreconditionError:
        pass
    return report


def strata_report(G, strata):
    return OrderedDict([('strata', [OrderedDict([('support', format_edge_set(s.support)),
                                                 ('multidegree', str(s.multidegree)),
                                                 ('dim', stratum_dim(G, s)),
                                                 ('codim', stratum_codim(G, s)),
                                                 ('theta_components', theta_components(G, s))])
                                    for s in strata])])


def poset_report(kind, poset, label):
    return OrderedDict([('kind', kind),
                        ('elements', [label(x) for x in poset]),
                        ('covers', ['{} > {}'.format(label(a), label(b)) for a, b in poset.covers])])


def strata_labels(G):
    return lambda s: stratum_label(G, s)


def _human_value(value):
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, dict):
        return ', '.join('{}={}'.format(k, _human_value(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        if not value:
            return 'none'
        if all(isinstance(v, (list, tuple)) for v in value):
            return '{' + ','.join('{' + ','.join(map(str, v)) + '}' for v in value) + '}'
        return ', '.join(_human_value(v) for v in value)
    return str(value)


def render(report, fmt='human', bare=False):
    """ json: sorted keys; human: one `key: value` line per field, or the bare value of a one-field report """
    if fmt == 'json':
        return json.dumps(report, sort_keys=True, indent=2) + '\n'
    if bare and len(report) == 1:
        value = next(iter(report.values()))
        if isinstance(value, list):
            return ''.join('{}\n'.format(_human_value(v)) for v in value)
        return '{}\n'.format(_human_value(value))
    lines = []
    for key, value in report.items():
        if isinstance(value, list) and value and (isinstance(value[0], dict) or ' ' in str(value[0])):
            lines.append('{}:'.format(key))
            lines.extend('  {}'.format(_human_value(v)) for v in value)
        else:
            lines.append('{}: {}'.format(key, _human_value(value)))
    return '\n'.join(lines) + '\n'
