import argparse
import json
import logging
import sys
from collections import OrderedDict

from pydantic import ValidationError

from config import get_caps_config, get_report_config
from torelli.c1 import c1_partition, format_edge_set, sp_poset
from torelli.curve import (build_curve, curve_to_json, dual_graph, dump_curve, enumerate_fiber, fiber_bound,
                           fiber_bound_global, fiber_dimension, fiber_dimension_bounds, is_c1_equivalent,
                           is_torelli_curve, stabilize, tilde_profile, topotype_dimension,
                           torelli_image_equivalent)
from torelli.cyceq import cyclically_equivalent, strongly_cyclically_equivalent
from torelli.graph_core import build_graph, delete_edges
from torelli.homology import eta_matrix, is_t_equivalent
from torelli.orientation import op_poset, opbar_poset, stable_multidegrees, totally_cyclic_orientations
from torelli.report import (curve_report, format_class, format_multidegree, format_orientation, format_witness,
                            graph_report, poset_report, render, strata_labels, strata_report)
from torelli.strata import st_elements, st_poset, strata_dot
from torelli.utils import InputError, PreconditionError, SizeCapExceeded, read_json, write_text

logger = logging.getLogger(__file__)

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def load_input(path):
    """ (graph, curve) from a graph or curve file; curve is None for graph files """
    data = read_json(path)
    if isinstance(data, dict) and 'components' in data:
        curve = build_curve(data)
        return dual_graph(curve), curve
    return build_graph(data), None


def load_curve_input(path):
    _, curve = load_input(path)
    if curve is None:
        raise InputError('{} is not a curve file'.format(path))
    return curve


def _support(text):
    return frozenset(e for e in (text or '').split(',') if e)


def cmd_analyze(args, caps):
    G, X = load_input(args.path)
    return (curve_report(X) if X is not None else graph_report(G)), EXIT_OK


def cmd_c1_sets(args, caps):
    G, _ = load_input(args.path)
    return OrderedDict([('c1_sets', [format_edge_set(b) for b in c1_partition(G)])]), EXIT_OK


def cmd_poset(args, caps):
    G, _ = load_input(args.path)
    if args.kind == 'sp':
        poset, label = sp_poset(G, max_edges=caps.max_edges), format_edge_set
    elif args.kind == 'op':
        poset, label = op_poset(G, max_edges=caps.max_edges), format_orientation
    elif args.kind == 'opbar':
        poset, label = opbar_poset(G, max_edges=caps.max_edges), format_class
    else:
        poset, label = st_poset(G, max_edges=caps.max_edges), strata_labels(G)
    if args.dot:
        text = strata_dot(G, poset) if args.kind == 'st' else poset.export_dot(labels=label)
        write_text(args.dot, text)
        logger.info('wrote {}'.format(args.dot))
    return poset_report(args.kind, poset, label), EXIT_OK


def cmd_orientations(args, caps):
    G, _ = load_input(args.path)
    orientations = totally_cyclic_orientations(G, _support(args.support))
    return OrderedDict([('orientations', [format_orientation(o) for o in orientations])]), EXIT_OK


def cmd_multidegrees(args, caps):
    G, _ = load_input(args.path)
    degrees = sorted(stable_multidegrees(delete_edges(G, _support(args.support))))
    return OrderedDict([('multidegrees', [format_multidegree(d) for d in degrees])]), EXIT_OK


def cmd_strata(args, caps):
    G, _ = load_input(args.path)
    return strata_report(G, st_elements(G, max_edges=caps.max_edges)), EXIT_OK


def cmd_fiber(args, caps):
    X = load_curve_input(args.path)
    if args.size:
        fiber = enumerate_fiber(X, max_fiber=caps.max_fiber, max_search=caps.max_search, progress=caps.progress)
        return OrderedDict([('size', len(fiber))]), EXIT_OK
    if args.enumerate:
        fiber = enumerate_fiber(X, max_fiber=caps.max_fiber, max_search=caps.max_search, progress=caps.progress)
        if args.format == 'json':
            return OrderedDict([('curves', [dump_curve(Y) for Y in fiber])]), EXIT_OK
        return OrderedDict([('curves', [json.dumps(dump_curve(Y), sort_keys=True) for Y in fiber])]), EXIT_OK
    if args.bounds:
        return OrderedDict([('gluing_bound', fiber_bound(X)), ('genus_bound', fiber_bound_global(X))]), EXIT_OK
    bounds = fiber_dimension_bounds(X)
    report = OrderedDict([('fiber_dimension', fiber_dimension(X)),
                          ('topotype_dimension', topotype_dimension(X)),
                          ('tilde_profile', OrderedDict(tilde_profile(X)._asdict())),
                          ('bounds', OrderedDict(bounds._asdict()))])
    return report, EXIT_OK


def cmd_torelli(args, caps):
    X = load_curve_input(args.path)
    verdict = is_torelli_curve(X, max_search=caps.max_search)
    return OrderedDict([('torelli_curve', verdict)]), EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_torelli_image(args, caps):
    X, X2 = load_curve_input(args.first), load_curve_input(args.second)
    verdict = torelli_image_equivalent(X, X2, max_search=caps.max_search)
    return OrderedDict([('same_torelli_image', verdict)]), EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_equiv(args, caps):
    (G, X), (G2, X2) = load_input(args.first), load_input(args.second)
    witness = None
    if args.cyclic:
        witness = cyclically_equivalent(G, G2, max_edges=caps.max_cyclic_edges)
        verdict = witness is not None
    elif args.strong:
        verdict = strongly_cyclically_equivalent(G, G2, max_orbit=caps.max_orbit)
    else:
        if X is None or X2 is None:
            raise InputError('C1- and T-equivalence compare curve files')
        if args.c1:
            verdict, witness = is_c1_equivalent(X, X2, max_search=caps.max_search)
        else:
            verdict = is_t_equivalent(X, X2, max_fiber=caps.max_fiber, max_search=caps.max_search,
                                      max_cyclic_edges=caps.max_cyclic_edges)
    report = OrderedDict([('equivalent', verdict)])
    if witness is not None:
        report['witness'] = format_witness(witness)
    return report, EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_stabilize(args, caps):
    return json.loads(curve_to_json(stabilize(load_curve_input(args.path)))), EXIT_OK


def cmd_eta(args, caps):
    return eta_matrix(load_curve_input(args.path)).to_tsv(), EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['human', 'json'], default=None, help="Report format.")
    common.add_argument('--max-edges', type=int, default=None, help="Cap on edges for SP/OP/ST enumeration.")
    common.add_argument('--max-orbit', type=int, default=None, help="Cap on twist-orbit states.")
    common.add_argument('--max-fiber', type=int, default=None, help="Cap on gluing data and automorphisms.")
    common.add_argument('--verbose', action='store_true', help="Log at INFO level.")
    common.add_argument('--progress', action='store_true', help="Show progress bars.")

    parser = argparse.ArgumentParser(prog='torelli', description="Combinatorics of the Torelli map for stable curves.")
    verbs = parser.add_subparsers(dest='verb', required=True)

    def verb(name, handler, help):
        sub = verbs.add_parser(name, parents=[common], help=help)
        sub.set_defaults(handler=handler)
        return sub

    verb('analyze', cmd_analyze, "Invariants of a graph or curve.").add_argument('path')
    verb('c1-sets', cmd_c1_sets, "C1-partition of the dual graph.").add_argument('path')

    poset = verb('poset', cmd_poset, "SP, OP, OP-bar or ST poset.")
    poset.add_argument('path')
    poset.add_argument('--kind', choices=['sp', 'op', 'opbar', 'st'], required=True)
    poset.add_argument('--dot', default=None, help="Write the covering relation as DOT to this path.")

    orientations = verb('orientations', cmd_orientations, "Totally cyclic orientations.")
    orientations.add_argument('path')
    orientations.add_argument('--support', default='', help="Comma-separated deleted edges.")

    multidegrees = verb('multidegrees', cmd_multidegrees, "Stable multidegrees.")
    multidegrees.add_argument('path')
    multidegrees.add_argument('--support', default='', help="Comma-separated deleted edges.")

    verb('strata', cmd_strata, "Strata with dimensions.").add_argument('path')

    fiber = verb('fiber', cmd_fiber, "Fiber of the Torelli map through a curve.")
    fiber.add_argument('path')
    what = fiber.add_mutually_exclusive_group(required=True)
    for flag in ('--size', '--enumerate', '--bounds', '--dimension'):
        what.add_argument(flag, action='store_true')

    torelli = verb('torelli', cmd_torelli, "Torelli-curve criterion.")
    torelli.add_argument('path')
    torelli.add_argument('--check', action='store_true', required=True)

    image = verb('torelli-image', cmd_torelli_image, "Do two stable curves have the same Torelli image?")
    image.add_argument('first')
    image.add_argument('second')

    equiv = verb('equiv', cmd_equiv, "Equivalence of two graphs or curves.")
    equiv.add_argument('first')
    equiv.add_argument('second')
    notion = equiv.add_mutually_exclusive_group(required=True)
    for flag in ('--cyclic', '--strong', '--c1', '--t'):
        notion.add_argument(flag, action='store_true')

    verb('stabilize', cmd_stabilize, "Stabilization of a curve.").add_argument('path')

    eta = verb('eta', cmd_eta, "Matrix of the map from cycles to divisors, as TSV.")
    eta.add_argument('path')
    eta.add_argument('--orientation', choices=['default'], default='default')
    return parser


def main(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)

    logging.basicConfig(format='%(asctime)s - %(levelname)s - %(name)s -   %(message)s',
                        datefmt='%m/%d/%Y %H:%M:%S',
                        level=logging.INFO if args.verbose else logging.WARNING)

    caps = get_caps_config()
    report_config = get_report_config()
    caps.max_edges = args.max_edges or caps.max_edges
    caps.max_orbit = args.max_orbit or caps.max_orbit
    caps.max_fiber = args.max_fiber or caps.max_fiber
    caps.progress = args.progress or report_config.progress
    args.format = args.format or report_config.format
    if args.verb == 'poset':
        args.dot = args.dot or report_config.dot_path

    try:
        report, code = args.handler(args, caps)
    except (InputError, PreconditionError, ValidationError, OSError, ValueError) as e:
        logger.error('{}: {}'.format(type(e).__name__, e))
        return EXIT_INPUT
    except SizeCapExceeded as e:
        logger.error('{}'.format(e))
        return EXIT_CAP

    if isinstance(report, str):
        stdout.write(report)
    elif args.verb == 'stabilize':
        stdout.write(json.dumps(report, sort_keys=True, indent=2) + '\n')
    else:
        stdout.write(render(report, args.format, bare=args.verb in ('fiber', 'c1-sets', 'orientations',
                                                                    'multidegrees')))
    return code


if __name__ == '__main__':
    sys.exit(main())
