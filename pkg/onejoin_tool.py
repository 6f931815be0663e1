#!/usr/bin/env python3
import argparse
import asyncio
import logging
import re
import sys
from pathlib import Path

import output_formatters
from model import Graph, SearchBudget
from model.codec import (cr_result_to_dict, decision_to_dict, decode_graph_file_content, dumps, encode_edge_json,
                         encode_graph6, family_to_dict, graph_to_dot, verdict_to_dict, witness_to_dict, to_dot)
from onejoin.characterization import decide_join
from onejoin.config import budget_for, load_config, setup_logging
from onejoin.crossing_number import crossing_number
from onejoin.expressions import parse_graph
from onejoin.families import FAMILIES, generate
from onejoin.harness import VerificationHarness, write_report
from onejoin.solver import is_one_planar, is_outer_one_planar, planarize

EXIT_DEFINITE = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2

log = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with status 1; status 2 means an inconclusive answer"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f'{self.prog}: error: {message}\n')


def read_graph(source: str) -> Graph:
    """A graph6 or edge-JSON file, or a graph-name expression such as "C4" or "K_{4,3,1}" """
    path = Path(source).expanduser()
    if path.is_file():
        return decode_graph_file_content(path.read_bytes())
    return parse_graph(source)


def configured_budget(args, section: str = 'default') -> SearchBudget:
    budget = budget_for(args.config, section=section)
    return SearchBudget(args.max_nodes or budget.max_nodes, args.max_seconds or budget.max_seconds)


def emit(args, entity, obj: dict):
    if args.output_format == 'json':
        print(dumps(obj))
    else:
        print(args.formatter.format_entity(entity))


def sidecar_path(source: str, suffix: str) -> Path:
    path = Path(source).expanduser()
    if path.is_file():
        return path.with_name(path.name + suffix)
    return Path.cwd() / (re.sub(r'[^0-9A-Za-z_.-]+', '_', source) + suffix)


def handle_test(args):
    graph = read_graph(args.input)
    budget = configured_budget(args)
    decide = is_outer_one_planar if args.outer else is_one_planar
    verdict = decide(graph, budget, max_automorphisms=int(args.config['symmetry']['max_automorphisms']))
    emit(args, verdict, verdict_to_dict(verdict, args.timings))

    if verdict.witness is not None:
        witness_path = sidecar_path(args.input, '.witness.json')
        witness_path.write_text(dumps(witness_to_dict(verdict.witness)) + '\n')
        log.info(f'witness written to {witness_path}')
    if args.dot:
        dot_path = sidecar_path(args.input, '.dot')
        if verdict.witness is not None:
            dot_path.write_text(to_dot(planarize(graph, verdict.witness.plan)))
        else:
            dot_path.write_text(graph_to_dot(graph, Path(args.input).stem))
        log.info(f'drawing written to {dot_path}')
    return EXIT_DEFINITE if verdict.answer.is_definite else EXIT_INCONCLUSIVE


def handle_join(args):
    g, h = read_graph(args.left), read_graph(args.right)
    decision = decide_join(g, h, configured_budget(args), with_witness=args.witness)
    emit(args, decision, decision_to_dict(decision, args.timings))
    return EXIT_DEFINITE if decision.answer.is_definite else EXIT_INCONCLUSIVE


def handle_cr(args):
    graph = read_graph(args.input)
    result = crossing_number(graph, args.max, configured_budget(args, 'crossing_number'),
                             max_automorphisms=int(args.config['symmetry']['max_automorphisms']))
    emit(args, result, cr_result_to_dict(result, args.timings))
    return EXIT_DEFINITE if result.value is not None else EXIT_INCONCLUSIVE


def handle_gen(args):
    instance = generate(args.family, args.params)
    target = Path(args.target).expanduser()
    target.mkdir(parents=True, exist_ok=True)
    stem = re.sub(r'[^0-9A-Za-z_.-]+', '_', instance.name).strip('_') or args.family

    if args.graph_format == 'graph6':
        graph_path = target / f'{stem}.g6'
        graph_path.write_text(encode_graph6(instance.graph) + '\n')
    else:
        graph_path = target / f'{stem}.json'
        graph_path.write_text(encode_edge_json(instance.graph) + '\n')
    (target / f'{stem}.expected.json').write_text(dumps(family_to_dict(instance)) + '\n')
    if instance.witness is not None:
        graph_path.with_name(graph_path.name + '.witness.json').write_text(
            dumps(witness_to_dict(instance.witness)) + '\n')

    emit(args, instance, family_to_dict(instance))
    log.info(f'{instance.name} written to {graph_path}')
    return EXIT_DEFINITE


def handle_verify_paper(args):
    config = args.config
    report_config = config['report']
    include_timings = args.timings or bool(report_config.get('include_timings'))
    output_dir = Path(args.target or report_config.get('output_dir') or '.').expanduser()

    async def verify():
        result = await VerificationHarness(config).run(args.only)
        markdown = output_formatters.Markdown(include_timings).format_entity(result)
        await write_report(result, output_dir, markdown, include_timings)
        return result

    report = asyncio.run(verify())

    if args.output_format == 'json':
        print(dumps({'profile': report.profile, 'summary': report.totals, 'output_dir': str(output_dir)}))
    else:
        print(args.formatter.format_entity(report))
    return EXIT_ERROR if report.failed else EXIT_DEFINITE


def add_budget_arguments(parser):
    parser.add_argument('--max-nodes',
                        type=int,
                        default=None,
                        help='Search node budget. Default is taken from the profile configuration')
    parser.add_argument('--max-seconds',
                        type=float,
                        default=None,
                        help='Search time budget in seconds. Default is taken from the profile configuration')


def setup_argparser():
    parser = ArgumentParser(description='1-planarity toolkit for graphs and their joins')
    parser.add_argument('--profile',
                        choices=('quick', 'full'),
                        default=None,
                        help='Budget profile. If not specified then the value of ONEJOIN_PROFILE system variable '
                             'is used, "quick" otherwise')
    parser.add_argument('--format',
                        dest='output_format',
                        choices=('json', 'text'),
                        default='json',
                        help='Output format on stdout. Default is %(default)s')
    parser.add_argument('--timings',
                        action='store_true',
                        help='Include elapsed times in the output. Default is %(default)s')
    parser.set_defaults(formatter=output_formatters.HumanReadable())
    subparsers = parser.add_subparsers(title='Available commands',
                                       description='For additional help use "<command> -h"')

    parser_test = subparsers.add_parser('test',
                                        help='Decide whether a graph is 1-planar',
                                        description='Decide whether a graph is 1-planar. A witness drawing is written '
                                                    'next to the input with the ".witness.json" suffix')
    parser_test.add_argument('input',
                             help='graph6 or edge-JSON file, or a graph name such as "K_{4,3,1}"')
    parser_test.add_argument('--outer',
                             action='store_true',
                             help='Decide outer-1-planarity instead. Default is %(default)s')
    parser_test.add_argument('--dot',
                             action='store_true',
                             help='Also write Graphviz DOT: the planarization of the witness, or the input graph '
                                  'when there is none. '
                                  'Default is %(default)s')
    add_budget_arguments(parser_test)
    parser_test.set_defaults(func=handle_test)

    parser_join = subparsers.add_parser('join',
                                        help='Decide whether the join G + H is 1-planar',
                                        description='Decide whether the join G + H is 1-planar and report the reason')
    parser_join.add_argument('left',
                             help='G: graph file or graph name')
    parser_join.add_argument('right',
                             help='H: graph file or graph name')
    parser_join.add_argument('--witness',
                             action='store_true',
                             help='Run the solver for a drawing of positive answers. Default is %(default)s')
    add_budget_arguments(parser_join)
    parser_join.set_defaults(func=handle_join)

    parser_cr = subparsers.add_parser('cr',
                                      help='Compute the crossing number',
                                      description='Compute the crossing number, or an interval when the budget '
                                                  'runs out')
    parser_cr.add_argument('input',
                           help='graph file or graph name')
    parser_cr.add_argument('--max',
                           type=int,
                           default=6,
                           help='Largest crossing count to try. Default is %(default)s')
    add_budget_arguments(parser_cr)
    parser_cr.set_defaults(func=handle_cr)

    parser_gen = subparsers.add_parser('gen',
                                       help='Generate a graph family instance',
                                       description=f'Generate a graph family instance with its expected properties. '
                                                   f'Families: {", ".join(FAMILIES)}, named <graph name>')
    parser_gen.add_argument('family',
                            help='Family name')
    parser_gen.add_argument('params',
                            nargs='*',
                            help='Family parameters')
    parser_gen.add_argument('-t',
                            '--target',
                            type=str,
                            default='.',
                            help='Target dir for generated files. Default is %(default)s')
    parser_gen.add_argument('--graph-format',
                            choices=('graph6', 'edge-json'),
                            default='graph6',
                            help='Graph file format. Default is %(default)s')
    parser_gen.set_defaults(func=handle_gen)

    parser_verify = subparsers.add_parser('verify-paper',
                                          help='Run the verification suite and write the report',
                                          description='Run the verification suite and write JSON and markdown reports')
    profile_group = parser_verify.add_mutually_exclusive_group()
    profile_group.add_argument('--profile',
                               choices=('quick', 'full'),
                               dest='verify_profile',
                               default=None,
                               help='Budget profile of this run')
    profile_group.add_argument('--quick',
                               action='store_const',
                               const='quick',
                               dest='verify_profile',
                               help='Shortcut for --profile quick')
    parser_verify.add_argument('--only',
                               nargs='+',
                               metavar='ClaimID',
                               default=None,
                               help='Claim ids or id prefixes to run')
    parser_verify.add_argument('-t',
                               '--target',
                               type=str,
                               default=None,
                               help='Target dir for the report. Default is taken from the configuration')
    parser_verify.set_defaults(func=handle_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = setup_argparser()
    args = parser.parse_args(argv)
    if 'func' not in args:
        parser.print_help()
        return EXIT_ERROR

    try:
        args.config = load_config(getattr(args, 'verify_profile', None) or args.profile)
        setup_logging(args.config.get('logging') or {})
        return args.func(args)
    except ValueError as e:
        log.debug(f'{e.__class__.__name__}: {e}')
        print(f'{parser.prog}: error: {e}', file=sys.stderr)
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
