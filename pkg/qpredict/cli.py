# -*- coding: utf-8 -*-
"""
:authors: qpredict contributors
:license: Apache License, Version 2.0, see LICENSE file

:copyright: (c) 2026 qpredict contributors
"""

from __future__ import print_function

import argparse
import sys

from .config import parse_config, read_state, with_overrides
from .divergence import quantum_alpha_divergence
from .enums import ExitStatus, SweepKey
from .exceptions import QPredictError, UsageError
from .experiments import run, save_csv, sweep
from .utils import enable_debug_mode, format_number, parse_number_list

PROG = 'qpredict'


class ArgumentParser(argparse.ArgumentParser):
    """ Ошибки разбора аргументов превращаются в :class:`UsageError` """

    def error(self, message):
        raise UsageError(message)


def _u64(text):
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError('invalid seed {!r}'.format(text))

    if not 0 <= value <= 0xFFFFFFFFFFFFFFFF:
        raise argparse.ArgumentTypeError('seed must fit in 64 bits')

    return value


def _number_list(text):
    try:
        return parse_number_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError('invalid number list {!r}'.format(text))


def build_parser():
    common = ArgumentParser(add_help=False)
    common.add_argument('--seed', type=_u64, help='seed of the perturbation zoo')
    common.add_argument('--out', help='CSV output path (default: stdout)')
    common.add_argument('--max-dim', type=int, help='limit on d^N and d^M')
    common.add_argument('--alphas', type=_number_list,
                        help='override the alpha list, e.g. "-1,0,0.5"')
    common.add_argument('--inject-suboptimal-bayes', action='store_true',
                        help='test hook: corrupt the Bayes operator')
    common.add_argument('--no-timing', action='store_true',
                        help='write wall_time_s = 0 for byte-stable output')
    common.add_argument('--verbose', action='store_true',
                        help='debug logging to stderr')

    parser = ArgumentParser(
        prog=PROG,
        description='Numerical verification of generalized Bayesian '
                    'predictive density operators'
    )
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    verify = commands.add_parser(
        'verify', parents=[common], help='verify a scenario'
    )
    verify.add_argument('config', help='scenario file or builtin:<name>')

    sweep_parser = commands.add_parser(
        'sweep', parents=[common], help='run a scenario for a list of values'
    )
    sweep_parser.add_argument('config', help='scenario file or builtin:<name>')
    sweep_parser.add_argument(
        '--vary', required=True, choices=[k.value for k in SweepKey]
    )
    sweep_parser.add_argument('--values', required=True, type=_number_list)

    divergence = commands.add_parser(
        'divergence', help='quantum alpha-divergence of two state files'
    )
    divergence.add_argument('state_a')
    divergence.add_argument('state_b')
    divergence.add_argument('--alpha', required=True, type=float)
    divergence.add_argument('--verbose', action='store_true')

    return parser


def _load(args):
    config = parse_config(args.config)

    return with_overrides(
        config,
        seed=args.seed,
        output=args.out,
        max_dim=args.max_dim,
        alphas=args.alphas,
    )


def _report(config, result):
    save_csv(result.rows, config.output)

    for failure in result.failures:
        print('{}: {}: {}'.format(PROG, config.id, failure), file=sys.stderr)

    return result.status


def command_verify(args):
    config = _load(args)

    result = run(
        config,
        inject_suboptimal_bayes=args.inject_suboptimal_bayes,
        timing=not args.no_timing
    )

    return _report(config, result)


def command_sweep(args):
    config = _load(args)

    result = sweep(
        config, args.vary, args.values,
        inject_suboptimal_bayes=args.inject_suboptimal_bayes,
        timing=not args.no_timing
    )

    return _report(config, result)


def command_divergence(args):
    value = quantum_alpha_divergence(
        read_state(args.state_a), read_state(args.state_b), args.alpha
    )

    print(format_number(value))

    return ExitStatus.OK


COMMANDS = {
    'verify': command_verify,
    'sweep': command_sweep,
    'divergence': command_divergence,
}


def main(argv=None):
    """ Точка входа командной строки

    :returns: 0 — все проверки прошли, 1 — ошибка аргументов или сценария,
        2 — нарушено утверждение теоремы
    """

    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print('{}: error: {}'.format(PROG, e), file=sys.stderr)
        return int(ExitStatus.USAGE_ERROR)

    if args.verbose:
        enable_debug_mode()

    try:
        return int(COMMANDS[args.command](args))
    except (QPredictError, IOError) as e:
        print('{}: error: {}'.format(PROG, e), file=sys.stderr)
        return int(ExitStatus.USAGE_ERROR)
