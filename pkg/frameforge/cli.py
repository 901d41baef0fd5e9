#!/usr/bin/env python
# -*- encoding: utf-8 -*-
r'''
Command-line interface
----------------------

Batch front end: generate frames, check them, run the partition pipelines
and the paving search, and write frame CSV or certificate JSON.

Exit status

- 0: success
- 1: input error or failed internal check
- 2: a hypothesis failed, or an infeasibility witness was produced
- 3: a search gave up (no paving found, exhaustive limit reached)

.. autosummary::
    :toctree: generated/

    RunConfig
    parse_arguments
    run
    main
'''

import argparse
import os
import sys
from collections import namedtuple

from . import frames, matroids, partitioners, paving
from .core import save
from .linalg import DEFAULT_TOL, Tolerance
from .util import load_frame, save_frame, smkdirs
from .version import version
from .exceptions import (FrameForgeError, ParameterError, HypothesisFailed,
                         FeasibleInput, SearchExhausted, PavingNotFound)

__all__ = ['RunConfig', 'parse_arguments', 'run', 'main']

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INFEASIBLE = 2
EXIT_EXHAUSTED = 3

COMMANDS = ('gen', 'check', 'partition', 'pave', 'witness')
THEOREMS = ('t1', 'p5', 'p6', 'cor5')
GENERATORS = ('harmonic', 'random', 'union', 'basis')


class _ArgumentParser(argparse.ArgumentParser):
    '''Report usage errors as ParameterError, so they map to exit status 1.'''

    def error(self, message):
        raise ParameterError('{}: {}'.format(self.prog, message))


class RunConfig(namedtuple('RunConfig',
                           ['command', 'frame', 'generator', 'theorem',
                            'delta', 'r', 'sweep_r', 'method', 'budget',
                            'seed', 'tol_rank', 'tol_eig', 'exact',
                            'output'])):
    '''One command-line invocation.

    Attributes
    ----------
    command : str
        One of ``gen``, ``check``, ``partition``, ``pave``, ``witness``
    frame : str or None
        Input frame CSV (all commands but ``gen``)
    generator : (str, tuple of int) or None
        Generator name and its integer arguments (``gen`` only)
    theorem : str or None
    delta : str or None
        Decimal or ``p/q`` literal
    r, sweep_r, budget, seed : int or None
    method : str or None
    tol_rank, tol_eig : float
    exact : bool
    output : str or None
        `None` writes to standard output
    '''
    __slots__ = ()

    @classmethod
    def from_arguments(cls, arguments):
        '''Build and check a configuration from `parse_arguments` output.

        Raises
        ------
        ParameterError
            If a parameter required by the command is missing
        '''
        generator = None
        for name in GENERATORS:
            if arguments.get(name) is not None:
                if generator is not None:
                    raise ParameterError('Choose one frame generator')
                value = arguments[name]
                if isinstance(value, int):
                    value = [value]
                generator = (name, tuple(value))

        config = cls(**{field: (generator if field == 'generator'
                                else arguments.get(field))
                        for field in cls._fields})
        config._check()
        return config

    def _check(self):
        if self.command not in COMMANDS:
            raise ParameterError('Unknown command: "{}"'.format(self.command))

        if self.command == 'gen':
            if self.generator is None:
                raise ParameterError('gen needs one of --harmonic, --random, '
                                     '--union, --basis')
            if self.generator[0] == 'random' and self.seed is None:
                raise ParameterError('--random needs an explicit --seed')
        elif self.frame is None:
            raise ParameterError('{} needs a frame file'.format(self.command))

        if self.command == 'partition':
            if self.theorem == 't1' and self.delta is None:
                raise ParameterError('--theorem t1 needs --delta')
            if self.theorem == 'cor5' and self.r is None:
                raise ParameterError('--theorem cor5 needs --r')

        if self.command == 'pave':
            if self.delta is None:
                raise ParameterError('pave needs --delta')
            if (self.r is None) == (self.sweep_r is None):
                raise ParameterError('pave needs exactly one of --r, '
                                     '--sweep-r')
            if self.method == 'annealing' and self.seed is None:
                raise ParameterError('--method annealing needs an explicit '
                                     '--seed')

        if self.command == 'witness' and self.r is None:
            raise ParameterError('witness needs --r')

    @property
    def tol(self):
        return Tolerance(self.tol_rank, self.tol_eig)


def parse_arguments(args):
    '''Parse arguments from the command line'''
    common = _ArgumentParser(add_help=False)

    common.add_argument('--tol-rank', dest='tol_rank', type=float,
                        default=DEFAULT_TOL.rank_rel,
                        help='Relative singular value cutoff for ranks')

    common.add_argument('--tol-eig', dest='tol_eig', type=float,
                        default=DEFAULT_TOL.eig_abs,
                        help='Absolute slack for eigenvalue comparisons')

    common.add_argument('--exact', dest='exact', action='store_true',
                        default=False,
                        help='Use exact rational arithmetic')

    common.add_argument('-o', '--output', dest='output', default=None,
                        help='Output path (default: standard output)')

    parser = _ArgumentParser(prog='frameforge',
                             description='Partition finite frames into '
                                         'spanning and independent sets')

    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(version))

    commands = parser.add_subparsers(dest='command', required=True)

    gen = commands.add_parser('gen', parents=[common],
                              help='Write a generated frame as CSV')
    source = gen.add_mutually_exclusive_group(required=True)
    source.add_argument('--harmonic', nargs=2, type=int, metavar=('N', 'M'),
                        help='Harmonic frame of M vectors in R^N')
    source.add_argument('--random', nargs=2, type=int, metavar=('N', 'M'),
                        help='Random Parseval frame (needs --seed)')
    source.add_argument('--union', nargs=2, type=int, metavar=('N', 'R'),
                        help='R orthonormal bases scaled by 1/sqrt(R)')
    source.add_argument('--basis', type=int, metavar='N',
                        help='Standard orthonormal basis of R^N')
    gen.add_argument('--seed', type=int, default=None)

    check = commands.add_parser('check', parents=[common],
                                help='Report frame bounds, norms and the '
                                     'Parseval property')
    check.add_argument('frame', help='Frame CSV file')

    part = commands.add_parser('partition', parents=[common],
                               help='Run a partition pipeline')
    part.add_argument('--theorem', choices=THEOREMS, required=True)
    part.add_argument('--delta', default=None,
                      help='Norm gap, as a decimal or p/q')
    part.add_argument('--r', dest='r', type=int, default=None,
                      help='Number of parts (or of bases for cor5)')
    part.add_argument('frame', help='Frame CSV file')

    pave = commands.add_parser('pave', parents=[common],
                               help='Pave the hollow Gram matrix and certify '
                                    'spanning complements')
    pave.add_argument('--delta', default=None, required=True,
                      help='Norm gap, as a decimal or p/q')
    count = pave.add_mutually_exclusive_group(required=True)
    count.add_argument('--r', dest='r', type=int, default=None)
    count.add_argument('--sweep-r', dest='sweep_r', type=int, default=None,
                       help='Try r = 1 .. SWEEP_R')
    pave.add_argument('--method', choices=paving.METHODS,
                      default='exhaustive')
    pave.add_argument('--budget', type=int, default=None,
                      help='Annealing moves')
    pave.add_argument('--seed', type=int, default=None)
    pave.add_argument('frame', help='Frame CSV file')

    witness = commands.add_parser('witness', parents=[common],
                                  help='Certify that no split into r '
                                       'independent sets exists')
    witness.add_argument('--r', dest='r', type=int, required=True)
    witness.add_argument('frame', help='Frame CSV file')

    return vars(parser.parse_args(args))


def _generate(config):
    name, values = config.generator

    if name == 'harmonic' or name == 'random':
        if config.exact:
            raise ParameterError('--{} frames have irrational entries; '
                                 '--exact is not available'.format(name))
        if name == 'harmonic':
            return frames.harmonic_frame(*values)
        return frames.random_parseval(*values, seed=config.seed)

    if name == 'union':
        return frames.scaled_union_of_bases(*values, exact=config.exact)
    return frames.orthonormal_basis(*values, exact=config.exact)


def _load(config):
    return load_frame(config.frame, exact=True if config.exact else None)


def _output(config):
    if config.output is None:
        return sys.stdout
    smkdirs(os.path.dirname(config.output))
    return config.output


def _emit(config, document):
    document.validate()
    save(document, _output(config), fmt='json')


def _partition(config, frame):
    tol = config.tol
    if config.theorem == 't1':
        return partitioners.spanning_complement_partition(
            frame, config.delta, r_parts=config.r, tol=tol)
    if config.theorem == 'p5':
        return partitioners.equal_norm_independent_partition(frame, tol=tol)
    if config.theorem == 'p6':
        return partitioners.spanning_partition(frame, r_parts=config.r,
                                               tol=tol)
    return partitioners.independent_spanning_partition(frame, config.r,
                                                       tol=tol)


def _pave(config, frame):
    options = dict(method=config.method, budget=config.budget,
                   seed=config.seed or 0, tol=config.tol)
    if config.sweep_r is not None:
        return paving.sweep_paving(frame, config.delta, config.sweep_r,
                                   **options)
    return paving.paving_spanning_pipeline(frame, config.delta, config.r,
                                           **options)


def _witness(config, frame):
    try:
        witness = matroids.t2_witness(frame, config.r, config.tol)
        return (partitioners.witness_certificate(frame, witness, config.tol),
                EXIT_INFEASIBLE)
    except FeasibleInput:
        oracle = matroids.LinearMatroid(frame, config.tol)
        split = matroids.matroid_partition(oracle, config.r)
        return (partitioners.verify_partition(frame, split, 'none',
                                              config.tol),
                EXIT_OK)


def _diagnose(exc):
    print('frameforge: {}: {}'.format(exc.__class__.__name__, exc),
          file=sys.stderr)


def run(config):
    '''Execute one command.

    Parameters
    ----------
    config : RunConfig

    Returns
    -------
    status : int
        The exit status
    '''
    try:
        if config.command == 'gen':
            save_frame(_generate(config), _output(config))
            return EXIT_OK

        frame = _load(config)

        if config.command == 'check':
            _emit(config, partitioners.frame_report(frame, config.tol))
            return EXIT_OK

        if config.command == 'witness':
            document, status = _witness(config, frame)
            _emit(config, document)
            return status

        if config.command == 'partition':
            _, cert = _partition(config, frame)
        else:
            _, cert = _pave(config, frame)
        _emit(config, cert)
        return EXIT_OK

    except HypothesisFailed as exc:
        _diagnose(exc)
        if exc.witness is not None:
            _emit(config, partitioners.witness_certificate(
                frame, exc.witness, config.tol))
        return EXIT_INFEASIBLE

    except PavingNotFound as exc:
        _diagnose(exc)
        if exc.certificate is not None:
            _emit(config, exc.certificate)
        return EXIT_EXHAUSTED

    except SearchExhausted as exc:
        _diagnose(exc)
        return EXIT_EXHAUSTED

    except (FrameForgeError, OSError) as exc:
        _diagnose(exc)
        return EXIT_INPUT


def main(argv=None):
    '''Entry point of the ``frameforge`` script.

    Parameters
    ----------
    argv : list of str or None
        Defaults to ``sys.argv[1:]``

    Returns
    -------
    status : int
    '''
    if argv is None:
        argv = sys.argv[1:]

    try:
        config = RunConfig.from_arguments(parse_arguments(argv))
    except ParameterError as exc:
        _diagnose(exc)
        return EXIT_INPUT

    return run(config)
