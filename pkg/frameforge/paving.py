#!/usr/bin/env python
# -*- encoding: utf-8 -*-
r'''
Paving
------

Small-scale search for pavings of zero-diagonal matrices, and the route from
a paving of the hollow Gram matrix to a partition with spanning complements.

An ``(r, s)``-paving of a zero-diagonal matrix `H` is a partition of its
indices into `r` parts ``A_1 .. A_r`` with ``||D_A H D_A|| <= s ||H||`` for
every part, where ``D_A H D_A`` is the compression of `H` to `A`.

For a Parseval frame with ``||f_i||^2 <= 1 - delta``, a paving of
``H = G - diag(G)`` with ``||D_A H D_A|| <= delta / 2`` gives
``||D_A G D_A|| <= 1 - delta / 2 < 1`` on every part, so the vectors outside
each part span.

Object reference
^^^^^^^^^^^^^^^^
.. autosummary::
    :toctree: generated/
    :template: class.rst

    PavingResult
    AnnealingSchedule

Function reference
^^^^^^^^^^^^^^^^^^
.. autosummary::
    :toctree: generated/

    hollow_gram
    compression_norms
    pave
    paving_spanning_pipeline
    sweep_paving
'''

import random
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from simanneal import Annealer

from . import linalg
from .core import IndexPartition
from .frames import gram, norms_squared, require_parseval
from .linalg import tolerant
from .partitioners import verify_partition, _as_scalar
from .util import num_threads
from .exceptions import (ParameterError, InvalidShape, NonzeroDiagonal,
                         NormBoundViolated, InternalContractViolation,
                         PavingNotFound, BudgetExhausted)

__all__ = ['PavingResult', 'AnnealingSchedule', 'ANNEALING_DEFAULTS',
           'EXHAUSTIVE_LIMIT', 'METHODS', 'hollow_gram', 'compression_norms',
           'pave', 'paving_spanning_pipeline', 'sweep_paving']

EXHAUSTIVE_LIMIT = 14

METHODS = ('exhaustive', 'annealing')

# Indices fixed per unit of parallel work
PREFIX_DEPTH = 4

AnnealingSchedule = namedtuple('AnnealingSchedule',
                               ['t_start', 't_end', 'steps'])
'''Geometric cooling from `t_start` to `t_end` over `steps` moves.'''

ANNEALING_DEFAULTS = AnnealingSchedule(t_start=0.5, t_end=1e-4, steps=20000)


def _compression_norm(h, part):
    if len(part) < 2:
        return float(abs(h[part[0], part[0]])) if part else 0.0
    return linalg.spectral_norm(h[np.ix_(part, part)])


def compression_norms(h, partition):
    '''``||D_A h D_A||`` for every part `A` of `partition`.

    Parameters
    ----------
    h : np.ndarray, shape=(M, M)

    partition : IndexPartition

    Returns
    -------
    norms : list of float
        One per part, in part order; empty parts give `0.0`
    '''
    h = np.asarray(h, dtype=float)
    return [_compression_norm(h, list(p)) for p in partition.parts]


class PavingResult(object):
    '''Outcome of a paving search.

    Attributes
    ----------
    partition : IndexPartition
        Best partition found

    achieved : float
        Largest compression norm over its parts

    target_s : float or None
        Relative target ``s``; `None` when ``||H|| = 0``

    target : float
        Absolute target ``s ||H||``

    h_norm : float
        ``||H||``

    method : str
        ``'exhaustive'`` or ``'annealing'``

    success : bool
        ``achieved <= target + eig_abs``
    '''

    def __init__(self, partition, achieved, target_s, target, h_norm, method,
                 success):
        self.partition = partition
        self.achieved = float(achieved)
        self.target_s = None if target_s is None else float(target_s)
        self.target = float(target)
        self.h_norm = float(h_norm)
        self.method = method
        self.success = bool(success)

    @tolerant
    def verify(self, h, tol=None):
        '''Recompute `achieved` from the partition.

        Returns
        -------
        valid : bool
            True if the stored value is reproduced within ``eig_abs`` and the
            success flag matches it
        '''
        achieved = max(compression_norms(h, self.partition))
        return (abs(achieved - self.achieved) <= tol.eig_abs and
                self.success == (achieved <= self.target + tol.eig_abs))

    def __repr__(self):
        return ('<PavingResult(parts={}, achieved={:.6g}, target={:.6g}, '
                'method={}, success={})>'.format(self.partition.part_count,
                                                 self.achieved, self.target,
                                                 self.method, self.success))

    @property
    def __json__(self):
        return dict(partition=self.partition.__json__,
                    achieved=self.achieved,
                    target_s=self.target_s,
                    target=self.target,
                    h_norm=self.h_norm,
                    method=self.method,
                    success=self.success)


@tolerant
def hollow_gram(frame, tol=None):
    '''The Gram matrix of a Parseval frame with its diagonal removed.

    Parameters
    ----------
    frame : Frame
        A Parseval frame

    tol : Tolerance

    Returns
    -------
    h : np.ndarray, shape=(M, M), float
        Zero diagonal, ``||h|| <= 1``

    Raises
    ------
    NotParseval

    Examples
    --------
    >>> H = frameforge.paving.hollow_gram(frameforge.frames.mercedes_benz())
    >>> frameforge.linalg.spectral_norm(H)
    0.6666666666666666
    '''
    require_parseval(frame, tol)

    g = np.asarray(gram(frame), dtype=float)
    h = g - np.diag(np.diag(g))

    h_norm = linalg.spectral_norm(h)
    if h_norm > 1 + tol.eig_abs:
        raise InternalContractViolation('Hollow Gram matrix has norm {:.12g} '
                                        '> 1'.format(h_norm))
    return h


def _as_hollow(h, tol):
    h = np.asarray(h, dtype=float)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise InvalidShape('Paving needs a square matrix, got shape {}'
                           .format(h.shape))

    if h.size and np.max(np.abs(np.diag(h))) > tol.eig_abs:
        raise NonzeroDiagonal('Largest diagonal entry is {:.12g}'
                              .format(np.max(np.abs(np.diag(h)))))
    return h


def _prefixes(size, r, depth):
    '''Restricted-growth strings of length `depth` over `r` labels, in
    lexicographic order.'''
    out = [()]
    for _ in range(min(depth, size)):
        out = [p + (k,) for p in out
               for k in range(min(max(p, default=-1) + 2, r))]
    return out


class _ExhaustiveSearch(object):
    '''Depth-first search over restricted-growth strings.

    A branch is cut as soon as some part's compression norm reaches the best
    value so far; compression norms only grow as parts grow.  Among optimal
    partitions the lexicographically first labelling is kept.
    '''

    def __init__(self, h, r):
        self.h = h
        self.r = r
        self.size = h.shape[0]

    def run(self, prefix, bound=np.inf):
        '''Best completion of `prefix` strictly below `bound`.

        Returns
        -------
        best : (float, tuple of int) or None
        '''
        parts = [[] for _ in range(self.r)]
        for i, k in enumerate(prefix):
            parts[k].append(i)
        norms = [_compression_norm(self.h, p) for p in parts]

        if max(norms) >= bound:
            return None

        best = [bound, None]
        self._descend(len(prefix), list(prefix), parts, norms, best)

        if best[1] is None:
            return None
        return best[0], tuple(best[1])

    def _descend(self, i, labels, parts, norms, best):
        if i == self.size:
            value = max(norms)
            if value < best[0]:
                best[0], best[1] = value, list(labels)
            return

        top = min(max(labels, default=-1) + 1, self.r - 1)
        for k in range(top + 1):
            if best[0] <= 0:
                return

            parts[k].append(i)
            previous = norms[k]
            norms[k] = _compression_norm(self.h, parts[k])

            if max(norms) < best[0]:
                labels.append(k)
                self._descend(i + 1, labels, parts, norms, best)
                labels.pop()

            norms[k] = previous
            parts[k].pop()


def _exhaustive(h, r, threads):
    search = _ExhaustiveSearch(h, r)
    prefixes = _prefixes(search.size, r, PREFIX_DEPTH)

    if threads > 1 and len(prefixes) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            found = list(pool.map(search.run, prefixes))
    else:
        found = []
        bound = np.inf
        for prefix in prefixes:
            result = search.run(prefix, bound)
            found.append(result)
            if result is not None:
                bound = result[0]

    value, labels = min(_ for _ in found if _ is not None)
    return value, labels


class _PavingAnnealer(Annealer):
    '''Annealing over part labels; a move reassigns one index.'''

    copy_strategy = 'slice'
    updates = 0

    def __init__(self, state, h, r, target, seed):
        self.h = h
        self.r = r
        self.target = target
        self.rng = np.random.RandomState(seed)
        super(_PavingAnnealer, self).__init__(state)

    def move(self):
        i = self.rng.randint(len(self.state))
        k = self.rng.randint(self.r - 1)
        if k >= self.state[i]:
            k += 1
        self.state[i] = k

    def energy(self):
        parts = [[] for _ in range(self.r)]
        for i, k in enumerate(self.state):
            parts[k].append(i)
        value = max(_compression_norm(self.h, p) for p in parts)
        if value <= self.target:
            self.user_exit = True
        return value


def _anneal(h, r, target, seed, schedule):
    state = [i % r for i in range(h.shape[0])]
    if r == 1 or h.shape[0] < 2:
        return None, tuple(state)

    annealer = _PavingAnnealer(state, h, r, target, seed)
    annealer.Tmax = schedule.t_start
    annealer.Tmin = schedule.t_end
    annealer.steps = schedule.steps

    # acceptance draws come from the global generator
    saved = random.getstate()
    random.seed(seed)
    try:
        labels, value = annealer.anneal()
    finally:
        random.setstate(saved)

    return value, tuple(labels)


def _search(h, r, target, target_s, method, budget, seed, schedule, tol,
            threads):
    if r < 1:
        raise ParameterError('r must be at least 1, got {}'.format(r))

    if method not in METHODS:
        raise ParameterError('Unknown paving method: "{}"'.format(method))

    if budget is not None and budget < 1:
        raise ParameterError('budget must be positive, got {}'.format(budget))

    size = h.shape[0]
    h_norm = linalg.spectral_norm(h)

    if method == 'exhaustive':
        if size > EXHAUSTIVE_LIMIT:
            raise ParameterError('Exhaustive paving is limited to {} indices, '
                                 'got {}'.format(EXHAUSTIVE_LIMIT, size))
        if threads is None:
            threads = num_threads()
        _, labels = _exhaustive(h, r, threads)
    else:
        if schedule is None:
            schedule = ANNEALING_DEFAULTS
        schedule = AnnealingSchedule(*schedule)
        if budget is not None:
            schedule = schedule._replace(steps=int(budget))
        _, labels = _anneal(h, r, target, seed, schedule)

    partition = IndexPartition([k + 1 for k in labels], part_count=r)
    if method == 'annealing':
        partition = partition.canonical()

    achieved = max(compression_norms(h, partition))
    result = PavingResult(partition, achieved, target_s, target, h_norm,
                          method, achieved <= target + tol.eig_abs)

    if method == 'annealing' and not result.success:
        raise BudgetExhausted(result)
    return result


@tolerant
def pave(h, r, s, method='exhaustive', budget=None, seed=0, schedule=None,
         tol=None, threads=None):
    '''Search for an ``(r, s)``-paving of a zero-diagonal matrix.

    Parameters
    ----------
    h : np.ndarray, shape=(M, M)
        Zero diagonal within ``eig_abs``

    r : int >= 1
        Number of parts

    s : float in (0, 1)
        Relative target: every compression norm at most ``s ||h||``

    method : str
        - ``'exhaustive'``: every partition into at most `r` parts, for
          ``M <= EXHAUSTIVE_LIMIT``.  Returns an optimal partition, whether
          or not it meets the target.
        - ``'annealing'``: seeded simulated annealing over part labels; stops
          early once the target is met.

    budget : int or None
        Annealing moves; overrides ``schedule.steps``

    seed : int
        Annealing seed

    schedule : AnnealingSchedule or None
        Defaults to `ANNEALING_DEFAULTS`

    tol : Tolerance

    threads : int or None
        Exhaustive workers.  Defaults to `frameforge.util.num_threads`.
        The result does not depend on it.

    Returns
    -------
    result : PavingResult

    Raises
    ------
    InvalidShape
    NonzeroDiagonal
    ParameterError
    BudgetExhausted
        If annealing ends above the target; carries the best result

    Examples
    --------
    >>> H = frameforge.paving.hollow_gram(frameforge.frames.mercedes_benz())
    >>> result = frameforge.paving.pave(H, 2, 0.5)
    >>> result.success, round(result.achieved, 9)
    (True, 0.333333333)
    '''
    h = _as_hollow(h, tol)

    if not 0 < s < 1:
        raise ParameterError('s must lie in (0, 1), got {}'.format(s))

    h_norm = linalg.spectral_norm(h)
    return _search(h, r, float(s) * h_norm, float(s), method, budget, seed,
                   schedule, tol, threads)


@tolerant
def paving_spanning_pipeline(frame, delta, r, method='exhaustive',
                             budget=None, seed=0, schedule=None, tol=None,
                             threads=None):
    '''From a paving of the hollow Gram matrix to spanning complements.

    With ``H = hollow_gram(frame)``, searches for a partition into `r` parts
    with ``||D_A H D_A|| <= delta / 2``.  On success each part satisfies
    ``||D_A G D_A|| <= 1 - delta / 2``, and the vectors outside it span.

    Parameters
    ----------
    frame : Frame
        A Parseval frame with ``||f_i||^2 <= 1 - delta``

    delta : float, Fraction or str in (0, 1)

    r : int >= 1

    method, budget, seed, schedule, threads
        As in `pave`

    tol : Tolerance

    Returns
    -------
    result : PavingResult

    certificate : PartitionCertificate
        With theorem tag ``'paving'``

    Raises
    ------
    NotParseval
    NormBoundViolated
    PavingNotFound
        If no paving meets the target at this `r`.  This says nothing about
        larger `r`.  Its ``certificate`` records the best partition found,
        with ``claims_hold`` false.
    InternalContractViolation
        If a successful paving fails the compressed Gram bound or a
        complement does not span

    Examples
    --------
    >>> MB = frameforge.frames.mercedes_benz()
    >>> result, cert = frameforge.paving.paving_spanning_pipeline(MB, '1/3', 3)
    >>> result.achieved
    0.0
    '''
    delta = _as_scalar(delta)
    if not 0 < delta < 1:
        raise ParameterError('delta must lie in (0, 1), got {}'.format(delta))

    require_parseval(frame, tol)

    norms_max = float(np.max(norms_squared(frame)))
    if norms_max > 1 - float(delta) + tol.eig_abs:
        raise NormBoundViolated('max ||f_i||^2 = {:.12g} exceeds 1 - delta = '
                                '{:.12g}'.format(norms_max, 1 - float(delta)))

    h = hollow_gram(frame, tol)
    h_norm = linalg.spectral_norm(h)
    target = float(delta) / 2
    target_s = target / h_norm if h_norm > 0 else None

    try:
        result = _search(h, r, target, target_s, method, budget, seed,
                         schedule, tol, threads)
        failure = None if result.success else PavingNotFound
    except BudgetExhausted as exc:
        result, failure = exc.result, BudgetExhausted

    g = np.asarray(gram(frame), dtype=float)
    g_norms = compression_norms(g, result.partition)

    params = dict(delta=delta, r=r, method=method, seed=seed,
                  achieved=result.achieved, target=target, target_s=target_s,
                  h_norm=h_norm, success=result.success,
                  gram_compression_norms=g_norms)
    cert = verify_partition(frame, result.partition, 'paving', tol,
                            params=params)

    if failure is not None:
        raise failure(result, certificate=cert)

    bound = 1 - target
    over = [j + 1 for j, n in enumerate(g_norms) if n > bound + tol.eig_abs]
    if over:
        raise InternalContractViolation('Parts {} exceed ||D_A G D_A|| <= '
                                        '{:.12g}'.format(over, bound))

    if not cert.claims_hold:
        raise InternalContractViolation('Paving parts {} do not have '
                                        'spanning complements'
                                        .format(result.partition))
    return result, cert


@tolerant
def sweep_paving(frame, delta, r_max, tol=None, **kwargs):
    '''Run `paving_spanning_pipeline` for ``r = 1 .. r_max``.

    Parameters
    ----------
    frame : Frame
    delta : float, Fraction or str
    r_max : int >= 1
    tol : Tolerance
    kwargs
        Passed to `paving_spanning_pipeline`

    Returns
    -------
    result : PavingResult
    certificate : PartitionCertificate
        For the smallest `r` that succeeds

    Raises
    ------
    PavingNotFound
        From the last attempt, if every `r` fails
    '''
    if r_max < 1:
        raise ParameterError('r_max must be at least 1, got {}'.format(r_max))

    failure = None
    for r in range(1, r_max + 1):
        try:
            return paving_spanning_pipeline(frame, delta, r, tol=tol, **kwargs)
        except PavingNotFound as exc:
            failure = exc
    raise failure
