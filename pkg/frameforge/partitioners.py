#!/usr/bin/env python
# -*- encoding: utf-8 -*-
r'''
Partitioners
------------

Partition pipelines for frames.  Each returns an `IndexPartition` together
with a `PartitionCertificate` whose verdicts are recomputed from scratch by
`verify_partition`.

==============  ========================================================
Claim           Guarantee
==============  ========================================================
``t1``          every part has a spanning complement
``p5``          every part is linearly independent; bases when ``M = rN``
``p6``          every part spans
``cor5``        part 1 is independent, parts ``2 .. r+1`` are bases
``paving``      a paving was found and every part has a spanning
                complement
``infeasible``  the violating set in ``params`` rules out a split into
                ``m_parts`` independent sets
``none``        no claim; evidence only
==============  ========================================================

.. autosummary::
    :toctree: generated/

    verify_partition
    frame_report
    spanning_complement_partition
    equal_norm_independent_partition
    spanning_partition
    trim_to_bases
    independent_spanning_partition
    exhaustive_independent_spanning
    witness_certificate
'''

import math
import warnings
from fractions import Fraction

import numpy as np

from . import linalg
from .core import (IndexPartition, PartCertificate, PartitionCertificate,
                   FrameReport)
from .frames import (Frame, validate_frame, is_parseval, require_parseval,
                     norms_squared, spans_subset, complement)
from .matroids import (LinearMatroid, CospanningMatroid, InfeasibleWitness,
                       T2Witness, matroid_partition, t2_witness,
                       _Augmenter)
from .linalg import tolerant
from .schema import SCHEMA_VERSION
from .util import parse_scalar
from .exceptions import (ParameterError, NotAFrame, NotEqualNorm,
                         NormBoundViolated, InternalContractViolation,
                         HypothesisFailed, SearchExhausted)

__all__ = ['IndexPartition', 'verify_partition', 'frame_report',
           'spanning_complement_partition',
           'equal_norm_independent_partition', 'spanning_partition',
           'trim_to_bases', 'independent_spanning_partition',
           'exhaustive_independent_spanning', 'witness_certificate',
           'claims', 'EXHAUSTIVE_LIMIT']

EXHAUSTIVE_LIMIT = 14

EQUAL_NORM_TOL = 1e-9

__CLAIMS__ = dict()


def _claim(tag):
    '''A decorator to register the check behind a claim tag.

    Usage
    -----
    >>> @_claim('p6')
    ... def all_parts_span(parts, frame, params, tol):
    ...     return all(p.spans for p in parts)
    '''

    def register(func):
        '''This decorator registers func as the check for tag'''
        __CLAIMS__[tag] = func
        return func

    return register


def claims():
    '''The registered claim tags'''
    return sorted(__CLAIMS__)


@_claim('none')
def _no_claim(parts, frame, params, tol):
    return True


@_claim('t1')
def _complements_span(parts, frame, params, tol):
    return all(p.complement_spans for p in parts)


@_claim('paving')
def _paving_complements_span(parts, frame, params, tol):
    return (params.get('success', True) and
            _complements_span(parts, frame, params, tol))


@_claim('p5')
def _independent_parts(parts, frame, params, tol):
    if not all(p.independent for p in parts):
        return False
    if params.get('k') == 0:
        return all(p.spans and p.size == frame.dim for p in parts)
    return True


@_claim('p6')
def _spanning_parts(parts, frame, params, tol):
    return all(p.spans for p in parts)


@_claim('cor5')
def _independent_and_bases(parts, frame, params, tol):
    return (bool(parts) and parts[0].independent and
            all(p.independent and p.spans for p in parts[1:]))


@_claim('infeasible')
def _violating_set(parts, frame, params, tol):
    subset = params.get('violating_set')
    if not subset:
        return False
    return (len(subset) >
            params['m_parts'] * linalg.rank(frame.rows(subset), tol))


def _part_certificate(frame, part, tol, parseval):
    part = list(part)
    spans, evidence = spans_subset(frame, part, tol, parseval=parseval)
    cspans, cevidence = spans_subset(frame, complement(part, frame.size), tol,
                                     parseval=parseval)

    return PartCertificate(indices=part,
                           size=len(part),
                           dim=evidence.rank,
                           independent=evidence.rank == len(part),
                           spans=spans,
                           complement_spans=cspans,
                           eigenvalue=cevidence.eigenvalue,
                           complement_eigenvalue=evidence.eigenvalue)


@tolerant
def verify_partition(frame, partition, claim='none', tol=None, params=None):
    '''Recompute the certificate of a partition from scratch.

    Every boolean is derived from a rank, and for Parseval frames also
    from a compressed Gram eigenvalue; the two routes must agree.

    Parameters
    ----------
    frame : Frame

    partition : IndexPartition
        Over the indices of `frame`

    claim : str
        One of `claims()`; decides ``claims_hold``

    tol : Tolerance

    params : dict, optional
        Recorded in the certificate as-is

    Returns
    -------
    certificate : PartitionCertificate

    Raises
    ------
    ParameterError
        If the claim is unknown or the partition does not match the frame

    Examples
    --------
    >>> MB = frameforge.frames.mercedes_benz()
    >>> p = frameforge.IndexPartition([1, 2, 3])
    >>> cert = frameforge.partitioners.verify_partition(MB, p, 't1')
    >>> [part.complement_spans for part in cert.parts]
    [True, True, True]
    '''
    if claim not in __CLAIMS__:
        raise ParameterError('Unknown claim: "{}"'.format(claim))

    if partition.size != frame.size:
        raise ParameterError('Partition covers {} indices, frame has {}'
                             .format(partition.size, frame.size))

    params = dict(params or {})
    parseval = is_parseval(frame, tol)

    parts = [_part_certificate(frame, part, tol, parseval)
             for part in partition.parts]
    holds = __CLAIMS__[claim](parts, frame, params, tol)

    return PartitionCertificate(schema_version=SCHEMA_VERSION,
                                theorem=claim,
                                params=params,
                                dim=frame.dim,
                                size=frame.size,
                                parseval=parseval,
                                claims_hold=bool(holds),
                                parts=parts,
                                tolerances=dict(tol._asdict()),
                                scalar_mode=frame.scalar_mode)


@tolerant
def frame_report(frame, tol=None):
    '''Summarize a frame: whether it spans, its bounds and its norms.

    Parameters
    ----------
    frame : Frame

    tol : Tolerance

    Returns
    -------
    report : FrameReport

    Examples
    --------
    >>> report = frameforge.partitioners.frame_report(
    ...     frameforge.frames.mercedes_benz())
    >>> report.parseval
    True
    '''
    try:
        bounds = validate_frame(frame, tol)._asdict()
        is_frame = True
    except NotAFrame:
        bounds, is_frame = None, False

    norms = norms_squared(frame)

    return FrameReport(schema_version=SCHEMA_VERSION,
                       dim=frame.dim,
                       size=frame.size,
                       is_frame=is_frame,
                       bounds=None if bounds is None else dict(bounds),
                       parseval=is_parseval(frame, tol),
                       equal_norm=bool(np.ptp(norms) <= EQUAL_NORM_TOL),
                       norms_squared=[float(x) for x in norms],
                       tolerances=dict(tol._asdict()),
                       scalar_mode=frame.scalar_mode)


@tolerant
def witness_certificate(frame, witness, tol=None):
    '''Wrap an infeasibility witness in a certificate.

    The certificate carries the claim ``'infeasible'``: the violating set
    `J` recorded in ``params`` has more than ``m_parts * dim span J``
    vectors, so no split into `m_parts` independent sets exists.

    Parameters
    ----------
    frame : Frame

    witness : InfeasibleWitness or T2Witness
        An `InfeasibleWitness` is certified over the parts ``J`` and its
        complement; a `T2Witness` over its own partition.

    tol : Tolerance

    Returns
    -------
    certificate : PartitionCertificate

    Raises
    ------
    ParameterError
        If `witness` is of neither type
    InternalContractViolation
        If the violating set does not violate the counting bound

    Examples
    --------
    >>> F = frameforge.frames.Frame([[1, 0], [1, 0], [1, 0], [0, 1]])
    >>> W = frameforge.matroids.t2_witness(F, 2)
    >>> cert = frameforge.partitioners.witness_certificate(F, W)
    >>> cert.params['violating_set']
    [0, 1, 2]
    '''
    if isinstance(witness, InfeasibleWitness):
        subset = list(witness.subset)
        partition = IndexPartition.from_parts(
            [subset, complement(subset, frame.size)], size=frame.size)
    elif isinstance(witness, T2Witness):
        subset = list(witness.violating_set)
        partition = witness.partition
    else:
        raise ParameterError('Not an infeasibility witness: {}'
                             .format(witness))

    params = dict(m_parts=witness.m_parts, violating_set=subset,
                  witness=witness.__json__)
    cert = verify_partition(frame, partition, 'infeasible', tol,
                            params=params)
    _check_claims(cert, 'witness_certificate')
    return cert


def _as_scalar(value):
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    return float(value)


def _snap_ceil(x, tol):
    '''``ceil(x)``, ignoring float excess below ``eig_abs``.'''
    if isinstance(x, Fraction):
        return math.ceil(x)
    return int(math.ceil(x - tol.eig_abs * max(1.0, abs(x))))


def _snap_floor(x, tol):
    if isinstance(x, Fraction):
        return math.floor(x)
    return int(math.floor(x + tol.eig_abs * max(1.0, abs(x))))


def _check_claims(cert, what):
    if not cert.claims_hold:
        raise InternalContractViolation('{} produced a partition failing its '
                                        'own claim "{}"'
                                        .format(what, cert.theorem))


@tolerant
def spanning_complement_partition(frame, delta, r_parts=None, tol=None):
    '''Partition a Parseval frame so that every part has a spanning
    complement.

    If ``||f_i||^2 <= 1 - delta`` for all `i`, a partition into any
    ``R >= 1 / delta`` parts exists in which the vectors outside each part
    span.  It is computed as a partition into independent sets of the
    cospanning matroid.

    Parameters
    ----------
    frame : Frame
        A Parseval frame

    delta : float, Fraction or str in (0, 1)

    r_parts : int or None
        Number of parts.  Defaults to ``ceil(1 / delta*)`` with
        ``delta* = max(delta, 1 - max ||f_i||^2)``; smaller values are
        rejected.

    tol : Tolerance

    Returns
    -------
    partition : IndexPartition

    certificate : PartitionCertificate

    Raises
    ------
    NotParseval
    NormBoundViolated
        If some ``||f_i||^2 > 1 - delta + eig_abs``
    ParameterError
        If `delta` is outside (0, 1) or `r_parts` is too small
    InternalContractViolation
        If the partition cannot be completed

    Examples
    --------
    >>> MB = frameforge.frames.mercedes_benz()
    >>> p, cert = frameforge.partitioners.spanning_complement_partition(
    ...     MB, '1/3')
    >>> p
    <IndexPartition({0}, {1}, {2})>
    '''
    delta = _as_scalar(delta)
    if not 0 < delta < 1:
        raise ParameterError('delta must lie in (0, 1), got {}'.format(delta))

    require_parseval(frame, tol)

    norms_max = float(np.max(norms_squared(frame)))
    if norms_max > 1 - float(delta) + tol.eig_abs:
        raise NormBoundViolated('max ||f_i||^2 = {:.12g} exceeds 1 - delta = '
                                '{:.12g}'.format(norms_max, 1 - float(delta)))

    delta_eff = delta
    if 1 - norms_max > float(delta):
        delta_eff = 1 - norms_max
    r_min = _snap_ceil(1 / delta_eff, tol)

    if r_parts is None:
        r_parts = r_min
    elif r_parts < r_min:
        raise ParameterError('r_parts={} is below ceil(1/delta)={}'
                             .format(r_parts, r_min))

    result = matroid_partition(CospanningMatroid(frame, tol), r_parts)
    if isinstance(result, InfeasibleWitness):
        raise InternalContractViolation('No spanning-complement partition '
                                        'into {} parts; witness {}'
                                        .format(r_parts, result.subset))

    params = dict(delta=delta, delta_effective=delta_eff, r=r_parts,
                  norms_max=norms_max)
    cert = verify_partition(frame, result, 't1', tol, params=params)
    _check_claims(cert, 'spanning_complement_partition')
    return result, cert


@tolerant
def equal_norm_independent_partition(frame, tol=None):
    '''Partition an equal-norm Parseval frame into independent sets.

    With ``M = rN + k`` and ``0 <= k < N``, the frame splits into ``r + 1``
    linearly independent sets, or into `r` bases when ``k = 0``.

    Parameters
    ----------
    frame : Frame
        An equal-norm Parseval frame

    tol : Tolerance

    Returns
    -------
    partition : IndexPartition

    certificate : PartitionCertificate

    Raises
    ------
    NotParseval
    NotEqualNorm
        If the squared norms differ by more than ``1e-9``
    InternalContractViolation

    Examples
    --------
    >>> F = frameforge.frames.harmonic_frame(2, 4)
    >>> p, cert = frameforge.partitioners.equal_norm_independent_partition(F)
    >>> p.sizes()
    (2, 2)
    '''
    require_parseval(frame, tol)

    norms = norms_squared(frame)
    if np.max(norms) - np.min(norms) > EQUAL_NORM_TOL:
        raise NotEqualNorm('Squared norms range over [{:.12g}, {:.12g}]'
                           .format(np.min(norms), np.max(norms)))

    r, k = divmod(frame.size, frame.dim)
    n_parts = r + 1 if k else r

    result = matroid_partition(LinearMatroid(frame, tol), n_parts)
    if isinstance(result, InfeasibleWitness):
        raise InternalContractViolation('No partition into {} independent '
                                        'sets; witness {}'
                                        .format(n_parts, result.subset))

    params = dict(r=r, k=k, norm_squared=float(norms[0]))
    cert = verify_partition(frame, result, 'p5', tol, params=params)
    _check_claims(cert, 'equal_norm_independent_partition')
    return result, cert


def _spanning_split(vectors, r, target_dim, tol):
    '''Split vectors spanning a `target_dim`-dimensional space into `r`
    spanning parts.

    Either the vectors split into `r` independent sets, which then span
    by counting, or the subspace obstruction `S` is split off, the remaining
    vectors are projected onto the orthogonal complement of `S`, and the
    problem recurses there.  The obstruction's own partition is the answer;
    the recursion certifies it.

    Returns
    -------
    parts : list of list of int
    depth : int
    '''
    sub = Frame(vectors)
    oracle = LinearMatroid(sub, tol)

    result = matroid_partition(oracle, r)
    if isinstance(result, IndexPartition):
        parts = [list(p) for p in result.parts]
        short = [j + 1 for j, p in enumerate(parts)
                 if oracle.rank(p) != target_dim]
        if short:
            raise InternalContractViolation('Independent parts {} do not '
                                            'span'.format(short))
        return parts, 0

    witness = t2_witness(sub, r, tol)
    parts = [list(p) for p in witness.partition.parts]

    if witness.dim == target_dim:
        return parts, 0

    inside = set(witness.violating_set)
    outside = [i for i in range(sub.size) if i not in inside]

    projector = linalg.orthoprojector(witness.subspace_basis, tol,
                                      dim=sub.dim)
    rows = sub.rows(outside)
    projected = rows - rows.dot(projector)

    local = {i: pos for pos, i in enumerate(outside)}
    _, depth = _spanning_split(projected, r, target_dim - witness.dim, tol)

    inner = LinearMatroid(Frame(projected), tol)
    for number, part in enumerate(parts, 1):
        if inner.rank([local[i] for i in part if i in local]) != \
                target_dim - witness.dim:
            raise InternalContractViolation('Part {} does not span the '
                                            'complement of S'.format(number))

    return parts, depth + 1


@tolerant
def spanning_partition(frame, r_parts=None, tol=None):
    '''Partition a frame into spanning sets.

    A frame with lower bound `A` and ``||f_i||^2 <= 1`` splits into
    ``floor(A)`` spanning sets.  After rescaling, a frame splits into `r`
    spanning sets whenever ``r * max ||f_i||^2 <= A``; in particular a
    Parseval frame with ``||f_i||^2 <= 1/r`` splits into `r` spanning sets.

    Zero vectors are set aside and placed in part 1.

    Parameters
    ----------
    frame : Frame

    r_parts : int or None
        Number of parts.  Defaults to ``floor(A)``, which needs
        ``||f_i||^2 <= 1``.  An explicit count only needs
        ``r_parts * max ||f_i||^2 <= A``.

    tol : Tolerance

    Returns
    -------
    partition : IndexPartition

    certificate : PartitionCertificate

    Raises
    ------
    NotAFrame
    NormBoundViolated
        If ``r_parts * max ||f_i||^2 > A``, or `r_parts` is omitted and
        some ``||f_i||^2 > 1`` or ``A < 1``
    InternalContractViolation
        If a part fails its final span check

    Examples
    --------
    >>> F = frameforge.frames.scaled_union_of_bases(2, 2)
    >>> p, cert = frameforge.partitioners.spanning_partition(F, r_parts=2)
    >>> [part.spans for part in cert.parts]
    [True, True]
    '''
    bounds = validate_frame(frame, tol)
    norms_max = float(np.max(norms_squared(frame)))

    if r_parts is None:
        if norms_max > 1 + tol.eig_abs:
            raise NormBoundViolated('Spanning partition into floor(A) parts '
                                    'needs max ||f_i||^2 <= 1; got {:.12g}'
                                    .format(norms_max))
        r_parts = _snap_floor(bounds.lower, tol)
        if r_parts < 1:
            raise NormBoundViolated('Lower frame bound {:.12g} is below 1'
                                    .format(float(bounds.lower)))

    r_max = _snap_floor(bounds.lower / norms_max, tol)
    if r_parts < 1 or r_parts > r_max:
        raise NormBoundViolated('{} parts need max ||f_i||^2 <= A / {}; '
                                'got {:.12g} > {:.12g}'
                                .format(r_parts, r_parts, norms_max,
                                        bounds.lower / max(r_parts, 1)))

    scale = 1.0 / math.sqrt(norms_max * r_parts)
    kept = frame.nonzero_indices()
    work = frame.subframe(kept)
    if not work.exact:
        work = work.scaled(scale)

    local, depth = _spanning_split(work.vectors, r_parts, frame.dim, tol)

    parts = [[kept[i] for i in part] for part in local]
    parts[0].extend(complement(kept, frame.size))
    partition = IndexPartition.from_parts(parts, size=frame.size)

    params = dict(r=r_parts, lower_bound=bounds.lower,
                  upper_bound=bounds.upper, norms_max=norms_max,
                  scale=scale, recursion_depth=depth,
                  count_bound=r_parts * frame.dim,
                  count_ok=frame.size >= r_parts * frame.dim)
    cert = verify_partition(frame, partition, 'p6', tol, params=params)
    _check_claims(cert, 'spanning_partition')
    return partition, cert


@tolerant
def trim_to_bases(frame, partition, tol=None, prepend=False):
    '''Reduce parts to maximal independent subsets, moving the surplus to
    part 1.

    Each trimmed part keeps its indices greedily in ascending order.  A
    spanning part becomes a basis.

    Parameters
    ----------
    frame : Frame

    partition : IndexPartition

    tol : Tolerance

    prepend : bool
        If `False`, parts ``2 .. R`` are trimmed and part 1 receives the
        surplus.  If `True`, every part is trimmed and a new part 1 is
        prepended to receive the surplus, giving ``R + 1`` parts.

    Returns
    -------
    partition : IndexPartition
    '''
    oracle = LinearMatroid(frame, tol)
    parts = [list(p) for p in partition.parts]

    if prepend:
        parts = [[]] + parts

    for members in parts[1:]:
        kept = []
        for i in members:
            if oracle.rank(kept + [i]) > len(kept):
                kept.append(i)
        parts[0].extend(i for i in members if i not in kept)
        members[:] = kept

    return IndexPartition.from_parts(parts, size=frame.size)


def _disjoint_bases(frame, r, tol):
    '''Hypothesis (2): part 1 plus `r` bases, or None if impossible.'''
    oracle = LinearMatroid(frame, tol)

    try:
        bounds = validate_frame(frame, tol)
    except NotAFrame:
        return None, 'none'

    norms_max = float(np.max(norms_squared(frame)))
    if r * norms_max <= bounds.lower + tol.eig_abs:
        partition, _ = spanning_partition(frame, r_parts=r, tol=tol)
        return trim_to_bases(frame, partition, tol, prepend=True), 'p6'

    aug = _Augmenter(oracle, r)
    for x in range(frame.size):
        aug.insert(x)

    parts = [list(p) for p in aug.parts]
    if any(len(p) != frame.dim for p in parts):
        return None, 'union'

    leftovers = [x for x in range(frame.size) if x not in aug.owner]
    return IndexPartition.from_parts([leftovers] + parts,
                                     size=frame.size), 'union'


@tolerant
def exhaustive_independent_spanning(frame, r, tol=None,
                                    limit=EXHAUSTIVE_LIMIT):
    '''Search all partitions for an independent part 1 and `r` bases.

    Indices are assigned in ascending order, part 1 first; a branch is cut
    as soon as a part becomes dependent or the bases can no longer be
    filled.  The first partition found is returned.

    Parameters
    ----------
    frame : Frame
    r : int >= 1
    tol : Tolerance
    limit : int
        Largest frame searched

    Returns
    -------
    partition : IndexPartition or None
        `None` if no such partition exists

    Raises
    ------
    SearchExhausted
        If the frame has more than `limit` vectors
    '''
    size, dim = frame.size, frame.dim
    if size > limit:
        raise SearchExhausted('Exhaustive search is limited to {} vectors, '
                              'got {}'.format(limit, size))

    oracle = LinearMatroid(frame, tol)
    parts = [[] for _ in range(r + 1)]

    def search(i):
        missing = sum(dim - len(p) for p in parts[1:])
        if missing > size - i:
            return False
        if i == size:
            return True
        for k in range(r + 1):
            if k > 0 and len(parts[k]) == dim:
                continue
            parts[k].append(i)
            if oracle.is_independent(parts[k]) and search(i + 1):
                return True
            parts[k].pop()
        return False

    if not search(0):
        return None
    return IndexPartition.from_parts(parts, size=size)


@tolerant
def independent_spanning_partition(frame, r, tol=None):
    '''Partition into an independent set and `r` bases.

    Two hypotheses are checked first:

    1. the frame splits into ``r + 1`` independent sets;
    2. the frame splits into one set and `r` bases.

    Starting from the split of (2), the first part is grown one vector at
    a time along augmenting exchange paths that end in part 1 and keep
    parts ``2 .. r+1`` bases, until part 1 is independent.  By (1) this
    never gets stuck; if it does numerically, an exhaustive search takes
    over for frames of at most `EXHAUSTIVE_LIMIT` vectors.

    Every equal-norm Parseval frame with ``M = rN + k`` satisfies both
    hypotheses.

    Parameters
    ----------
    frame : Frame
    r : int >= 1
    tol : Tolerance

    Returns
    -------
    partition : IndexPartition
        ``r + 1`` parts

    certificate : PartitionCertificate

    Raises
    ------
    HypothesisFailed
        With ``hypothesis`` 1 (and an `InfeasibleWitness`) or 2
    SearchExhausted
    InternalContractViolation

    Examples
    --------
    >>> MB = frameforge.frames.mercedes_benz()
    >>> p, cert = frameforge.partitioners.independent_spanning_partition(MB, 1)
    >>> p
    <IndexPartition({2}, {0, 1})>
    '''
    if r < 1:
        raise ParameterError('r must be at least 1, got {}'.format(r))

    oracle = LinearMatroid(frame, tol)

    first = matroid_partition(oracle, r + 1)
    if isinstance(first, InfeasibleWitness):
        raise HypothesisFailed(1, witness=first,
                               message='No partition into {} independent '
                                       'sets: {} vectors span only {} '
                                       'dimensions'
                                       .format(r + 1, len(first.subset),
                                               first.rank))

    start, route = _disjoint_bases(frame, r, tol)
    if start is None:
        raise HypothesisFailed(2, message='{} does not contain {} disjoint '
                                          'bases'.format(frame, r))

    parts = [list(p) for p in start.parts]
    independent_first = []
    for i in parts[0]:
        if oracle.rank(independent_first + [i]) > len(independent_first):
            independent_first.append(i)
    pending = [i for i in parts[0] if i not in independent_first]

    aug = _Augmenter(oracle, r + 1, parts=[independent_first] + parts[1:])
    stalled = [x for x in pending if aug.insert(x, sinks=[0]) is not None]

    if stalled:
        warnings.warn('Exchange ascent stalled on {}; falling back to '
                      'exhaustive search'.format(stalled))
        partition = exhaustive_independent_spanning(frame, r, tol)
        if partition is None:
            raise InternalContractViolation('No partition into an independent '
                                            'set and {} bases'.format(r))
    else:
        partition = IndexPartition(aug.assignment(frame.size),
                                   part_count=r + 1)

    params = dict(r=r, start=route, exchanges=len(pending) - len(stalled),
                  fallback=bool(stalled))
    cert = verify_partition(frame, partition, 'cor5', tol, params=params)
    _check_claims(cert, 'independent_spanning_partition')
    return partition, cert
