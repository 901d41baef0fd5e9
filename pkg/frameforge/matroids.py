#!/usr/bin/env python
# -*- encoding: utf-8 -*-
r'''
Matroids
--------

Rank oracles over the index set of a frame, partitioning into independent
sets, dimension-maximal partitions, and dependency chains.

Two matroids live on the indices of a frame:

- the *linear* matroid, where a set is independent if its vectors are
  linearly independent;
- the *cospanning* matroid, where a set is independent if the vectors
  *outside* it still span.

A family can be split into `m` independent sets if and only if every subset
`E` satisfies ``|E| <= m * rank(E)``.  `matroid_partition` either produces
such a split or returns a subset violating the inequality.

Object reference
^^^^^^^^^^^^^^^^
.. autosummary::
    :toctree: generated/
    :template: class.rst

    MatroidOracle
    LinearMatroid
    CospanningMatroid
    InfeasibleWitness
    Chain
    T2Witness

Function reference
^^^^^^^^^^^^^^^^^^
.. autosummary::
    :toctree: generated/

    linear_rank
    cospanning_rank
    cospanning_rank_search
    matroid_partition
    rado_horn_violation
    md_partition
    normalize_md
    find_chains
    t2_witness
'''

from collections import deque, namedtuple
from fractions import Fraction
from itertools import combinations

import numpy as np
from sortedcontainers import SortedSet

from . import linalg
from .core import IndexPartition
from .frames import validate_frame, index_set, complement
from .linalg import tolerant, as_tolerance
from .exceptions import (ParameterError, PreconditionViolated, FeasibleInput,
                         InternalContractViolation)

__all__ = ['MatroidOracle', 'LinearMatroid', 'CospanningMatroid',
           'InfeasibleWitness', 'LinkWitness', 'Chain', 'T2Witness',
           'linear_rank', 'cospanning_rank', 'cospanning_rank_search',
           'matroid_partition', 'rado_horn_violation', 'md_partition',
           'normalize_md', 'find_chains', 't2_witness']


class MatroidOracle(object):
    '''Rank function over the indices of a frame.

    Ranks are memoized per index set.

    Parameters
    ----------
    frame : Frame

    tol : Tolerance
    '''
    kind = None

    def __init__(self, frame, tol=None):
        self._frame = frame
        self._tol = as_tolerance(tol)
        self._cache = dict()

    @property
    def frame(self):
        return self._frame

    @property
    def tol(self):
        return self._tol

    @property
    def ground_size(self):
        '''Number of elements M'''
        return self._frame.size

    def rank(self, subset):
        '''Rank of an index set.

        Parameters
        ----------
        subset : iterable of int

        Returns
        -------
        rank : int
        '''
        key = frozenset(index_set(subset, self.ground_size))
        if key not in self._cache:
            self._cache[key] = self._rank(tuple(sorted(key)))
        return self._cache[key]

    def is_independent(self, subset):
        subset = set(subset)
        return self.rank(subset) == len(subset)

    def spans(self, element, subset):
        '''True if `element` lies in the closure of `subset`.'''
        subset = set(subset)
        return self.rank(subset | {element}) == self.rank(subset)

    def _rank(self, indices):
        raise NotImplementedError

    def check_axioms(self, samples=50, seed=0):
        '''Spot-test the rank axioms on random subsets.

        Checks ``rank(∅) = 0``, ``rank(A) <= rank(B) <= |B|`` for ``A ⊆ B``
        and submodularity ``rank(A ∪ B) + rank(A ∩ B) <= rank(A) + rank(B)``.

        Parameters
        ----------
        samples : int
            Number of random pairs to test

        seed : int

        Returns
        -------
        True

        Raises
        ------
        InternalContractViolation
            If an axiom fails
        '''
        if self.rank([]) != 0:
            raise InternalContractViolation('rank(∅) = {}'
                                            .format(self.rank([])))

        rng = np.random.RandomState(seed)
        size = self.ground_size

        for _ in range(samples):
            mask_a = rng.rand(size) < 0.5
            mask_b = rng.rand(size) < 0.5
            a = set(np.flatnonzero(mask_a).tolist())
            b = set(np.flatnonzero(mask_b).tolist())
            union = a | b

            if not self.rank(a) <= self.rank(union) <= len(union):
                raise InternalContractViolation(
                    'Monotonicity fails on {} ⊆ {}'.format(sorted(a),
                                                          sorted(union)))

            if (self.rank(union) + self.rank(a & b) >
                    self.rank(a) + self.rank(b)):
                raise InternalContractViolation(
                    'Submodularity fails on {}, {}'.format(sorted(a),
                                                          sorted(b)))
        return True

    def __repr__(self):
        return '<{}(ground_size={})>'.format(self.__class__.__name__,
                                             self.ground_size)


class LinearMatroid(MatroidOracle):
    '''Independent sets are the linearly independent subfamilies.'''
    kind = 'linear'

    def _rank(self, indices):
        return linalg.rank(self._frame.rows(indices), self._tol)


class CospanningMatroid(MatroidOracle):
    '''Independent sets are those whose complementary subfamily spans.

    The rank is computed by duality:
    ``rank*(E) = |E| + dim span {f_j : j not in E} - N``.

    Raises
    ------
    NotAFrame
        If the frame does not span
    '''
    kind = 'cospanning'

    def __init__(self, frame, tol=None):
        super(CospanningMatroid, self).__init__(frame, tol=tol)
        validate_frame(frame, self._tol)

    def _rank(self, indices):
        rest = complement(indices, self.ground_size)
        return (len(indices) +
                linalg.rank(self._frame.rows(rest), self._tol) -
                self._frame.dim)


@tolerant
def linear_rank(frame, subset, tol=None):
    '''Dimension of the span of the vectors indexed by `subset`.

    Examples
    --------
    >>> frameforge.matroids.linear_rank(frameforge.frames.mercedes_benz(),
    ...                                 [0, 2])
    2
    '''
    return LinearMatroid(frame, tol).rank(subset)


@tolerant
def cospanning_rank(frame, subset, tol=None):
    '''Rank of `subset` in the cospanning matroid of `frame`.

    Raises
    ------
    NotAFrame

    Examples
    --------
    >>> frameforge.matroids.cospanning_rank(frameforge.frames.mercedes_benz(),
    ...                                     [0])
    1
    '''
    return CospanningMatroid(frame, tol).rank(subset)


@tolerant
def cospanning_rank_search(frame, subset, tol=None):
    '''Size of the largest ``F ⊆ subset`` whose complement spans.

    Direct search over subsets, largest first.  Agrees with
    `cospanning_rank`; exponential in ``len(subset)``.

    Raises
    ------
    NotAFrame
    '''
    validate_frame(frame, tol)
    idx = index_set(subset, frame.size)

    for k in range(len(idx), 0, -1):
        for removed in combinations(idx, k):
            rest = complement(removed, frame.size)
            if linalg.rank(frame.rows(rest), tol) == frame.dim:
                return k
    return 0


class InfeasibleWitness(namedtuple('InfeasibleWitness',
                                   ['subset', 'rank', 'm_parts'])):
    '''A set `E` with ``|E| > m * rank(E)``.

    No partition into `m_parts` independent sets exists when such a set does.

    Attributes
    ----------
    subset : tuple of int
    rank : int
    m_parts : int
    '''
    __slots__ = ()

    @property
    def ratio(self):
        '''``|E| / rank(E)`` as a Fraction, or None if the rank is 0'''
        if self.rank == 0:
            return None
        return Fraction(len(self.subset), self.rank)

    @property
    def violated(self):
        '''True if ``|E| > m_parts * rank(E)``'''
        return len(self.subset) > self.m_parts * self.rank

    @property
    def __json__(self):
        return dict(subset=list(self.subset), rank=self.rank,
                    m_parts=self.m_parts,
                    ratio=None if self.ratio is None else str(self.ratio))


class _Augmenter(object):
    '''Partial partition into independent sets, grown by augmenting paths.

    Parts are `SortedSet` objects so that every scan is in ascending index
    order.  An element `y` may move into part `k` directly if ``P_k + y`` is
    independent, or by evicting `z` if ``P_k - z + y`` is.  Shortest paths in
    this exchange graph keep every part independent.
    '''

    def __init__(self, oracle, m_parts, parts=None):
        self.oracle = oracle
        self.m_parts = m_parts
        if parts is None:
            parts = [[] for _ in range(m_parts)]
        self.parts = [SortedSet(p) for p in parts]
        self.owner = {x: k for k, p in enumerate(self.parts) for x in p}

    def _accepts(self, k, y, out=None):
        members = set(self.parts[k])
        members.add(y)
        members.discard(out)
        return self.oracle.is_independent(members)

    def insert(self, x, sinks=None):
        '''Add element `x`, rearranging along a shortest augmenting path.

        Parameters
        ----------
        x : int
            An element not currently in any part

        sinks : collection of int or None
            Parts allowed to grow; all parts if `None`

        Returns
        -------
        reachable : SortedSet or None
            `None` on success.  Otherwise the elements reachable from `x`,
            which is left unassigned.
        '''
        if sinks is None:
            sinks = range(self.m_parts)
        sinks = sorted(sinks)

        label = {x: None}
        queue = deque([x])

        while queue:
            y = queue.popleft()
            home = self.owner.get(y)

            for k in sinks:
                if k != home and self._accepts(k, y):
                    self._apply(label, y, k)
                    return None

            for k in range(self.m_parts):
                if k == home:
                    continue
                for z in self.parts[k]:
                    if z not in label and self._accepts(k, y, out=z):
                        label[z] = (y, k)
                        queue.append(z)

        return SortedSet(label)

    def _apply(self, label, y, k):
        touched = set()
        current, part = y, k
        while True:
            old = self.owner.get(current)
            if old is not None:
                self.parts[old].discard(current)
            self.parts[part].add(current)
            self.owner[current] = part
            touched.add(part)

            step = label[current]
            if step is None:
                break
            current, part = step

        for part in touched:
            if not self.oracle.is_independent(self.parts[part]):
                raise InternalContractViolation(
                    'Augmentation left part {} dependent'.format(part + 1))

    def assignment(self, size, leftover_part=0):
        return [self.owner.get(x, leftover_part) + 1 for x in range(size)]


def matroid_partition(oracle, m_parts):
    '''Partition the ground set into `m_parts` independent sets.

    Elements are inserted in ascending order; each insertion searches the
    exchange graph breadth-first for a shortest augmenting path, scanning
    parts and elements in ascending order.

    Parameters
    ----------
    oracle : MatroidOracle

    m_parts : int >= 1

    Returns
    -------
    result : IndexPartition or InfeasibleWitness
        A partition into `m_parts` independent (possibly empty) parts, or a
        set `E` with ``|E| > m_parts * rank(E)``

    Raises
    ------
    ParameterError
        If ``m_parts < 1``
    InternalContractViolation
        If a returned witness fails its own inequality

    Examples
    --------
    >>> F = frameforge.frames.Frame([[1, 0], [0, 1], [1, 0], [0, 1]])
    >>> M = frameforge.matroids.LinearMatroid(F)
    >>> frameforge.matroids.matroid_partition(M, 2)
    <IndexPartition({0, 1}, {2, 3})>
    '''
    if m_parts < 1:
        raise ParameterError('m_parts must be at least 1, '
                             'got {}'.format(m_parts))

    aug = _Augmenter(oracle, m_parts)

    for x in range(oracle.ground_size):
        reachable = aug.insert(x)
        if reachable is not None:
            witness = InfeasibleWitness(tuple(reachable),
                                        oracle.rank(reachable), m_parts)
            if not witness.violated:
                raise InternalContractViolation(
                    'Augmentation failed but {} does not violate '
                    '|E| <= {} rank(E)'.format(witness.subset, m_parts))
            return witness

    return IndexPartition(aug.assignment(oracle.ground_size),
                          part_count=m_parts)


def rado_horn_violation(oracle, m_parts, limit=16):
    '''Exhaustive search for a set `E` with ``|E| > m * rank(E)``.

    Subsets are scanned by increasing size, then lexicographically.

    Parameters
    ----------
    oracle : MatroidOracle
    m_parts : int >= 1
    limit : int
        Largest ground set accepted

    Returns
    -------
    witness : InfeasibleWitness or None
        The first violating set, or `None` if the inequality holds everywhere

    Raises
    ------
    ParameterError
        If the ground set exceeds `limit`
    '''
    size = oracle.ground_size
    if size > limit:
        raise ParameterError('Exhaustive search is limited to {} elements, '
                             'got {}'.format(limit, size))

    for k in range(1, size + 1):
        for subset in combinations(range(size), k):
            rnk = oracle.rank(subset)
            if k > m_parts * rnk:
                return InfeasibleWitness(subset, rnk, m_parts)
    return None


def _span_dims(oracle, partition):
    return [oracle.rank(p) for p in partition.parts]


@tolerant
def normalize_md(frame, partition, tol=None):
    '''Move dependent vectors out of parts ``2 .. M`` into part 1.

    While some part ``j >= 2`` holds a vector in the span of the others in
    that part, the smallest such index moves to part 1.  No part loses span
    dimension, so a dimension-maximal partition stays maximal.

    Parameters
    ----------
    frame : Frame
    partition : IndexPartition
    tol : Tolerance

    Returns
    -------
    partition : IndexPartition
        Parts ``2 .. M`` linearly independent
    '''
    oracle = LinearMatroid(frame, tol)
    parts = [list(p) for p in partition.parts]

    for members in parts[1:]:
        while True:
            moving = next((i for i in members
                           if oracle.spans(i, set(members) - {i})), None)
            if moving is None:
                break
            members.remove(moving)
            parts[0].append(moving)

    return IndexPartition.from_parts(parts, size=frame.size)


@tolerant
def md_partition(frame, m_parts, tol=None):
    '''A partition with maximal span dimensions, parts ``2 .. M`` independent.

    The sum of span dimensions is maximized by growing a largest set
    splittable into `m_parts` independent parts (matroid union of `m_parts`
    copies of the linear matroid); elements that cannot join go to part 1.
    No partition dominates the result in every part's dimension.

    Parameters
    ----------
    frame : Frame
    m_parts : int >= 1
    tol : Tolerance

    Returns
    -------
    partition : IndexPartition

    Raises
    ------
    InternalContractViolation
        If a postcondition fails numerically

    Examples
    --------
    >>> F = frameforge.frames.Frame([[1, 0], [1, 0], [0, 1]])
    >>> frameforge.matroids.md_partition(F, 2)
    <IndexPartition({0, 2}, {1})>
    '''
    if m_parts < 1:
        raise ParameterError('m_parts must be at least 1, '
                             'got {}'.format(m_parts))

    oracle = LinearMatroid(frame, tol)
    aug = _Augmenter(oracle, m_parts)

    union_rank = 0
    for x in range(frame.size):
        if aug.insert(x) is None:
            union_rank += 1

    partition = IndexPartition(aug.assignment(frame.size), part_count=m_parts)
    partition = normalize_md(frame, partition, tol)

    dims = _span_dims(oracle, partition)
    if sum(dims) != union_rank:
        raise InternalContractViolation('Span dimensions {} do not add up '
                                        'to the union rank {}'
                                        .format(dims, union_rank))

    for number, part in enumerate(partition.parts[1:], 2):
        if not oracle.is_independent(part):
            raise InternalContractViolation('Part {} is dependent'
                                            .format(number))
    return partition


LinkWitness = namedtuple('LinkWitness', ['alpha', 'coefficients'])
'''Dependency behind one chain link.

For the first link, ``f_a = sum_j coefficients[j] f_j``, and `alpha` is
`None`.  For later links,
``f_a = alpha f_prev + sum_j coefficients[j] f_j`` with ``alpha != 0``.
The sums run over the other indices of the link's part.
'''


def _link(frame, oracle, parts, prev, a, b):
    '''Try to extend a chain ending at `prev` by ``(a, b)``.

    Returns
    -------
    witness : LinkWitness or None
    '''
    tol = oracle.tol
    members = set(parts[b - 1])
    rest = sorted(members - {a})
    f_a = frame[a]

    if prev is None:
        coef = linalg.solve_in_span(frame.rows(rest), f_a, tol)
        if coef is None:
            return None
        return LinkWitness(None, dict(zip(rest, coef)))

    if not oracle.spans(prev, members):
        return None

    f_prev = frame[prev]

    if oracle.spans(a, rest):
        coef = linalg.solve_in_span(frame.rows(rest), f_a - f_prev, tol)
        if coef is None:
            return None
        alpha = 1
    elif not oracle.spans(prev, rest):
        span = sorted(members)
        beta = linalg.solve_in_span(frame.rows(span), f_prev, tol)
        if beta is None:
            return None
        pivot = beta[span.index(a)]
        if abs(pivot) <= tol.eig_abs:
            return None
        alpha = 1 / pivot
        coef = [-beta[span.index(j)] / pivot for j in rest]
    else:
        return None

    if abs(alpha) <= tol.eig_abs:
        return None
    return LinkWitness(alpha, dict(zip(rest, coef)))


class Chain(object):
    '''A sequence of dependency exchanges between parts.

    Links are ``(a, b)`` pairs: index `a` in part `b` (counted from 1).
    The first link is a vector dependent within its own part; each later
    vector is a combination of the previous one (with nonzero weight) and
    the rest of its own part.

    Parameters
    ----------
    links : sequence of (int, int)
    witnesses : sequence of LinkWitness
    '''

    def __init__(self, links, witnesses):
        self.links = tuple((int(a), int(b)) for a, b in links)
        self.witnesses = tuple(witnesses)
        if len(self.links) != len(self.witnesses):
            raise ParameterError('Got {} links and {} witnesses'
                                 .format(len(self.links),
                                         len(self.witnesses)))

    @property
    def start(self):
        return self.links[0][0]

    @property
    def end(self):
        return self.links[-1][0]

    def __len__(self):
        return len(self.links)

    def __iter__(self):
        return iter(self.links)

    def __eq__(self, other):
        return isinstance(other, Chain) and self.links == other.links

    def __repr__(self):
        return '<Chain({})>'.format(' -> '.join('({}, {})'.format(a, b)
                                                for a, b in self.links))

    @tolerant
    def verify(self, frame, partition, tol=None):
        '''Re-derive every link from the stored coefficients.

        Parameters
        ----------
        frame : Frame
        partition : IndexPartition
        tol : Tolerance

        Returns
        -------
        valid : bool
            True if the indices are distinct, every index lies in its
            stated part, every residual vanishes and every later link has
            ``|alpha| > eig_abs``
        '''
        indices = [a for a, _ in self.links]
        if not self.links or len(set(indices)) != len(indices):
            return False

        prev = None
        for (a, b), wit in zip(self.links, self.witnesses):
            if not 1 <= b <= partition.part_count:
                return False
            members = set(partition.part(b))
            if a not in members or not set(wit.coefficients) <= members - {a}:
                return False

            residual = frame[a]
            if prev is not None:
                if wit.alpha is None or abs(wit.alpha) <= tol.eig_abs:
                    return False
                residual = residual - wit.alpha * frame[prev]
            for j, c in wit.coefficients.items():
                residual = residual - c * frame[j]

            if frame.exact and linalg.is_exact(residual):
                if any(x != 0 for x in residual):
                    return False
            else:
                scale = max(1.0, float(np.linalg.norm(
                    np.asarray(frame[a], dtype=float))))
                if (np.linalg.norm(np.asarray(residual, dtype=float)) >
                        10 * tol.eig_abs * scale):
                    return False
            prev = a

        return True


@tolerant
def find_chains(frame, partition, l_start, tol=None):
    '''All indices reachable by a chain starting in `l_start`.

    Breadth-first search over chain links, scanning parts and indices in
    ascending order.  Each reached index gets a chain of minimal length.

    Parameters
    ----------
    frame : Frame

    partition : IndexPartition
        Parts ``2 .. M`` must be linearly independent

    l_start : iterable of int
        Start indices.  Each must be dependent within its own part.

    tol : Tolerance

    Returns
    -------
    reachable : tuple of int
        Sorted, including `l_start`

    chains : list of Chain
        One minimal chain per reachable index, in the order of `reachable`

    Raises
    ------
    PreconditionViolated
        If a part other than the first is dependent
    ParameterError
        If a start index is independent within its part
    '''
    oracle = LinearMatroid(frame, tol)
    parts = partition.parts

    for number, part in enumerate(parts[1:], 2):
        if not oracle.is_independent(part):
            raise PreconditionViolated('Part {} is linearly dependent'
                                       .format(number))

    label = dict()
    queue = deque()

    for a in index_set(l_start, frame.size):
        b = partition.assignment[a]
        wit = _link(frame, oracle, parts, None, a, b)
        if wit is None:
            raise ParameterError('Index {} is independent within part {} and '
                                 'cannot start a chain'.format(a, b))
        label[a] = (None, b, wit)
        queue.append(a)

    while queue:
        prev = queue.popleft()
        for b in range(1, partition.part_count + 1):
            for a in parts[b - 1]:
                if a in label:
                    continue
                wit = _link(frame, oracle, parts, prev, a, b)
                if wit is not None:
                    label[a] = (prev, b, wit)
                    queue.append(a)

    reachable = tuple(sorted(label))
    chains = []
    for end in reachable:
        links, witnesses = [], []
        current = end
        while current is not None:
            prev, b, wit = label[current]
            links.append((current, b))
            witnesses.append(wit)
            current = prev
        chains.append(Chain(links[::-1], witnesses[::-1]))

    return reachable, chains


class T2Witness(object):
    '''Structural certificate that no split into `m_parts` independent sets
    exists.

    Attributes
    ----------
    partition : IndexPartition
        Into `m_parts` parts

    subspace_basis : np.ndarray, shape=(d, N)
        Rows spanning the subspace `S`

    basis_indices : tuple of int
        Frame indices of those rows

    violating_set : tuple of int
        ``J = {i : f_i in S}``

    m_parts : int
    '''

    def __init__(self, partition, subspace_basis, basis_indices,
                 violating_set, m_parts):
        self.partition = partition
        self.subspace_basis = subspace_basis
        self.basis_indices = tuple(basis_indices)
        self.violating_set = tuple(violating_set)
        self.m_parts = m_parts

    @property
    def dim(self):
        '''Dimension of `S`'''
        return len(self.basis_indices)

    @property
    def ratio(self):
        '''``|J| / dim S`` as a Fraction, or None if ``S = {0}``'''
        if self.dim == 0:
            return None
        return Fraction(len(self.violating_set), self.dim)

    def __repr__(self):
        return '<T2Witness(dim={}, J={}, ratio={})>'.format(
            self.dim, self.violating_set, self.ratio)

    @property
    def __json__(self):
        return dict(partition=self.partition.__json__,
                    basis_indices=list(self.basis_indices),
                    violating_set=list(self.violating_set),
                    dim=self.dim, m_parts=self.m_parts,
                    ratio=None if self.ratio is None else str(self.ratio))

    @tolerant
    def check(self, frame, tol=None):
        '''Recompute the three witness properties by rank alone.

        Returns
        -------
        spans_each : bool
            For every part, the part's vectors inside `S` span `S`

        violates : bool
            ``|J| > m_parts * dim span {f_i : i in J}``

        independent_mod_s : bool
            For every part, the part's vectors outside `S` are linearly
            independent modulo `S`
        '''
        basis = np.asarray(self.subspace_basis)
        if basis.size == 0:
            basis = frame.rows([])
        d = linalg.rank(basis, tol)

        def stacked(indices):
            return np.concatenate([basis, frame.rows(indices)], axis=0)

        def in_s(i):
            return linalg.rank(stacked([i]), tol) == d

        spans_each = True
        independent_mod_s = True

        for part in self.partition.parts:
            inside = [i for i in part if in_s(i)]
            outside = [i for i in part if i not in inside]

            if (linalg.rank(frame.rows(inside), tol) != d or
                    linalg.rank(stacked(inside), tol) != d):
                spans_each = False

            if linalg.rank(stacked(outside), tol) != d + len(outside):
                independent_mod_s = False

        members = [i for i in range(frame.size) if in_s(i)]
        violates = (members == list(self.violating_set) and
                    len(members) > self.m_parts *
                    linalg.rank(frame.rows(members), tol))

        return spans_each, violates, independent_mod_s


@tolerant
def t2_witness(frame, m_parts, tol=None):
    '''Construct the subspace obstruction for an infeasible partition.

    Starting from a dimension-maximal partition, the dependent vectors of
    part 1 are closed under chains; their span `S` is covered by every part,
    holds more than ``m_parts * dim S`` frame vectors, and every part is
    independent modulo `S`.

    Parameters
    ----------
    frame : Frame
    m_parts : int >= 1
    tol : Tolerance

    Returns
    -------
    witness : T2Witness

    Raises
    ------
    FeasibleInput
        If the frame can be split into `m_parts` independent sets
    InternalContractViolation
        If the constructed witness fails one of its properties

    Examples
    --------
    >>> F = frameforge.frames.Frame([[1, 0], [1, 0], [1, 0], [0, 1]])
    >>> frameforge.matroids.t2_witness(F, 2)
    <T2Witness(dim=1, J=(0, 1, 2), ratio=3)>
    '''
    oracle = LinearMatroid(frame, tol)

    result = matroid_partition(oracle, m_parts)
    if isinstance(result, IndexPartition):
        raise FeasibleInput('{} splits into {} independent sets: {}'
                            .format(frame, m_parts, result))

    partition = md_partition(frame, m_parts, tol)
    first = partition.part(1)
    dependent = [i for i in first if oracle.spans(i, set(first) - {i})]

    if not dependent:
        raise InternalContractViolation('Part 1 of a maximal partition is '
                                        'independent on an infeasible input')

    reachable, _ = find_chains(frame, partition, dependent, tol)

    basis = []
    for i in reachable:
        if oracle.rank(basis + [i]) > len(basis):
            basis.append(i)

    members = [i for i in range(frame.size)
               if oracle.rank(basis + [i]) == len(basis)]

    witness = T2Witness(partition, frame.rows(basis), basis, members, m_parts)

    checks = witness.check(frame, tol)
    if not all(checks):
        raise InternalContractViolation('Witness fails its checks '
                                        '(a, b, c) = {}'.format(checks))
    return witness
