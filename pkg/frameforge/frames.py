#!/usr/bin/env python
# -*- encoding: utf-8 -*-
r'''
Frames
------

Finite frames, their Gram matrices, and the Gram-matrix criteria for
spanning subfamilies of Parseval frames.

Object reference
^^^^^^^^^^^^^^^^
.. autosummary::
    :toctree: generated/
    :template: class.rst

    Frame
    FrameBounds
    SpanEvidence

Function reference
^^^^^^^^^^^^^^^^^^
.. autosummary::
    :toctree: generated/

    validate_frame
    frame_operator
    norms_squared
    is_parseval
    gram
    compress
    gram_split
    projector_is_identity
    spans_subset
    complementarity_check
    harmonic_frame
    random_parseval
    scaled_union_of_bases
    mercedes_benz
    orthonormal_basis
'''

import warnings
from collections import namedtuple
from fractions import Fraction
from math import isqrt

import numpy as np

from . import linalg
from .linalg import tolerant
from .exceptions import (InvalidShape, NotAFrame, NotParseval, NotProjector,
                         CriterionMismatch, InternalContractViolation,
                         ParameterError)

__all__ = ['Frame', 'FrameBounds', 'SpanEvidence',
           'validate_frame', 'frame_operator', 'norms_squared',
           'is_parseval', 'gram', 'compress', 'gram_split',
           'projector_is_identity', 'spans_subset', 'complementarity_check',
           'harmonic_frame', 'random_parseval', 'scaled_union_of_bases',
           'mercedes_benz', 'orthonormal_basis']


FrameBounds = namedtuple('FrameBounds', ['lower', 'upper'])
'''Optimal frame bounds: extreme eigenvalues of the frame operator.'''


SpanEvidence = namedtuple('SpanEvidence',
                          ['rank', 'eigenvalue', 'routes', 'parseval'])
'''Evidence behind a spanning verdict.

`rank` is the dimension of the span of the subfamily; `eigenvalue` is the top
eigenvalue of the Gram matrix compressed to the complementary indices (`None`
when only the rank route applies); `routes` names the criteria evaluated.
'''


class Frame(object):
    '''An ordered family of vectors in a finite-dimensional real space.

    Construction only checks shapes.  Whether the family spans is decided
    by `validate_frame`.

    Parameters
    ----------
    vectors : array-like, shape=(M, N)
        One row per frame vector

    labels : sequence of str, optional
        Per-vector identifiers

    exact : bool or None
        Scalar mode, see `frameforge.linalg.as_matrix`

    Examples
    --------
    >>> F = frameforge.frames.Frame([[1, 0], [0, 1], [1, 1]])
    >>> F.dim, F.size
    (2, 3)
    '''

    def __init__(self, vectors, labels=None, exact=None):
        vectors = linalg.as_matrix(vectors, exact=exact)

        if vectors.shape[0] < 1 or vectors.shape[1] < 1:
            raise InvalidShape('A frame needs at least one vector of '
                               'dimension at least one, got shape '
                               '{}'.format(vectors.shape))

        if labels is not None:
            labels = tuple(str(_) for _ in labels)
            if len(labels) != vectors.shape[0]:
                raise InvalidShape('Got {} labels for {} vectors'
                                   .format(len(labels), vectors.shape[0]))

        vectors.setflags(write=False)
        self._vectors = vectors
        self._labels = labels

    @property
    def vectors(self):
        '''The (read-only) M x N matrix of frame vectors'''
        return self._vectors

    @property
    def labels(self):
        return self._labels

    @property
    def dim(self):
        '''Ambient dimension N'''
        return self._vectors.shape[1]

    @property
    def size(self):
        '''Number of vectors M'''
        return self._vectors.shape[0]

    @property
    def exact(self):
        '''True if the vectors are exact rationals'''
        return linalg.is_exact(self._vectors)

    @property
    def scalar_mode(self):
        return 'exact-rational' if self.exact else 'float'

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(self._vectors)

    def __getitem__(self, idx):
        return self._vectors[idx]

    def __eq__(self, other):
        return (isinstance(other, Frame) and
                self._vectors.shape == other._vectors.shape and
                self.exact == other.exact and
                bool(np.all(self._vectors == other._vectors)) and
                self._labels == other._labels)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<Frame(dim={}, size={}, scalar_mode={})>'.format(
            self.dim, self.size, self.scalar_mode)

    def rows(self, indices):
        '''The vectors at `indices` as a (possibly empty) k x N matrix.'''
        indices = list(indices)
        if not indices:
            return self._vectors[:0]
        return self._vectors[indices]

    def subframe(self, indices):
        '''The subfamily at `indices`, as a new Frame.'''
        indices = list(indices)
        labels = None
        if self._labels is not None:
            labels = [self._labels[i] for i in indices]
        return Frame(self.rows(indices), labels=labels)

    def project(self, projector):
        '''Apply an orthogonal projector to every vector.'''
        projector = np.asarray(projector)
        vectors = self._vectors
        if self.exact != linalg.is_exact(projector):
            vectors = np.asarray(vectors, dtype=float)
            projector = np.asarray(projector, dtype=float)
        return Frame(vectors.dot(projector), labels=self._labels)

    def nonzero_indices(self):
        '''Indices of the nonzero vectors.

        A vector is zero when all of its entries are; this matches `rank`,
        which gives every nonzero singleton rank one.
        '''
        return tuple(i for i, v in enumerate(self._vectors)
                     if any(x != 0 for x in v))

    def without_zeros(self):
        '''Drop zero vectors.

        Returns
        -------
        frame : Frame
            The nonzero vectors, in order

        kept : tuple of int
            Their indices in this frame

        Raises
        ------
        InvalidShape
            If every vector is zero
        '''
        kept = self.nonzero_indices()
        if not kept:
            raise InvalidShape('Every vector of {} is zero'.format(self))
        return self.subframe(kept), kept

    def scaled(self, factor):
        '''Multiply every vector by `factor`.'''
        if self.exact and isinstance(factor, (int, Fraction)):
            return Frame(self._vectors * Fraction(factor), labels=self._labels)
        return Frame(np.asarray(self._vectors, dtype=float) * float(factor),
                     labels=self._labels)

    def to_float(self):
        return Frame(self._vectors, labels=self._labels, exact=False)

    def to_exact(self):
        return Frame(self._vectors, labels=self._labels, exact=True)


def index_set(subset, size):
    '''Normalize an index collection to a sorted tuple within range.

    Raises
    ------
    ParameterError
        If an index lies outside ``[0, size)``
    '''
    idx = tuple(sorted(set(int(i) for i in subset)))
    if idx and (idx[0] < 0 or idx[-1] >= size):
        raise ParameterError('Index set {} does not lie within '
                             '[0, {})'.format(idx, size))
    return idx


def complement(subset, size):
    '''Sorted complement of an index set in ``[0, size)``.'''
    members = set(index_set(subset, size))
    return tuple(i for i in range(size) if i not in members)


def _identity(n, exact):
    if exact:
        return np.array([[Fraction(int(i == j)) for j in range(n)]
                         for i in range(n)], dtype=object)
    return np.eye(n)


def frame_operator(frame):
    '''The frame operator ``S = sum_i f_i f_i^T`` as an N x N matrix.'''
    return frame.vectors.T.dot(frame.vectors)


def norms_squared(frame):
    '''Squared norms of the frame vectors, as floats.'''
    vecs = np.asarray(frame.vectors, dtype=float)
    return np.sum(vecs ** 2, axis=1)


@tolerant
def validate_frame(frame, tol=None):
    '''Check that a family spans, and compute its optimal frame bounds.

    Parameters
    ----------
    frame : Frame

    tol : Tolerance

    Returns
    -------
    bounds : FrameBounds
        Smallest and largest eigenvalue of the frame operator

    Raises
    ------
    NotAFrame
        If the smallest eigenvalue does not exceed ``tol.eig_abs``

    Examples
    --------
    >>> F = frameforge.frames.Frame([[1, 0], [1, 0], [0, 1]])
    >>> frameforge.frames.validate_frame(F)
    FrameBounds(lower=1.0, upper=2.0)
    '''
    eigs = linalg.eigenvalues_sym(frame_operator(frame), tol)

    if eigs[0] <= tol.eig_abs:
        raise NotAFrame('Family does not span R^{}: smallest frame operator '
                        'eigenvalue is {:.3g}'.format(frame.dim, eigs[0]))

    return FrameBounds(float(eigs[0]), float(eigs[-1]))


def gram(frame):
    '''The Gram matrix ``G[i, j] = <f_j, f_i>``.

    Exact frames give exact Gram matrices.
    '''
    return frame.vectors.dot(frame.vectors.T)


def compress(matrix, subset):
    '''Restrict a square matrix to the rows and columns in `subset`.

    The nonzero block of ``D_B M D_B``; its nonzero eigenvalues are those
    of the compression.
    '''
    idx = list(subset)
    return np.asarray(matrix)[np.ix_(idx, idx)]


def _is_zero(m, exact, slack):
    if exact:
        return bool(np.all(m == 0))
    return linalg.spectral_norm(m) <= slack


@tolerant
def is_parseval(frame, tol=None):
    '''Test whether a frame is Parseval.

    Two criteria are evaluated: the Gram matrix is idempotent, and the
    frame operator is the identity (both within ``10 * eig_abs``, or exactly
    for exact frames).  The frame is reported Parseval only if both hold;
    a disagreement is reported with a warning.

    Parameters
    ----------
    frame : Frame
    tol : Tolerance

    Returns
    -------
    parseval : bool

    Examples
    --------
    >>> frameforge.frames.is_parseval(frameforge.frames.harmonic_frame(2, 4))
    True
    '''
    exact = frame.exact
    slack = 10 * tol.eig_abs

    g = gram(frame)
    gram_ok = _is_zero(g.dot(g) - g, exact, slack)
    op_ok = _is_zero(frame_operator(frame) - _identity(frame.dim, exact),
                     exact, slack)

    if gram_ok != op_ok:
        warnings.warn('Parseval criteria disagree (Gram idempotent: {}, '
                      'frame operator = I: {}); reporting not Parseval'
                      .format(gram_ok, op_ok))

    return gram_ok and op_ok


def require_parseval(frame, tol):
    '''Raise NotParseval unless `frame` is Parseval.'''
    if not is_parseval(frame, tol):
        raise NotParseval('{} is not a Parseval frame'.format(frame))


def _as_projector(projector, n, tol):
    projector = np.asarray(projector)
    if projector.shape != (n, n) or not linalg.is_projector(projector, tol):
        raise NotProjector('Matrix of shape {} is not an orthogonal '
                           'projector on R^{}'.format(projector.shape, n))
    return projector


def _matching_modes(frame, projector):
    vectors = frame.vectors
    if frame.exact and linalg.is_exact(projector):
        return vectors, projector, True
    return (np.asarray(vectors, dtype=float),
            np.asarray(projector, dtype=float), False)


@tolerant
def gram_split(frame, projector, tol=None):
    '''Split the Gram matrix of a Parseval frame along a projector.

    With ``R = (<P f_j, P f_i>)`` and ``Q = (<(I-P) f_j, (I-P) f_i>)``,
    ``G = R + Q`` and all three are projections.

    Parameters
    ----------
    frame : Frame
        A Parseval frame

    projector : np.ndarray, shape=(N, N)
        An orthogonal projector

    tol : Tolerance

    Returns
    -------
    G, R, Q : np.ndarray, shape=(M, M)

    Raises
    ------
    NotParseval
    NotProjector
    InternalContractViolation
        If ``G = R + Q`` or an idempotency check fails numerically
    '''
    require_parseval(frame, tol)
    projector = _as_projector(projector, frame.dim, tol)

    vectors, projector, exact = _matching_modes(frame, projector)
    eye = _identity(frame.dim, exact)

    g = vectors.dot(vectors.T)
    r = vectors.dot(projector).dot(vectors.T)
    q = vectors.dot(eye - projector).dot(vectors.T)

    slack = 10 * tol.eig_abs
    if not _is_zero(g - r - q, exact, slack):
        raise InternalContractViolation('G != R + Q')

    for name, mat in [('G', g), ('R', r), ('Q', q)]:
        if not linalg.is_projector(mat, tol):
            raise InternalContractViolation('{} is not a projection'
                                            .format(name))

    return g, r, q


@tolerant
def projector_is_identity(frame, projector, tol=None):
    '''Decide ``P = I`` from the Gram split of a Parseval frame.

    `P` is the identity exactly when 1 is not an eigenvalue of `Q`.  The
    verdict is cross-checked against ``||P - I||``.

    Raises
    ------
    CriterionMismatch
        If the two tests disagree
    '''
    _, _, q = gram_split(frame, projector, tol)
    by_q = linalg.top_eigenvalue_sym(q, tol) <= 1 - tol.eig_abs

    projector = np.asarray(projector)
    exact = linalg.is_exact(projector)
    by_p = _is_zero(projector - _identity(frame.dim, exact), exact,
                    10 * tol.eig_abs)

    if by_q != by_p:
        raise CriterionMismatch('Q-eigenvalue test says P = I is {}, '
                                'direct test says {}'.format(by_q, by_p))
    return by_p


@tolerant
def spans_subset(frame, subset, tol=None, parseval=None):
    '''Decide whether the subfamily at `subset` spans the ambient space.

    The verdict is computed by rank, and for Parseval frames also by the
    compressed Gram criterion: the subfamily at `B` spans if and only if 1 is
    not an eigenvalue of ``D_{B^c} G D_{B^c}``.  Top eigenvalues inside
    ``(1 - eig_abs, 1 + eig_abs)`` count as 1.

    Parameters
    ----------
    frame : Frame

    subset : iterable of int
        The index set `B`

    tol : Tolerance

    parseval : bool or None
        Whether `frame` is known to be Parseval.  If `None`, it is tested.
        Non-Parseval frames are decided by rank alone, and the evidence
        records this.

    Returns
    -------
    spans : bool

    evidence : SpanEvidence

    Raises
    ------
    CriterionMismatch
        If the two criteria disagree

    Examples
    --------
    >>> MB = frameforge.frames.mercedes_benz()
    >>> spans, ev = frameforge.frames.spans_subset(MB, [0, 1])
    >>> spans, round(ev.eigenvalue, 6)
    (True, 0.666667)
    '''
    idx = index_set(subset, frame.size)
    rnk = linalg.rank(frame.rows(idx), tol)
    by_rank = rnk == frame.dim

    if parseval is None:
        parseval = is_parseval(frame, tol)

    if not parseval:
        return by_rank, SpanEvidence(rnk, None, ('rank',), False)

    lam = linalg.top_eigenvalue_sym(compress(gram(frame),
                                             complement(idx, frame.size)),
                                    tol)
    by_eig = lam <= 1 - tol.eig_abs

    if by_eig != by_rank:
        raise CriterionMismatch('Spanning test on {}: rank {} of {} says {}, '
                                'compressed Gram eigenvalue {:.12g} says {}'
                                .format(idx, rnk, frame.dim, by_rank,
                                        lam, by_eig))

    return by_rank, SpanEvidence(rnk, lam, ('rank', 'eigenvalue'), True)


@tolerant
def complementarity_check(dim, projector, subset, tol=None):
    '''Spanning / independence complementarity under a projector.

    For an orthogonal projector `P` on R^N and ``B`` a set of coordinates,
    ``{P e_j : j in B}`` spans ``P(R^N)`` if and only if
    ``{(I-P) e_j : j not in B}`` is linearly independent.

    Parameters
    ----------
    dim : int
        N

    projector : np.ndarray, shape=(N, N)

    subset : iterable of int
        B

    tol : Tolerance

    Returns
    -------
    spans : bool

    independent : bool

    Raises
    ------
    NotProjector
    CriterionMismatch
        If the two booleans differ

    Examples
    --------
    >>> frameforge.frames.complementarity_check(2, np.diag([1.0, 0.0]), [1])
    (False, False)
    '''
    projector = _as_projector(projector, dim, tol)
    idx = index_set(subset, dim)
    rest = complement(idx, dim)

    exact = linalg.is_exact(projector)
    residual = _identity(dim, exact) - projector

    # P is symmetric, so row j of P is P e_j
    spans = (linalg.rank(projector[list(idx)] if idx else projector[:0], tol)
             == linalg.rank(projector, tol))
    independent = (linalg.rank(residual[list(rest)] if rest else residual[:0],
                               tol) == len(rest))

    if spans != independent:
        raise CriterionMismatch('Complementarity fails on B={}: spans={}, '
                                'independent={}'.format(idx, spans,
                                                        independent))
    return spans, independent


def harmonic_frame(n, m):
    '''Real harmonic frame of `m` vectors in R^n.

    The rows of the real orthonormal Fourier basis of R^m are chosen so
    that every frame vector has squared norm ``n / m``: cosine/sine pairs of
    the lowest frequencies, preceded by the constant row when `n` is odd,
    and by the constant and alternating rows when ``n == m`` is even.
    Frame vector `k` is column `k` of the chosen rows.

    Parameters
    ----------
    n : int >= 1
        Dimension

    m : int >= n
        Number of vectors

    Returns
    -------
    frame : Frame
        An equal-norm Parseval frame

    Raises
    ------
    InvalidShape
        If ``m < n`` or ``n < 1``

    Examples
    --------
    >>> F = frameforge.frames.harmonic_frame(2, 3)
    >>> frameforge.frames.norms_squared(F)
    array([0.66666667, 0.66666667, 0.66666667])
    '''
    if n < 1 or m < n:
        raise InvalidShape('harmonic_frame needs m >= n >= 1, got n={}, '
                           'm={}'.format(n, m))

    theta = 2 * np.pi * np.arange(m) / m
    columns = []
    remaining = n

    if n % 2 == 1 or n // 2 > (m - 1) // 2:
        columns.append(np.full(m, 1.0 / np.sqrt(m)))
        remaining -= 1
        if remaining % 2 == 1:
            columns.append(np.cos(np.pi * np.arange(m)) / np.sqrt(m))
            remaining -= 1

    scale = np.sqrt(2.0 / m)
    for freq in range(1, remaining // 2 + 1):
        columns.append(scale * np.cos(freq * theta))
        columns.append(scale * np.sin(freq * theta))

    return Frame(np.stack(columns, axis=1))


def random_parseval(n, m, seed):
    '''A seeded random Parseval frame of `m` vectors in R^n.

    The `n` columns of a Gaussian m x n matrix are orthonormalized (QR with
    the signs of ``diag(R)`` fixed positive); the rows form the frame.

    Parameters
    ----------
    n : int >= 1
    m : int >= n
    seed : int

    Returns
    -------
    frame : Frame

    Raises
    ------
    InvalidShape
    '''
    if n < 1 or m < n:
        raise InvalidShape('random_parseval needs m >= n >= 1, got n={}, '
                           'm={}'.format(n, m))

    rng = np.random.RandomState(seed)
    q, r = np.linalg.qr(rng.randn(m, n))
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return Frame(q * signs)


def scaled_union_of_bases(n, r, exact=False):
    '''`r` copies of the standard basis of R^n, each scaled by ``1/sqrt(r)``.

    Parameters
    ----------
    n : int >= 1
    r : int >= 1
    exact : bool
        Build exact rational vectors.  Requires `r` to be a perfect square.

    Returns
    -------
    frame : Frame
        A Parseval frame of ``r * n`` vectors with squared norms ``1/r``

    Raises
    ------
    InvalidShape
    ParameterError
        If `exact` is requested and `r` is not a perfect square
    '''
    if n < 1 or r < 1:
        raise InvalidShape('scaled_union_of_bases needs n, r >= 1, got '
                           'n={}, r={}'.format(n, r))

    if exact:
        root = isqrt(r)
        if root * root != r:
            raise ParameterError('Exact scaled union needs a square r, '
                                 'got {}'.format(r))
        basis = _identity(n, True) * Fraction(1, root)
        return Frame(np.concatenate([basis] * r, axis=0))

    return Frame(np.tile(np.eye(n), (r, 1)) / np.sqrt(r))


def mercedes_benz():
    '''The three-vector equal-norm Parseval frame of R^2.'''
    return harmonic_frame(2, 3)


def orthonormal_basis(n, exact=False):
    '''The standard basis of R^n as a frame.'''
    return Frame(_identity(n, exact))
