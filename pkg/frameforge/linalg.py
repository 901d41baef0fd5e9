#!/usr/bin/env python
# -*- encoding: utf-8 -*-
r'''
Linear algebra
--------------

Small dense linear algebra over the reals, in two scalar modes:

- *float*: ``numpy.float64`` arrays, with decisions governed by a `Tolerance`
- *exact*: ``numpy`` object arrays of `fractions.Fraction`

The mode is carried by the array itself (object dtype means exact).
Spectral quantities are always computed in floating point.

.. autosummary::
    :toctree: generated/

    Tolerance
    tolerant
    as_tolerance
    as_matrix
    is_exact
    rank
    top_eigenvalue_sym
    eigenvalues_sym
    spectral_norm
    orthoprojector
    is_projector
    solve_in_span
'''

import inspect
from collections import namedtuple
from fractions import Fraction
from functools import reduce, lru_cache
from math import gcd

import numpy as np
from decorator import decorator

from .exceptions import NotSymmetric, ParameterError

__all__ = ['Tolerance', 'DEFAULT_TOL', 'tolerant', 'as_tolerance',
           'as_matrix', 'is_exact', 'rank', 'top_eigenvalue_sym',
           'eigenvalues_sym', 'spectral_norm', 'orthoprojector',
           'is_projector', 'solve_in_span']


class Tolerance(namedtuple('Tolerance', ['rank_rel', 'eig_abs'])):
    '''Numerical tolerances for rank and eigenvalue decisions.

    Attributes
    ----------
    rank_rel : float in (0, 1e-3)
        Relative singular-value threshold.  A singular value counts towards
        the rank if it exceeds ``rank_rel * max(rows, cols) * s_max``.

    eig_abs : float in (0, 1e-3)
        Absolute slack for eigenvalue comparisons.

    Examples
    --------
    >>> frameforge.linalg.Tolerance()
    Tolerance(rank_rel=1e-09, eig_abs=1e-09)
    >>> frameforge.linalg.Tolerance(eig_abs=1e-6).eig_abs
    1e-06
    '''
    __slots__ = ()

    def __new__(cls, rank_rel=1e-9, eig_abs=1e-9):
        for name, value in [('rank_rel', rank_rel), ('eig_abs', eig_abs)]:
            if not 0 < value < 1e-3:
                raise ParameterError('Tolerance {} must lie in (0, 1e-3), '
                                     'got {}'.format(name, value))

        return super(Tolerance, cls).__new__(cls, float(rank_rel),
                                             float(eig_abs))


DEFAULT_TOL = Tolerance()


def as_tolerance(tol):
    '''Coerce `None`, a dict or a pair into a `Tolerance`.

    Parameters
    ----------
    tol : None, Tolerance, dict or tuple

    Returns
    -------
    tol : Tolerance
    '''
    if tol is None:
        return DEFAULT_TOL
    if isinstance(tol, Tolerance):
        return tol
    if isinstance(tol, dict):
        return Tolerance(**tol)
    return Tolerance(*tol)


@lru_cache(maxsize=None)
def _tol_position(func):
    return list(inspect.signature(func).parameters).index('tol')


def __fill_tolerance(func, *args, **kwargs):
    '''Replace the `tol` argument of `func` by a proper Tolerance.'''
    pos = _tol_position(func)

    if pos < len(args):
        args = list(args)
        args[pos] = as_tolerance(args[pos])
    else:
        kwargs['tol'] = as_tolerance(kwargs.get('tol'))

    return func(*args, **kwargs)


tolerant = decorator(__fill_tolerance)
tolerant.__doc__ = '''Decorator: normalize the ``tol`` argument of a function.

The decorated function sees a `Tolerance` whether its caller passed
`None`, a `Tolerance`, a dict of fields, or a pair.
'''


def _fraction(value):
    '''Convert a scalar to an exact Fraction.'''
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(float(value))


_to_fraction = np.vectorize(_fraction, otypes=[object])


def is_exact(m):
    '''True if `m` holds exact rationals (object dtype).'''
    return np.asarray(m).dtype == object


def as_matrix(data, exact=None, cols=None):
    '''Build a two-dimensional array in the requested scalar mode.

    Parameters
    ----------
    data : array-like
        Rows of the matrix

    exact : bool or None
        If `True`, convert every entry to `Fraction`.
        If `False`, convert to float64.
        If `None`, keep exact input exact and make everything else float.

    cols : int or None
        Column count to use when `data` is empty.

    Returns
    -------
    m : np.ndarray, ndim=2
    '''
    arr = np.asarray(data)
    if exact is None:
        exact = arr.dtype == object

    if exact:
        arr = np.asarray(data, dtype=object)
        if arr.size:
            arr = _to_fraction(arr)
    else:
        arr = np.asarray(data, dtype=float)

    if arr.size == 0 and cols is not None:
        arr = arr.reshape((0, cols))

    if arr.ndim != 2:
        raise ParameterError('Expected a two-dimensional array, '
                             'got shape {}'.format(arr.shape))
    return arr


def _as_float(m):
    return np.asarray(m, dtype=float)


def _integer_rows(m):
    '''Scale each row of a rational matrix to a row of integers.'''
    rows = []
    for row in m:
        fracs = [_fraction(x) for x in row]
        scale = reduce(lambda a, b: a * b // gcd(a, b),
                       (x.denominator for x in fracs), 1)
        rows.append([int(x * scale) for x in fracs])
    return rows


def _exact_echelon(m):
    '''Fraction-free row echelon form.

    Rows are combined by cross-cancellation
    ``row[i] = a * row[i] - b * row[j]`` and then divided by their content,
    so every entry stays an integer.

    Returns
    -------
    rows : list of list of int
        The echelon rows (zero rows dropped)
    pivots : list of int
        Pivot column of each returned row
    '''
    rows = _integer_rows(m)
    if not rows:
        return [], []

    n_cols = len(rows[0])
    piv_row = 0
    pivots = []

    for col in range(n_cols):
        if piv_row == len(rows):
            break

        pivot = next((i for i in range(piv_row, len(rows)) if rows[i][col]),
                     None)
        if pivot is None:
            continue

        rows[piv_row], rows[pivot] = rows[pivot], rows[piv_row]
        top = rows[piv_row]

        for i in range(piv_row + 1, len(rows)):
            lead = rows[i][col]
            if not lead:
                continue
            new = [top[col] * x - lead * y for x, y in zip(rows[i], top)]
            content = reduce(gcd, new, 0)
            if content > 1:
                new = [x // content for x in new]
            rows[i] = new

        pivots.append(col)
        piv_row += 1

    return rows[:piv_row], pivots


@tolerant
def rank(m, tol=None):
    '''Rank of a matrix.

    Parameters
    ----------
    m : np.ndarray, ndim=2
        Float or exact matrix

    tol : Tolerance

    Returns
    -------
    rank : int
        In float mode, the number of singular values exceeding
        ``tol.rank_rel * max(rows, cols) * s_max``.
        In exact mode, the exact rank.

    Examples
    --------
    >>> frameforge.linalg.rank(np.eye(2))
    2
    >>> frameforge.linalg.rank(np.array([[1, 0], [0, 1], [1, 1]]))
    2
    '''
    m = np.asarray(m)
    if m.size == 0:
        return 0

    if is_exact(m):
        return len(_exact_echelon(m)[1])

    sv = np.linalg.svd(_as_float(m), compute_uv=False)
    cut = tol.rank_rel * sv[0] * max(m.shape)
    return int(np.sum(sv > cut))


def _check_symmetric(m, tol):
    m = _as_float(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetric('Matrix of shape {} is not square'.format(m.shape))

    if m.size and np.max(np.abs(m - m.T)) > tol.eig_abs:
        raise NotSymmetric('Asymmetry {:.3g} exceeds eig_abs={:.3g}'
                           .format(np.max(np.abs(m - m.T)), tol.eig_abs))

    return 0.5 * (m + m.T)


@tolerant
def eigenvalues_sym(m, tol=None):
    '''All eigenvalues of a symmetric matrix, in ascending order.

    The matrix is symmetrized and diagonalized in full
    (LAPACK ``syevd`` via `numpy.linalg.eigvalsh`), so clustered and
    repeated eigenvalues are resolved.

    Raises
    ------
    NotSymmetric
        If the asymmetry of `m` exceeds ``tol.eig_abs``
    '''
    sym = _check_symmetric(m, tol)
    if sym.size == 0:
        return np.zeros(0)
    return np.linalg.eigvalsh(sym)


@tolerant
def top_eigenvalue_sym(m, tol=None):
    '''Largest eigenvalue of a symmetric matrix.

    Parameters
    ----------
    m : np.ndarray, square

    tol : Tolerance

    Returns
    -------
    lam : float
        The top eigenvalue; `0.0` for an empty matrix.

    Raises
    ------
    NotSymmetric

    Examples
    --------
    >>> frameforge.linalg.top_eigenvalue_sym(np.diag([0.4, 0.9]))
    0.9
    '''
    eigs = eigenvalues_sym(m, tol)
    if eigs.size == 0:
        return 0.0
    return float(eigs[-1])


@tolerant
def spectral_norm(m, tol=None):
    '''Largest singular value of `m` (`0.0` for an empty matrix).'''
    m = _as_float(m)
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, 2))


def _exact_inverse(m):
    '''Gauss-Jordan inverse of a nonsingular rational matrix.'''
    n = m.shape[0]
    x = np.array(m, dtype=object)
    y = np.array([[Fraction(int(i == j)) for j in range(n)] for i in range(n)],
                 dtype=object)

    for i in range(n):
        pivot = next(j for j in range(i, n) if x[j, i] != 0)
        if pivot != i:
            x[[i, pivot]] = x[[pivot, i]]
            y[[i, pivot]] = y[[pivot, i]]

        y[i] = y[i] / x[i, i]
        x[i] = x[i] / x[i, i]

        for j in range(n):
            if j != i and x[j, i] != 0:
                y[j] = y[j] - x[j, i] * y[i]
                x[j] = x[j] - x[j, i] * x[i]

    return y


def _independent_rows(m):
    '''Indices of a maximal independent set of rows of an exact matrix.

    Rows are taken greedily in order.
    '''
    chosen = []
    for i in range(m.shape[0]):
        if len(_exact_echelon(m[chosen + [i]])[1]) == len(chosen) + 1:
            chosen.append(i)
    return chosen


@tolerant
def orthoprojector(span_of, tol=None, dim=None):
    '''Orthogonal projector onto the row span of a matrix.

    Parameters
    ----------
    span_of : np.ndarray, shape=(k, N)
        Spanning rows; may be empty

    tol : Tolerance

    dim : int or None
        Ambient dimension, required only when `span_of` has no rows and
        no column count.

    Returns
    -------
    P : np.ndarray, shape=(N, N)
        Symmetric idempotent matrix with ``rank(P) == rank(span_of)``.
        Exact input yields an exact projector.

    Examples
    --------
    >>> frameforge.linalg.orthoprojector(np.array([[1.0, 1.0]]))
    array([[0.5, 0.5],
           [0.5, 0.5]])
    '''
    span_of = np.asarray(span_of)
    if span_of.ndim != 2:
        span_of = span_of.reshape((0, dim or 0))
    n = span_of.shape[1] if dim is None else dim

    if is_exact(span_of):
        zero = np.array([[Fraction(0)] * n for _ in range(n)], dtype=object)
        if span_of.shape[0] == 0:
            return zero
        basis = span_of[_independent_rows(span_of)]
        if basis.shape[0] == 0:
            return zero
        gram = basis.dot(basis.T)
        return basis.T.dot(_exact_inverse(gram)).dot(basis)

    if span_of.shape[0] == 0:
        return np.zeros((n, n))

    _, sv, vt = np.linalg.svd(_as_float(span_of), full_matrices=False)
    keep = sv > tol.rank_rel * sv[0] * max(span_of.shape)
    basis = vt[keep]
    return basis.T.dot(basis)


@tolerant
def is_projector(p, tol=None):
    '''Test whether `p` is an orthogonal projector within ``10 * eig_abs``.

    Both ``||P - P^T||`` and ``||P^2 - P||`` are checked in spectral norm.
    '''
    p = np.asarray(p)
    if p.ndim != 2 or p.shape[0] != p.shape[1]:
        return False

    if is_exact(p):
        return bool(np.all(p == p.T) and np.all(p.dot(p) == p))

    pf = _as_float(p)
    slack = 10 * tol.eig_abs
    return (spectral_norm(pf - pf.T) <= slack and
            spectral_norm(pf.dot(pf) - pf) <= slack)


def _exact_solve(a, b):
    '''Solve ``a x = b`` exactly; free variables are set to zero.

    Returns
    -------
    x : np.ndarray or None
        `None` if the system is inconsistent
    '''
    rows, cols = a.shape
    aug = np.empty((rows, cols + 1), dtype=object)
    aug[:, :cols] = _to_fraction(a) if a.size else a
    aug[:, cols] = _to_fraction(b) if b.size else b

    piv_row = 0
    pivots = []
    for col in range(cols):
        pivot = next((i for i in range(piv_row, rows) if aug[i, col] != 0),
                     None)
        if pivot is None:
            continue
        aug[[piv_row, pivot]] = aug[[pivot, piv_row]]
        aug[piv_row] = aug[piv_row] / aug[piv_row, col]
        for i in range(rows):
            if i != piv_row and aug[i, col] != 0:
                aug[i] = aug[i] - aug[i, col] * aug[piv_row]
        pivots.append(col)
        piv_row += 1
        if piv_row == rows:
            break

    if any(aug[i, cols] != 0 for i in range(piv_row, rows)):
        return None

    x = np.array([Fraction(0)] * cols, dtype=object)
    for i, col in enumerate(pivots):
        x[col] = aug[i, cols]
    return x


@tolerant
def solve_in_span(rows, target, tol=None):
    '''Express `target` as a combination of the given rows.

    Parameters
    ----------
    rows : np.ndarray, shape=(k, N)
        Spanning vectors

    target : np.ndarray, shape=(N,)

    tol : Tolerance

    Returns
    -------
    coefficients : np.ndarray, shape=(k,) or None
        Least-squares (float mode) or exact coefficients with
        ``coefficients.dot(rows) == target``; `None` if `target`
        is not in the span.  In float mode the residual must not
        exceed ``10 * eig_abs * max(1, ||target||)``.
    '''
    rows = np.asarray(rows)
    target = np.asarray(target)

    if is_exact(rows) or is_exact(target):
        if rows.shape[0] == 0:
            ok = all(_fraction(x) == 0 for x in target)
            return np.zeros(0, dtype=object) if ok else None
        return _exact_solve(as_matrix(rows, exact=True).T,
                            as_matrix(target.reshape(1, -1), exact=True)[0])

    target = _as_float(target)
    scale = max(1.0, float(np.linalg.norm(target)))

    if rows.shape[0] == 0:
        if np.linalg.norm(target) <= 10 * tol.eig_abs * scale:
            return np.zeros(0)
        return None

    rows = _as_float(rows)
    coef = np.linalg.lstsq(rows.T, target, rcond=None)[0]
    if np.linalg.norm(rows.T.dot(coef) - target) > 10 * tol.eig_abs * scale:
        return None
    return coef
