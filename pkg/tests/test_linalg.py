#!/usr/bin/env python
# -*- encoding: utf-8 -*-
'''Tests for the linear algebra layer'''

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import frameforge
from frameforge import linalg


xfail = pytest.mark.xfail
parametrize = pytest.mark.parametrize


def exact(rows):
    return linalg.as_matrix(rows, exact=True)


@parametrize('rank_rel, eig_abs', [(1e-9, 1e-9), (1e-12, 1e-6)])
def test_tolerance(rank_rel, eig_abs):
    tol = linalg.Tolerance(rank_rel, eig_abs)
    assert tol.rank_rel == rank_rel
    assert tol.eig_abs == eig_abs


@parametrize('rank_rel, eig_abs',
             [(0, 1e-9), (1e-9, 0), (1e-2, 1e-9), (1e-9, -1e-9)])
@xfail(raises=frameforge.ParameterError)
def test_tolerance_bad(rank_rel, eig_abs):
    linalg.Tolerance(rank_rel, eig_abs)


@parametrize('tol', [None, linalg.DEFAULT_TOL,
                     dict(rank_rel=1e-9, eig_abs=1e-9), (1e-9, 1e-9)])
def test_as_tolerance(tol):
    assert linalg.as_tolerance(tol) == linalg.DEFAULT_TOL


def test_tolerant_fills_default():

    @linalg.tolerant
    def fill(x, tol=None):
        return tol

    assert fill(1) == linalg.DEFAULT_TOL
    assert fill(1, tol=(1e-8, 1e-7)) == linalg.Tolerance(1e-8, 1e-7)
    assert fill(1, dict(rank_rel=1e-6, eig_abs=1e-6)).eig_abs == 1e-6


def test_as_matrix_modes():
    m = linalg.as_matrix([[1, 2], [3, 4]])
    assert m.dtype == float
    assert not linalg.is_exact(m)

    m = linalg.as_matrix([['1/2', 1], [0.25, 0]], exact=True)
    assert linalg.is_exact(m)
    assert m[0, 0] == Fraction(1, 2)
    assert m[1, 0] == Fraction(1, 4)

    assert linalg.as_matrix([], cols=3).shape == (0, 3)


@xfail(raises=frameforge.ParameterError)
def test_as_matrix_bad_shape():
    linalg.as_matrix([1, 2, 3])


@parametrize('rows, value',
             [(np.eye(2), 2),
              ([[1, 0], [0, 1], [1, 1]], 2),
              ([[1, 2], [2, 4]], 1),
              (np.zeros((3, 2)), 0),
              (np.zeros((0, 2)), 0)])
@parametrize('mode', ['float', 'exact'])
def test_rank(rows, value, mode):
    m = np.asarray(rows, dtype=float)
    if mode == 'exact':
        m = exact(m) if m.size else m
    assert linalg.rank(m) == value


def test_rank_mercedes_benz():
    MB = frameforge.frames.mercedes_benz()
    assert linalg.rank(MB.vectors) == 2


def test_rank_exact_rationals():
    m = exact([['1/3', '2/3', 0], ['1/6', '1/3', 0], [0, 0, '5/7']])
    assert linalg.rank(m) == 2


def test_rank_tolerance_cut():
    m = np.array([[1.0, 0.0], [0.0, 1e-14]])
    assert linalg.rank(m) == 1
    assert linalg.rank(m, tol=(1e-16 + 1e-18, 1e-9)) == 2


@parametrize('m, value',
             [(np.eye(2), 1.0),
              (np.diag([0.4, 0.9]), 0.9),
              (np.array([[0, -1. / 3], [-1. / 3, 0]]), 1. / 3),
              (np.zeros((0, 0)), 0.0)])
def test_top_eigenvalue_sym(m, value):
    assert linalg.top_eigenvalue_sym(m) == pytest.approx(value, abs=1e-12)


def test_top_eigenvalue_sym_exact():
    m = exact([[0, '-1/3'], ['-1/3', 0]])
    assert linalg.top_eigenvalue_sym(m) == pytest.approx(1. / 3)


@parametrize('m', [np.array([[0, 1], [0, 0]]), np.ones((2, 3))])
@xfail(raises=frameforge.NotSymmetric)
def test_top_eigenvalue_not_symmetric(m):
    linalg.top_eigenvalue_sym(m)


def test_eigenvalues_sym_ascending():
    eigs = linalg.eigenvalues_sym(np.diag([3.0, -1.0, 2.0]))
    assert list(eigs) == pytest.approx([-1.0, 2.0, 3.0])


def test_spectral_norm():
    assert linalg.spectral_norm(np.zeros((3, 3))) == 0.0
    assert linalg.spectral_norm(np.diag([-2.0, 1.0])) == pytest.approx(2.0)
    assert linalg.spectral_norm(np.zeros((0, 0))) == 0.0

    g = frameforge.frames.gram(frameforge.frames.mercedes_benz())
    h = g - np.diag(np.diag(g))
    assert linalg.spectral_norm(h) == pytest.approx(2. / 3)


@settings(max_examples=40, deadline=None)
@given(rows=st.integers(1, 6), cols=st.integers(1, 6),
       seed=st.integers(0, 1000))
def test_spectral_norm_top_eigenvalue(rows, cols, seed):
    a = np.random.RandomState(seed).randn(rows, cols)
    top = linalg.top_eigenvalue_sym(a.T.dot(a), (1e-10, 1e-6))
    assert linalg.spectral_norm(a) == pytest.approx(np.sqrt(top))


@parametrize('rows, target',
             [([[1, 0]], [[1, 0], [0, 0]]),
              ([[1, 0], [0, 1]], [[1, 0], [0, 1]]),
              ([[1, 1]], [[0.5, 0.5], [0.5, 0.5]]),
              ([[2, 2], [1, 1]], [[0.5, 0.5], [0.5, 0.5]])])
def test_orthoprojector(rows, target):
    p = linalg.orthoprojector(np.asarray(rows, dtype=float))
    assert np.allclose(p, target)
    assert linalg.is_projector(p)


def test_orthoprojector_exact():
    p = linalg.orthoprojector(exact([[1, 1]]))
    assert linalg.is_exact(p)
    assert p[0, 1] == Fraction(1, 2)
    assert linalg.is_projector(p)


def test_orthoprojector_empty():
    p = linalg.orthoprojector(np.zeros((0, 3)))
    assert p.shape == (3, 3)
    assert not p.any()

    p = linalg.orthoprojector([], dim=2)
    assert p.shape == (2, 2)


@settings(max_examples=40, deadline=None)
@given(rows=st.integers(0, 5), n=st.integers(1, 5), seed=st.integers(0, 1000))
def test_orthoprojector_eigenvalues(rows, n, seed):
    a = np.random.RandomState(seed).randn(rows, n)
    p = linalg.orthoprojector(a, dim=n)
    eigs = linalg.eigenvalues_sym(p)
    assert np.allclose(eigs, np.round(eigs), atol=1e-8)
    assert set(np.round(eigs)) <= {0.0, 1.0}
    assert int(round(np.sum(eigs))) == min(rows, n)


@parametrize('p, value',
             [(np.eye(2), True),
              (np.diag([1.0, 0.0]), True),
              (np.array([[1.0, 1.0], [0.0, 0.0]]), False),
              (2 * np.eye(2), False),
              (np.ones((2, 3)), False)])
def test_is_projector(p, value):
    assert linalg.is_projector(p) == value


@parametrize('mode', ['float', 'exact'])
def test_solve_in_span(mode):
    rows = np.array([[1.0, 0.0, 0.0], [1.0, 1.0, 0.0]])
    target = np.array([3.0, 2.0, 0.0])
    outside = np.array([0.0, 0.0, 1.0])
    if mode == 'exact':
        rows, target = exact(rows), exact([target])[0]
        outside = exact([outside])[0]

    coef = linalg.solve_in_span(rows, target)
    assert coef is not None
    assert np.allclose(np.asarray(coef, dtype=float), [1.0, 2.0])

    assert linalg.solve_in_span(rows, outside) is None


def test_solve_in_span_empty():
    assert linalg.solve_in_span(np.zeros((0, 2)), np.zeros(2)).size == 0
    assert linalg.solve_in_span(np.zeros((0, 2)), np.ones(2)) is None
