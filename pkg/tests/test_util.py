#!/usr/bin/env python
# -*- encoding: utf-8 -*-
"""Test the util module"""

import io
import os
import tempfile
from fractions import Fraction

import numpy as np
import pytest

import frameforge
from frameforge import frames, util


xfail = pytest.mark.xfail
parametrize = pytest.mark.parametrize


@parametrize('text, exact, value',
             [('0.25', False, 0.25),
              ('1/3', False, Fraction(1, 3)),
              (' -2/4 ', False, Fraction(-1, 2)),
              ('0.25', True, Fraction(1, 4)),
              ('3', True, Fraction(3)),
              ('1e-3', False, 0.001)])
def test_parse_scalar(text, exact, value):
    result = util.parse_scalar(text, exact=exact)
    assert result == value
    assert isinstance(result, type(value))


@parametrize('text', ['', 'abc', '1/0', '1//2'])
@xfail(raises=frameforge.ParameterError)
def test_parse_scalar_bad(text):
    util.parse_scalar(text)


def test_load_frame_exact():
    F = util.load_frame(io.StringIO('dim=2\n1/2, 0\n0, 1/2\n'))
    assert F.exact
    assert F[0, 0] == Fraction(1, 2)
    assert (F.dim, F.size) == (2, 2)


def test_load_frame_float():
    F = util.load_frame(io.StringIO('dim=3\n# a comment\n1,0,0\n0,1,0\n'
                                    '0,0,1\n'))
    assert not F.exact
    assert np.all(F.vectors == np.eye(3))


@parametrize('exact', [True, False])
def test_load_frame_forced_mode(exact):
    F = util.load_frame(io.StringIO('dim=1\n1/4\n0.5\n'), exact=exact)
    assert F.exact == exact
    assert F[0, 0] == 0.25


@parametrize('text',
             ['1,0\n0,1\n',
              'dim=2\n',
              'dim=2\n1,0\n1\n',
              'dim=2\n1,0\n1,0,0\n',
              'dim=2\n1,0,0\n0,1,0\n'])
@xfail(raises=frameforge.InvalidShape)
def test_load_frame_bad(text):
    util.load_frame(io.StringIO(text))


@parametrize('frame',
             [frames.mercedes_benz(),
              frames.random_parseval(3, 7, 2),
              frames.scaled_union_of_bases(2, 4, exact=True),
              frames.Frame([['1/3', '-2/7'], [0, 1]], exact=True)])
def test_save_load_frame(frame, tmp_path):
    path = str(tmp_path / 'frame.csv')
    util.save_frame(frame, path)
    assert util.load_frame(path) == frame


def test_save_frame_text():
    buf = io.StringIO()
    util.save_frame(frames.Frame([['1/2', 0]], exact=True), buf)
    assert buf.getvalue() == 'dim=2\n1/2,0\n'


def test_smkdirs():

    root = tempfile.mkdtemp()
    my_dirs = [root, 'level1', 'level2', 'level3']

    try:
        target = os.sep.join(my_dirs)
        util.smkdirs(target)

        for i in range(1, len(my_dirs)):
            tmpdir = os.sep.join(my_dirs[:i])
            assert os.path.exists(tmpdir)
            assert os.path.isdir(tmpdir)
    finally:
        for i in range(len(my_dirs), 0, -1):
            tmpdir = os.sep.join(my_dirs[:i])
            os.rmdir(tmpdir)


@parametrize('value, n', [(None, 1), ('', 1), ('3', 3), (' 2 ', 2)])
def test_num_threads(monkeypatch, value, n):
    if value is None:
        monkeypatch.delenv('FRAMEFORGE_THREADS', raising=False)
    else:
        monkeypatch.setenv('FRAMEFORGE_THREADS', value)
    assert util.num_threads() == n


@parametrize('value', ['0', '-2', 'many'])
@xfail(raises=frameforge.ParameterError)
def test_num_threads_bad(monkeypatch, value):
    monkeypatch.setenv('FRAMEFORGE_THREADS', value)
    util.num_threads()
