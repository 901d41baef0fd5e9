#!/usr/bin/env python
# -*- encoding: utf-8 -*-
r"""
Utility functions
-----------------

.. autosummary::
    :toctree: generated/

    load_frame
    save_frame
    parse_scalar
    smkdirs
    num_threads
"""

import io
import os
import re
from fractions import Fraction

import numpy as np
import pandas as pd

from . import core
from .frames import Frame
from .exceptions import InvalidShape, ParameterError

__all__ = ['load_frame', 'save_frame', 'parse_scalar', 'smkdirs',
           'num_threads']

HEADER = re.compile(r'^\s*dim\s*=\s*(\d+)\s*$')


def parse_scalar(text, exact=False):
    '''Parse a decimal or ``p/q`` literal.

    Parameters
    ----------
    text : str

    exact : bool
        Return a `Fraction` (decimals are converted exactly).
        Rational literals always parse to a `Fraction`.

    Returns
    -------
    value : float or Fraction

    Raises
    ------
    ParameterError
        If `text` is not a number

    Examples
    --------
    >>> frameforge.util.parse_scalar('1/3')
    Fraction(1, 3)
    >>> frameforge.util.parse_scalar('0.25')
    0.25
    '''
    text = str(text).strip()
    try:
        if exact or '/' in text:
            return Fraction(text)
        return float(text)
    except (ValueError, ZeroDivisionError):
        raise ParameterError('Invalid scalar literal: "{}"'.format(text))


def load_frame(path_or_file, exact=None, **parse_options):
    r'''Load a frame from a CSV file.

    The first line is a header ``dim=N``.  Each following line holds the
    `N` comma-separated coordinates of one vector, as decimal or ``p/q``
    literals.

    Parameters
    ----------
    path_or_file : str or file-like

    exact : bool or None
        If `True`, every entry is read as an exact rational.
        If `False`, every entry is read as a float.
        If `None`, the frame is exact when the file contains a ``p/q``
        literal.

    parse_options : additional keyword arguments
        Passed to ``pandas.read_csv``

    Returns
    -------
    frame : Frame

    Raises
    ------
    InvalidShape
        If the header is missing or a row has the wrong length

    See Also
    --------
    pandas.read_csv
    save_frame
    '''
    with core._open(path_or_file, mode='r') as fdesc:
        header = fdesc.readline()
        body = fdesc.read()

    match = HEADER.match(header)
    if match is None:
        raise InvalidShape('Frame file must start with "dim=N", '
                           'got "{}"'.format(header.strip()))
    dim = int(match.group(1))

    parse_options.setdefault('header', None)
    parse_options.setdefault('dtype', str)
    parse_options.setdefault('skipinitialspace', True)
    parse_options.setdefault('comment', '#')

    try:
        data = pd.read_csv(io.StringIO(body), **parse_options)
    except pd.errors.EmptyDataError:
        raise InvalidShape('Frame file has no vectors')
    except pd.errors.ParserError as exc:
        raise InvalidShape('Malformed frame file: {}'.format(exc))

    if data.shape[1] != dim or data.isnull().values.any():
        raise InvalidShape('Expected {} coordinates per vector, got a '
                           '{} x {} table'.format(dim, *data.shape))

    cells = data.values
    if exact is None:
        exact = any('/' in str(c) for c in cells.flat)

    values = np.array([[parse_scalar(c, exact=exact) for c in row]
                       for row in cells],
                      dtype=object if exact else float)

    return Frame(values, exact=exact)


def _format_scalar(value):
    if isinstance(value, Fraction):
        return str(value)
    return repr(float(value))


def save_frame(frame, path_or_file):
    '''Write a frame in the CSV format read by `load_frame`.

    Exact entries are written as ``p/q`` literals and floats by `repr`,
    so both modes round-trip exactly.

    Parameters
    ----------
    frame : Frame

    path_or_file : str or file-like
    '''
    table = pd.DataFrame([[_format_scalar(x) for x in row]
                          for row in frame.vectors])

    with core._open(path_or_file, mode='w', fmt='csv') as fdesc:
        fdesc.write('dim={:d}\n'.format(frame.dim))
        table.to_csv(fdesc, header=False, index=False, lineterminator='\n')


def smkdirs(dpath, mode=0o777):
    """Safely make a full directory path if it doesn't exist.

    Parameters
    ----------
    dpath : str
        Path of directory/directories to create

    mode : int [default=0777]
        Permissions for the new directories

    See also
    --------
    os.makedirs
    """
    if dpath and not os.path.exists(dpath):
        os.makedirs(dpath, mode=mode)


def num_threads(default=1):
    '''Worker count for parallel searches, from ``FRAMEFORGE_THREADS``.

    Returns
    -------
    n : int >= 1

    Raises
    ------
    ParameterError
        If the variable is set but is not a positive integer
    '''
    value = os.environ.get('FRAMEFORGE_THREADS')
    if value is None or not value.strip():
        return default

    try:
        n = int(value)
    except ValueError:
        n = 0

    if n < 1:
        raise ParameterError('FRAMEFORGE_THREADS must be a positive integer, '
                             'got "{}"'.format(value))
    return n
