"""
Core objects
------------

Index partitions, and the certificate documents that record the evidence
behind every partition verdict.

.. currentmodule:: frameforge

Function reference
^^^^^^^^^^^^^^^^^^
.. autosummary::
    :toctree: generated/

    load
    save

Object reference
^^^^^^^^^^^^^^^^
.. autosummary::
    :toctree: generated/
    :template: class.rst

    IndexPartition
    JObject
    PartCertificate
    PartitionCertificate
    FrameReport
"""

import contextlib
import gzip
import json
import os
import warnings
from fractions import Fraction

import numpy as np
import pandas as pd
import jsonschema

from . import schema
from .exceptions import SchemaError, ParameterError

__all__ = ['load', 'save', 'IndexPartition', 'JObject',
           'PartCertificate', 'PartitionCertificate', 'FrameReport']


@contextlib.contextmanager
def _open(name_or_fdesc, mode='r', fmt='auto'):
    '''An intelligent wrapper for ``open``.

    Parameters
    ----------
    name_or_fdesc : string-type or open file descriptor
        If a string type, refers to the path to a file on disk.

        If an open file descriptor, it is returned as-is.

    mode : string
        The mode with which to open the file.
        See ``open`` for details.

    fmt : string ['auto', 'json', 'csv', 'gz']
        The encoding for the input/output stream.

        If `auto`, the format is inferred from the filename extension.

        Otherwise, use the specified coding.

    See Also
    --------
    open
    gzip.open
    '''

    open_map = {'json': open,
                'csv': open,
                'txt': open,
                'gz': gzip.open}

    if hasattr(name_or_fdesc, 'read') or hasattr(name_or_fdesc, 'write'):
        yield name_or_fdesc

    elif isinstance(name_or_fdesc, (str, os.PathLike)):
        name_or_fdesc = os.fspath(name_or_fdesc)

        if fmt == 'auto':
            _, ext = os.path.splitext(name_or_fdesc)
            ext = ext[1:]
        else:
            ext = fmt

        ext = ext.lower()
        if ext not in open_map:
            raise ParameterError('Unknown file extension '
                                 'format: "{:s}"'.format(ext))

        # Force text mode if we're using gzip
        if ext == 'gz' and 't' not in mode:
            mode = '{:s}t'.format(mode)

        with open_map[ext](name_or_fdesc, mode=mode) as fdesc:
            yield fdesc

    else:
        raise ParameterError('Invalid filename or '
                             'descriptor: {}'.format(name_or_fdesc))


def load(path_or_file, validate=True, strict=True, fmt='auto'):
    r"""Load a certificate document from a file.

    Parameters
    ----------
    path_or_file : str or file-like
        Path to the certificate file to load
        OR
        An open file handle to load from.

    validate : bool
        Attempt to validate the document against its schema

    strict : bool
        if `validate == True`, enforce strict schema validation

    fmt : str ['auto', 'json', 'gz']
        The encoding format of the input

    Returns
    -------
    certificate : PartitionCertificate or FrameReport
        Selected by the document's fields

    Raises
    ------
    SchemaError
        if `validate == True`, `strict==True`, and validation fails

    Examples
    --------
    >>> cert = frameforge.load('mb_t1.json')
    >>> cert.theorem
    't1'
    """

    with _open(path_or_file, mode='r', fmt=fmt) as fdesc:
        doc = json.load(fdesc)

    cls = PartitionCertificate if 'parts' in doc else FrameReport
    obj = cls.__json_init__(**doc)

    if validate:
        obj.validate(strict=strict)

    return obj


def save(obj, path_or_file, fmt='auto', indent=2):
    '''Serialize a certificate object to a file.

    Parameters
    ----------
    obj : JObject
        The document to write

    path_or_file : str or file-like

    fmt : str ['auto', 'json', 'gz']

    indent : int or None
        Passed to ``json.dump``.  Keys are always sorted so that
        equal documents produce identical bytes.
    '''
    with _open(path_or_file, mode='w', fmt=fmt) as fdesc:
        json.dump(obj.__json__, fdesc, indent=indent, sort_keys=True)
        fdesc.write('\n')


class IndexPartition(object):
    '''Assignment of the indices ``0 .. M-1`` to parts ``1 .. R``.

    Parts are numbered from 1; empty parts are allowed.

    Parameters
    ----------
    assignment : sequence of int
        Part number of each index

    part_count : int or None
        Number of parts R.  Defaults to the largest part number used.

    Examples
    --------
    >>> p = frameforge.IndexPartition.from_parts([[0, 2], [1]])
    >>> p.assignment
    (1, 2, 1)
    >>> p.parts
    ((0, 2), (1,))
    '''

    def __init__(self, assignment, part_count=None):
        assignment = tuple(int(_) for _ in assignment)

        if part_count is None:
            part_count = max(assignment) if assignment else 1
        part_count = int(part_count)

        if part_count < 1:
            raise ParameterError('A partition needs at least one part, '
                                 'got part_count={}'.format(part_count))

        bad = [a for a in assignment if not 1 <= a <= part_count]
        if bad:
            raise ParameterError('Part numbers {} outside 1..{}'
                                 .format(sorted(set(bad)), part_count))

        self._assignment = assignment
        self._part_count = part_count

    @classmethod
    def from_parts(cls, parts, size=None):
        '''Build a partition from a list of index collections.

        Parameters
        ----------
        parts : sequence of iterables of int
            Part ``j + 1`` holds the indices ``parts[j]``

        size : int or None
            Ground set size.  Defaults to one more than the largest index.

        Raises
        ------
        ParameterError
            If the parts overlap or miss an index
        '''
        parts = [sorted(int(_) for _ in part) for part in parts]
        if size is None:
            size = 1 + max([max(p) for p in parts if p] or [-1])

        assignment = [None] * size
        for number, part in enumerate(parts, 1):
            for idx in part:
                if not 0 <= idx < size:
                    raise ParameterError('Index {} outside 0..{}'
                                         .format(idx, size - 1))
                if assignment[idx] is not None:
                    raise ParameterError('Index {} appears in parts {} and {}'
                                         .format(idx, assignment[idx], number))
                assignment[idx] = number

        missing = [i for i, a in enumerate(assignment) if a is None]
        if missing:
            raise ParameterError('Indices {} are not assigned'.format(missing))

        return cls(assignment, part_count=max(len(parts), 1))

    @property
    def assignment(self):
        return self._assignment

    @property
    def part_count(self):
        return self._part_count

    @property
    def size(self):
        '''Ground set size M'''
        return len(self._assignment)

    @property
    def parts(self):
        '''Sorted index tuples, one per part'''
        out = [[] for _ in range(self._part_count)]
        for idx, number in enumerate(self._assignment):
            out[number - 1].append(idx)
        return tuple(tuple(_) for _ in out)

    def part(self, number):
        '''Indices of part `number` (counted from 1)'''
        if not 1 <= number <= self._part_count:
            raise ParameterError('No part {} in a {}-part partition'
                                 .format(number, self._part_count))
        return self.parts[number - 1]

    def sizes(self):
        return tuple(len(_) for _ in self.parts)

    def canonical(self):
        '''Relabel parts in order of first appearance.

        Two partitions that differ only by the naming of their parts have
        the same canonical form.
        '''
        relabel = {}
        assignment = []
        for number in self._assignment:
            if number not in relabel:
                relabel[number] = len(relabel) + 1
            assignment.append(relabel[number])
        return IndexPartition(assignment, part_count=self._part_count)

    def __len__(self):
        return self._part_count

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        return (isinstance(other, IndexPartition) and
                self._assignment == other._assignment and
                self._part_count == other._part_count)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._assignment, self._part_count))

    def __repr__(self):
        return '<IndexPartition({})>'.format(
            ', '.join('{' + ', '.join(str(i) for i in p) + '}'
                      for p in self.parts))

    @property
    def __json__(self):
        return [list(p) for p in self.parts]


def serialize_obj(obj):
    '''Custom serialization functionality for working with advanced data types.

    - numpy arrays are converted to lists
    - lists and tuples are recursively serialized element-wise
    - fractions become ``"p/q"`` strings
    '''

    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)

    elif isinstance(obj, np.integer):
        return int(obj)

    elif isinstance(obj, np.floating):
        return float(obj)

    elif isinstance(obj, Fraction):
        return str(obj)

    elif isinstance(obj, np.ndarray):
        return [serialize_obj(x) for x in obj.tolist()]

    elif isinstance(obj, (list, tuple)):
        return [serialize_obj(x) for x in obj]

    elif isinstance(obj, dict):
        return {str(k): serialize_obj(v) for k, v in obj.items()}

    elif hasattr(obj, '__json__'):
        return obj.__json__

    return obj


class JObject(object):
    r"""Dict-like object for JSON Serialization.

    This object behaves like a dictionary to allow init-level attribute names,
    seamless JSON-serialization, and double-star style unpacking (** obj).

    If the class name is a definition in the certificate schema, only the
    fields allowed by the schema are permitted as attributes.
    """
    def __init__(self, **kwargs):
        '''Construct a new JObject

        Parameters
        ----------
        kwargs
            Each keyword argument becomes an attribute with the specified value

        Examples
        --------
        >>> J = frameforge.JObject(foo=5)
        >>> J.foo
        5
        >>> dict(J)
        {'foo': 5}
        '''
        super(JObject, self).__init__()

        for name, value in kwargs.items():
            setattr(self, name, value)

    @property
    def __schema__(self):
        '''The schema definition for this JObject, if it exists.

        Returns
        -------
        schema : dict or None
        '''
        return schema.CERTIFICATE_SCHEMA['definitions'].get(self.type, None)

    @property
    def __json__(self):
        r"""Return the JObject as a set of native data types for serialization.

        Note: attributes beginning with underscores are suppressed.
        """
        filtered_dict = dict()

        for k, item in self.__dict__.items():
            if k.startswith('_'):
                continue
            filtered_dict[k] = serialize_obj(item)

        return filtered_dict

    @classmethod
    def __json_init__(cls, **kwargs):
        """Initialize the object from a dictionary of values"""
        return cls(**kwargs)

    def __eq__(self, other):
        return (isinstance(other, self.__class__) and
                (self.__json__ == other.__json__))

    def __ne__(self, other):
        return not self == other

    def __bool__(self):
        return bool(self.__json__)

    def __getitem__(self, key):
        """Dict-style interface"""
        return self.__dict__[key]

    def __setattr__(self, name, value):
        if self.__schema__ is not None:
            props = self.__schema__['properties']
            if name not in props:
                raise SchemaError("Attribute {} not in {}"
                                  .format(name, sorted(props.keys())))
        self.__dict__[name] = value

    def __contains__(self, key):
        return key in self.__dict__

    def __len__(self):
        return len(self.keys())

    def __iter__(self):
        return iter(self.keys())

    def __repr__(self):
        return '<{}({})>'.format(self.type, ', '.join(sorted(self.keys())))

    def __str__(self):
        return json.dumps(self.__json__, indent=2, sort_keys=True)

    def dumps(self, **kwargs):
        '''Serialize the JObject to a string.

        Parameters
        ----------
        kwargs
            Keyword arguments to json.dumps

        Returns
        -------
        object_str : str
            Serialized JObject

        Examples
        --------
        >>> J = frameforge.JObject(foo=5, bar='baz')
        >>> J.dumps()
        '{"foo": 5, "bar": "baz"}'
        '''
        return json.dumps(self.__json__, **kwargs)

    def keys(self):
        """Return a list of the attributes of the object."""
        return [k for k in self.__dict__ if not k.startswith('_')]

    def update(self, **kwargs):
        '''Update the attributes of a JObject.

        Parameters
        ----------
        kwargs
            Keyword arguments of the form `attribute=new_value`
        '''
        for name, value in kwargs.items():
            setattr(self, name, value)

    @property
    def type(self):
        '''The type (class name) of a derived JObject type'''
        return self.__class__.__name__

    @classmethod
    def loads(cls, string):
        '''De-serialize a JObject

        Parameters
        ----------
        string : str
            A serialized (JSON string) JObject

        Returns
        -------
        J : JObject
            The input string reconstructed as a JObject
        '''
        return cls.__json_init__(**json.loads(string))

    def validate(self, strict=True):
        '''Validate a JObject against its schema

        Parameters
        ----------
        strict : bool
            Enforce strict schema validation

        Returns
        -------
        valid : bool
            True if the object validates
            False if not, and `strict==False`

        Raises
        ------
        SchemaError
            If `strict==True` and the object fails validation
        '''

        valid = True

        if self.__schema__ is None:
            return valid

        try:
            schema.validator(self.type).validate(self.__json__)

        except jsonschema.ValidationError as invalid:
            if strict:
                raise SchemaError(str(invalid))
            else:
                warnings.warn(str(invalid))

            valid = False

        return valid


class PartCertificate(JObject):
    """Evidence for one part of a partition.

    Attributes
    ----------
    indices : list of int
    size : int
    dim : int
        Dimension of the span of the part
    independent : bool
        ``dim == size``
    spans : bool
        ``dim == N``
    complement_spans : bool
        The vectors outside the part span
    eigenvalue : float or None
        Top eigenvalue of the Gram matrix compressed to the part; below 1
        exactly when the complement spans (Parseval frames only)
    complement_eigenvalue : float or None
        Top eigenvalue of the Gram matrix compressed to the complement;
        below 1 exactly when the part spans (Parseval frames only)
    """
    pass


class PartitionCertificate(JObject):
    """A partition of frame indices together with its evidence.

    Attributes
    ----------
    schema_version : str
    theorem : str
        Which claims the partition was checked against
    params : dict
        Inputs and derived quantities of the producing pipeline
    dim, size : int
        Frame dimension and number of vectors
    parseval : bool
    claims_hold : bool
    parts : list of PartCertificate
    tolerances : dict
    scalar_mode : str
    """

    def __init__(self, parts=None, **kwargs):
        parts = [p if isinstance(p, PartCertificate) else PartCertificate(**p)
                 for p in (parts or [])]
        super(PartitionCertificate, self).__init__(parts=parts, **kwargs)

    @property
    def partition(self):
        '''The certified partition as an IndexPartition'''
        return IndexPartition.from_parts([p.indices for p in self.parts],
                                         size=getattr(self, 'size', None))

    def to_dataframe(self):
        '''Tabulate the per-part evidence.

        Returns
        -------
        df : pd.DataFrame
            One row per part, indexed by part number (from 1)
        '''
        columns = ['size', 'dim', 'independent', 'spans', 'complement_spans',
                   'eigenvalue', 'complement_eigenvalue', 'indices']
        rows = [{c: p.__dict__.get(c) for c in columns} for p in self.parts]
        df = pd.DataFrame(rows, columns=columns,
                          index=pd.RangeIndex(1, len(rows) + 1, name='part'))
        return df


class FrameReport(JObject):
    """Validation summary of a frame: bounds, Parseval flag and norms."""
    pass
