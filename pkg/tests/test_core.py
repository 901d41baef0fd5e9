#!/usr/bin/env python
# -*- encoding: utf-8 -*-
'''Unit tests for partitions and certificate objects'''

import io
import json
from fractions import Fraction

import numpy as np
import pytest

import frameforge
from frameforge import core, frames, partitioners


xfail = pytest.mark.xfail
parametrize = pytest.mark.parametrize


@pytest.fixture
def cert():
    return partitioners.verify_partition(frames.mercedes_benz(),
                                         frameforge.IndexPartition([1, 2, 3]),
                                         't1', params=dict(delta=Fraction(1,
                                                                          3)))


# IndexPartition

def test_partition_basics():
    p = frameforge.IndexPartition([2, 1, 2], part_count=3)
    assert p.assignment == (2, 1, 2)
    assert p.part_count == 3
    assert p.size == 3
    assert p.parts == ((1,), (0, 2), ())
    assert p.part(2) == (0, 2)
    assert p.sizes() == (1, 2, 0)
    assert len(p) == 3
    assert list(p) == [(1,), (0, 2), ()]
    assert repr(p) == '<IndexPartition({1}, {0, 2}, {})>'
    assert p.__json__ == [[1], [0, 2], []]


def test_partition_from_parts():
    p = frameforge.IndexPartition.from_parts([[3, 0], [], [1, 2]])
    assert p.assignment == (1, 3, 3, 1)
    assert p.part_count == 3

    assert (frameforge.IndexPartition.from_parts([[], []], size=0).parts ==
            ((), ()))


@parametrize('parts, size',
             [([[0, 1], [1]], None),
              ([[0], [2]], None),
              ([[0, 5]], 3),
              ([[-1]], 2)])
@xfail(raises=frameforge.ParameterError)
def test_partition_from_parts_bad(parts, size):
    frameforge.IndexPartition.from_parts(parts, size=size)


@parametrize('assignment, part_count',
             [([1, 2, 4], 3), ([0, 1], None), ([1], 0)])
@xfail(raises=frameforge.ParameterError)
def test_partition_bad(assignment, part_count):
    frameforge.IndexPartition(assignment, part_count=part_count)


@xfail(raises=frameforge.ParameterError)
def test_partition_missing_part():
    frameforge.IndexPartition([1, 1]).part(2)


def test_partition_canonical():
    p = frameforge.IndexPartition([3, 1, 3, 2])
    q = frameforge.IndexPartition([2, 3, 2, 1])
    assert p != q
    assert p.canonical() == q.canonical()
    assert p.canonical().assignment == (1, 2, 1, 3)
    assert hash(p.canonical()) == hash(q.canonical())


# JObject

def test_jobject_dict():

    data = dict(key1='value 1', key2='value 2')

    J = frameforge.JObject(**data)

    assert data == J.__dict__


def test_jobject_serialize():

    data = dict(key1='value 1', key2=np.arange(3), key3=Fraction(2, 3))

    J = frameforge.JObject(**data)

    # underscored attributes are not serialized
    J._dummy = True

    assert json.loads(J.dumps()) == dict(key1='value 1', key2=[0, 1, 2],
                                         key3='2/3')


def test_jobject_deserialize():

    J = frameforge.JObject(key1='value 1', key2=[1, 2])

    assert J == frameforge.JObject.loads(J.dumps(indent=2))


@parametrize('d1', [dict(key1='value 1', key2='value 2')])
@parametrize('d2, match',
             [(dict(key1='value 1', key2='value 2'), True),
              (dict(key1='value 1', key2='value 3'), False)])
def test_jobject_eq(d1, d2, match):
    J1 = frameforge.JObject(**d1)
    J2 = frameforge.JObject(**d2)

    assert J1 == J1
    assert (J1 == J2) == match
    assert (J2 == J1) == match

    # type safety
    assert not J1 == frameforge.FrameReport(schema_version='1')


@parametrize('data, value', [({'key': True}, True), ({}, False)])
def test_jobject_bool(data, value):
    assert bool(frameforge.JObject(**data)) == value


def test_jobject_dict_interface():
    J = frameforge.JObject(foo=1, bar=2)
    assert J['foo'] == 1
    assert 'bar' in J
    assert sorted(J) == ['bar', 'foo']
    assert len(J) == 2
    assert repr(J) == '<JObject(bar, foo)>'

    J.update(foo=3)
    assert J.foo == 3


@xfail(raises=frameforge.SchemaError)
def test_jobject_schema_attributes():
    frameforge.PartCertificate(colour='red')


def test_jobject_validate_lenient():
    report = frameforge.FrameReport(schema_version='1', dim=2)
    with pytest.warns(UserWarning):
        assert not report.validate(strict=False)


@xfail(raises=frameforge.SchemaError)
def test_jobject_validate_strict():
    frameforge.FrameReport(schema_version='1', dim=2).validate()


# Certificates

def test_certificate_parts(cert):
    assert all(isinstance(p, frameforge.PartCertificate) for p in cert.parts)
    assert cert.partition == frameforge.IndexPartition([1, 2, 3])

    rebuilt = frameforge.PartitionCertificate(**json.loads(cert.dumps()))
    assert rebuilt == cert
    assert isinstance(rebuilt.parts[0], frameforge.PartCertificate)


def test_certificate_dataframe(cert):
    df = cert.to_dataframe()
    assert df.index.name == 'part'
    assert list(df.columns[:3]) == ['size', 'dim', 'independent']
    assert df.loc[2, 'indices'] == [1]


@parametrize('fmt, name', [('auto', 'cert.json'), ('auto', 'cert.json.gz'),
                           ('json', 'cert.txt')])
def test_save_load(cert, tmp_path, fmt, name):
    path = str(tmp_path / name)
    core.save(cert, path, fmt=fmt)
    loaded = core.load(path, fmt=fmt)
    assert loaded == cert
    assert loaded.params['delta'] == '1/3'


def test_save_sorted_keys(cert):
    first, second = io.StringIO(), io.StringIO()
    core.save(cert, first, fmt='json')
    core.save(frameforge.PartitionCertificate(**json.loads(cert.dumps())),
              second, fmt='json')
    assert first.getvalue() == second.getvalue()
    assert first.getvalue().endswith('}\n')


def test_load_report(tmp_path):
    path = str(tmp_path / 'report.json')
    core.save(partitioners.frame_report(frames.harmonic_frame(2, 5)), path)
    report = core.load(path)
    assert isinstance(report, frameforge.FrameReport)
    assert report.parseval


def test_load_invalid(tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text(json.dumps(dict(schema_version='1', dim=2)))

    with pytest.raises(frameforge.SchemaError):
        core.load(str(path))

    with pytest.warns(UserWarning):
        report = core.load(str(path), strict=False)
    assert report.dim == 2

    assert core.load(str(path), validate=False).dim == 2


@parametrize('target', ['cert.xml', 5])
@xfail(raises=frameforge.ParameterError)
def test_save_bad_target(cert, target):
    core.save(cert, target)
