#!/usr/bin/env python
# -*- encoding: utf-8 -*-
'''Tests for the partition pipelines and their certificates'''

import io
from fractions import Fraction

import numpy as np
import pandas as pd
import pytest

import frameforge
from frameforge import frames, linalg, matroids, partitioners
from frameforge.frames import Frame


xfail = pytest.mark.xfail
parametrize = pytest.mark.parametrize


E1, E2 = [1, 0], [0, 1]


@pytest.fixture
def mb():
    return frames.mercedes_benz()


def test_claims():
    assert partitioners.claims() == ['cor5', 'infeasible', 'none', 'p5', 'p6',
                                     'paving', 't1']


def test_verify_partition_singletons(mb):
    p = frameforge.IndexPartition([1, 2, 3])
    cert = partitioners.verify_partition(mb, p, 't1')

    assert cert.claims_hold
    assert cert.theorem == 't1'
    assert cert.parseval
    assert (cert.dim, cert.size) == (2, 3)
    assert cert.scalar_mode == 'float'
    assert cert.tolerances == dict(rank_rel=1e-9, eig_abs=1e-9)

    for part in cert.parts:
        assert part.size == 1 and part.dim == 1
        assert part.independent
        assert not part.spans
        assert part.complement_spans
        assert part.eigenvalue == pytest.approx(2. / 3)
        assert part.complement_eigenvalue == pytest.approx(1.0)

    assert cert.partition == p
    assert cert.validate()


def test_verify_partition_single_part(mb):
    p = frameforge.IndexPartition([1, 1, 1])
    assert partitioners.verify_partition(mb, p, 'p6').claims_hold
    assert not partitioners.verify_partition(mb, p, 't1').claims_hold
    assert not partitioners.verify_partition(mb, p, 'p5').claims_hold
    assert partitioners.verify_partition(mb, p).claims_hold


def test_verify_partition_not_parseval():
    F = Frame([E1, E1, E2])
    cert = partitioners.verify_partition(F, frameforge.IndexPartition([1, 2,
                                                                       1]))
    assert not cert.parseval
    assert [p.spans for p in cert.parts] == [True, False]
    assert all(p.eigenvalue is None for p in cert.parts)


@xfail(raises=frameforge.ParameterError)
def test_verify_partition_unknown_claim(mb):
    partitioners.verify_partition(mb, frameforge.IndexPartition([1, 1, 1]),
                                  'p7')


@xfail(raises=frameforge.ParameterError)
def test_verify_partition_size_mismatch(mb):
    partitioners.verify_partition(mb, frameforge.IndexPartition([1, 2]))


def test_witness_certificate_dependent_set():
    F = Frame([E1, E1, E1, E2])
    witness = matroids.matroid_partition(matroids.LinearMatroid(F), 2)
    cert = partitioners.witness_certificate(F, witness)
    assert cert.theorem == 'infeasible'
    assert cert.claims_hold
    assert cert.partition.parts[0] == witness.subset
    assert cert.parts[0].dim == witness.rank
    assert cert.params['violating_set'] == list(witness.subset)
    assert cert.params['witness']['ratio'] == '3'
    assert cert.validate()


def test_witness_certificate_subspace():
    F = Frame([E1, E1, E1, E2])
    witness = matroids.t2_witness(F, 2)
    cert = partitioners.witness_certificate(F, witness)
    assert cert.claims_hold
    assert cert.partition == witness.partition
    assert cert.params['violating_set'] == [0, 1, 2]
    assert cert.params['m_parts'] == 2


def test_infeasible_claim_needs_violation(mb):
    # two vectors spanning two dimensions fit in one independent set
    p = frameforge.IndexPartition([1, 1, 2])
    cert = partitioners.verify_partition(
        mb, p, 'infeasible', params=dict(violating_set=[0, 1], m_parts=1))
    assert not cert.claims_hold
    assert not partitioners.verify_partition(mb, p, 'infeasible').claims_hold


@xfail(raises=frameforge.ParameterError)
def test_witness_certificate_bad_witness(mb):
    partitioners.witness_certificate(mb, (0, 1))


def test_certificate_dataframe(mb):
    cert = partitioners.verify_partition(mb,
                                         frameforge.IndexPartition([1, 1, 2]),
                                         'p6')
    df = cert.to_dataframe()
    assert isinstance(df, pd.DataFrame)
    assert list(df.index) == [1, 2]
    assert list(df['size']) == [2, 1]
    assert list(df['spans']) == [True, False]


def test_certificate_roundtrip(mb):
    _, cert = partitioners.spanning_complement_partition(mb, '1/3')

    buf = io.StringIO()
    frameforge.save(cert, buf, fmt='json')
    buf.seek(0)
    loaded = frameforge.load(buf, fmt='json')

    assert isinstance(loaded, frameforge.PartitionCertificate)
    assert loaded == cert
    assert loaded.params['delta'] == '1/3'


def test_frame_report(mb):
    report = partitioners.frame_report(mb)
    assert report.is_frame
    assert report.parseval
    assert report.equal_norm
    assert report.bounds['lower'] == pytest.approx(1.0)
    assert report.bounds['upper'] == pytest.approx(1.0)
    assert report.norms_squared == pytest.approx([2. / 3] * 3)
    assert report.validate()


def test_frame_report_not_a_frame():
    report = partitioners.frame_report(Frame([E1, [2, 0]]))
    assert not report.is_frame
    assert report.bounds is None
    assert not report.parseval
    assert not report.equal_norm
    assert report.norms_squared == [1.0, 4.0]
    assert report.validate()


@parametrize('delta', ['1/3', Fraction(1, 3), 1. / 3, '0.3333333'])
def test_spanning_complement_mercedes_benz(mb, delta):
    p, cert = partitioners.spanning_complement_partition(mb, delta)
    assert p.parts == ((0,), (1,), (2,))
    assert cert.claims_hold
    assert cert.params['r'] == 3


@parametrize('frame, delta, r_parts',
             [(frames.harmonic_frame(3, 9), '2/3', 2),
              (frames.scaled_union_of_bases(2, 2), '1/2', 2),
              (frames.scaled_union_of_bases(2, 4, exact=True), '3/4', 2),
              (frames.harmonic_frame(2, 6), '1/2', 2)])
def test_spanning_complement_partition(frame, delta, r_parts):
    p, cert = partitioners.spanning_complement_partition(frame, delta)
    assert p.part_count == r_parts
    assert cert.claims_hold
    for part in p.parts:
        rest = frames.complement(part, frame.size)
        assert matroids.linear_rank(frame, rest) == frame.dim


@parametrize('seed', range(6))
def test_spanning_complement_random(seed):
    F = frames.random_parseval(3, 9, seed)
    delta = 0.5 * (1 - np.max(frames.norms_squared(F)))
    p, cert = partitioners.spanning_complement_partition(F, delta)
    assert cert.claims_hold
    assert p.part_count * cert.params['delta_effective'] >= 1 - 1e-6


@parametrize('delta', [Fraction(1, 4), Fraction(1, 3), Fraction(1, 2)])
@parametrize('seed', range(200))
def test_spanning_complement_sweep(seed, delta):
    n = 1 + seed % 3
    F = frames.random_parseval(n, 3 * n + seed % 5, seed)
    norms_max = np.max(frames.norms_squared(F))

    if norms_max > 1 - float(delta) + 1e-9:
        with pytest.raises(frameforge.NormBoundViolated):
            partitioners.spanning_complement_partition(F, delta)
        return

    p, cert = partitioners.spanning_complement_partition(F, delta)
    assert cert.claims_hold
    assert p.part_count == int(np.ceil(1 / cert.params['delta_effective']
                                       - 1e-9))

    g = frames.gram(F)
    for part in p.parts:
        rest = frames.complement(part, F.size)
        by_rank = matroids.linear_rank(F, rest) == n
        by_gram = linalg.top_eigenvalue_sym(frames.compress(g, part)) < 1 - 1e-6
        assert by_rank and by_gram


def test_spanning_complement_exact_mode():
    F = frames.scaled_union_of_bases(2, 4, exact=True)
    _, cert = partitioners.spanning_complement_partition(F, '3/4')
    assert cert.scalar_mode == 'exact-rational'
    assert cert.params['delta_effective'] == Fraction(3, 4)


def test_spanning_complement_more_parts(mb):
    p, cert = partitioners.spanning_complement_partition(mb, '1/3',
                                                         r_parts=5)
    assert p.part_count == 5
    assert cert.claims_hold


@parametrize('delta', [0, 1, '3/2', -0.5])
@xfail(raises=frameforge.ParameterError)
def test_spanning_complement_bad_delta(mb, delta):
    partitioners.spanning_complement_partition(mb, delta)


@xfail(raises=frameforge.ParameterError)
def test_spanning_complement_too_few_parts(mb):
    partitioners.spanning_complement_partition(mb, '1/3', r_parts=2)


@xfail(raises=frameforge.NormBoundViolated)
def test_spanning_complement_norm_bound():
    partitioners.spanning_complement_partition(frames.orthonormal_basis(2),
                                               0.5)


@xfail(raises=frameforge.NotParseval)
def test_spanning_complement_not_parseval():
    partitioners.spanning_complement_partition(Frame([[2, 0], [0, 1]]), 0.5)


@parametrize('frame, sizes, r, k',
             [(frames.harmonic_frame(2, 4), (2, 2), 2, 0),
              (frames.harmonic_frame(2, 5), (2, 2, 1), 2, 1),
              (frames.mercedes_benz(), (2, 1), 1, 1),
              (frames.harmonic_frame(3, 9), (3, 3, 3), 3, 0),
              (frames.orthonormal_basis(3), (3,), 1, 0)])
def test_equal_norm_independent_partition(frame, sizes, r, k):
    p, cert = partitioners.equal_norm_independent_partition(frame)
    assert p.sizes() == sizes
    assert cert.params['r'] == r
    assert cert.params['k'] == k
    assert cert.claims_hold
    assert all(part.independent for part in cert.parts)


def _harmonic_counts():
    for n in range(1, 6):
        for r in range(1, 4):
            for k in range(n):
                yield n, r, k


@parametrize('n, r, k', list(_harmonic_counts()))
def test_equal_norm_independent_sweep(n, r, k):
    F = frames.harmonic_frame(n, r * n + k)
    p, cert = partitioners.equal_norm_independent_partition(F)
    assert p.part_count == (r + 1 if k else r)
    assert cert.claims_hold
    assert all(part.independent for part in cert.parts)
    if not k:
        assert all(part.size == n and part.spans for part in cert.parts)


@xfail(raises=frameforge.NotEqualNorm)
def test_equal_norm_independent_unequal():
    c = np.sqrt(0.5)
    partitioners.equal_norm_independent_partition(Frame([[1, 0], [0, c],
                                                         [0, c]]))


@parametrize('frame, r_arg, r_parts',
             [(frames.scaled_union_of_bases(2, 2), 2, 2),
              (frames.harmonic_frame(2, 6), 3, 3),
              (frames.harmonic_frame(2, 5), 2, 2),
              (frames.scaled_union_of_bases(2, 2), None, 1),
              (frames.mercedes_benz(), None, 1),
              (Frame([E1, E1, E2, E2]), None, 2),
              (frames.harmonic_frame(2, 6).scaled(np.sqrt(3)), None, 3)])
def test_spanning_partition(frame, r_arg, r_parts):
    p, cert = partitioners.spanning_partition(frame, r_parts=r_arg)
    assert p.part_count == r_parts
    assert cert.params['r'] == r_parts
    assert cert.claims_hold
    assert all(part.spans for part in cert.parts)


def _unit_norm_frames():
    # every vector has norm 1
    yield frames.orthonormal_basis(3)
    yield Frame([E1, E1, E2, E2, [np.sqrt(0.5), np.sqrt(0.5)]])
    for n, m in [(2, 4), (2, 6), (3, 6), (3, 9), (2, 5)]:
        yield frames.harmonic_frame(n, m).scaled(np.sqrt(m / n))
    for n, r in [(2, 2), (2, 3), (3, 2), (4, 3)]:
        yield frames.scaled_union_of_bases(n, r).scaled(np.sqrt(r))
    for seed in range(6):
        F = frames.random_parseval(2 + seed % 3, 7 + seed, seed)
        yield F.scaled(1 / np.sqrt(np.max(frames.norms_squared(F))))


@parametrize('frame', list(_unit_norm_frames()))
def test_spanning_partition_floor_lower_bound(frame):
    p, cert = partitioners.spanning_partition(frame)
    bounds = frames.validate_frame(frame)
    assert p.part_count == int(np.floor(bounds.lower + 1e-9))
    assert all(part.spans for part in cert.parts)


@parametrize('n', range(1, 6))
@parametrize('r', range(1, 5))
def test_spanning_partition_union_sweep(n, r):
    F = frames.scaled_union_of_bases(n, r).scaled(np.sqrt(r))
    p, cert = partitioners.spanning_partition(F)
    assert p.part_count == r
    assert cert.claims_hold
    assert all(part.spans and part.size == n for part in cert.parts)


@parametrize('seed', range(40))
def test_spanning_partition_random_sweep(seed):
    n = 1 + seed % 4
    F = frames.random_parseval(n, 3 * n + seed % 7, seed)
    F = F.scaled(1 / np.sqrt(np.max(frames.norms_squared(F))))
    p, cert = partitioners.spanning_partition(F)
    assert p.part_count == int(np.floor(frames.validate_frame(F).lower + 1e-9))
    assert cert.claims_hold


@parametrize('frame',
             [Frame([[2, 0], [0, 2], E1, E2]),
              frames.orthonormal_basis(2).scaled(1.5)])
@xfail(raises=frameforge.NormBoundViolated)
def test_spanning_partition_over_norm(frame):
    partitioners.spanning_partition(frame)


def test_spanning_partition_over_norm_explicit_count():
    # A = 5 and max ||f_i||^2 = 4 admit a single part
    F = Frame([[2, 0], [0, 2], E1, E2])
    p, cert = partitioners.spanning_partition(F, r_parts=1)
    assert p.parts == ((0, 1, 2, 3),)
    assert cert.claims_hold


@xfail(raises=frameforge.NormBoundViolated)
def test_spanning_partition_small_lower_bound():
    partitioners.spanning_partition(frames.orthonormal_basis(2).scaled(0.5))


def test_spanning_partition_zero_vectors():
    F = Frame([E1, [0, 0], E2, [0, 0]])
    p, cert = partitioners.spanning_partition(F)
    assert p.part_count == 1
    assert p.parts == ((0, 1, 2, 3),)
    assert cert.claims_hold


def test_spanning_partition_count_bound():
    _, cert = partitioners.spanning_partition(frames.harmonic_frame(2, 6),
                                              r_parts=3)
    assert cert.params['count_bound'] == 6
    assert cert.params['count_ok']


@xfail(raises=frameforge.NormBoundViolated)
def test_spanning_partition_too_many_parts():
    partitioners.spanning_partition(frames.orthonormal_basis(2), r_parts=2)


@xfail(raises=frameforge.NotAFrame)
def test_spanning_partition_not_a_frame():
    partitioners.spanning_partition(Frame([E1, E1]))


def test_trim_to_bases():
    F = Frame([E1, E2, E1, E2])
    p = frameforge.IndexPartition([2, 2, 2, 2], part_count=2)
    assert partitioners.trim_to_bases(F, p).parts == ((2, 3), (0, 1))

    p = frameforge.IndexPartition([1, 1, 1, 2])
    assert (partitioners.trim_to_bases(F, p, prepend=True).parts ==
            ((2,), (0, 1), (3,)))


def test_independent_spanning_mercedes_benz(mb):
    p, cert = partitioners.independent_spanning_partition(mb, 1)
    assert p.parts == ((2,), (0, 1))
    assert cert.claims_hold
    assert cert.params['start'] == 'p6'
    assert not cert.params['fallback']


@parametrize('frame, r, first',
             [(frames.harmonic_frame(2, 5), 2, 1),
              (frames.harmonic_frame(2, 4), 2, 0),
              (frames.harmonic_frame(3, 7), 2, 1),
              (frames.scaled_union_of_bases(2, 3), 3, 0)])
def test_independent_spanning_partition(frame, r, first):
    p, cert = partitioners.independent_spanning_partition(frame, r)
    assert p.part_count == r + 1
    assert len(p.part(1)) == first
    assert all(len(part) == frame.dim for part in p.parts[1:])
    assert cert.claims_hold


def test_independent_spanning_union_route():
    # 2 * max ||f_i||^2 exceeds the lower frame bound
    F = Frame([E1, E2, [1, 1], [1, -1], [3, 0]])
    p, cert = partitioners.independent_spanning_partition(F, 2)
    assert cert.params['start'] == 'union'
    assert cert.claims_hold


def test_independent_spanning_hypothesis_one():
    F = Frame([E1, E1, E1, E2])
    with pytest.raises(frameforge.HypothesisFailed) as exc:
        partitioners.independent_spanning_partition(F, 1)
    assert exc.value.hypothesis == 1
    assert isinstance(exc.value.witness, matroids.InfeasibleWitness)
    assert exc.value.witness.subset == (0, 1, 2)


def test_independent_spanning_hypothesis_two():
    F = Frame([E1, E2, E1, E1])
    with pytest.raises(frameforge.HypothesisFailed) as exc:
        partitioners.independent_spanning_partition(F, 2)
    assert exc.value.hypothesis == 2
    assert exc.value.witness is None


@xfail(raises=frameforge.ParameterError)
def test_independent_spanning_bad_r(mb):
    partitioners.independent_spanning_partition(mb, 0)


@parametrize('frame, r, value',
             [(frames.mercedes_benz(), 1, ((0,), (1, 2))),
              (Frame([E1, E1, E1]), 1, None),
              (frames.harmonic_frame(2, 4), 2, ((), (0, 1), (2, 3)))])
def test_exhaustive_independent_spanning(frame, r, value):
    p = partitioners.exhaustive_independent_spanning(frame, r)
    if value is None:
        assert p is None
    else:
        assert p.parts == value


@xfail(raises=frameforge.SearchExhausted)
def test_exhaustive_independent_spanning_limit():
    partitioners.exhaustive_independent_spanning(
        frames.harmonic_frame(2, 15), 2)


@parametrize('seed', range(8))
def test_independent_spanning_agrees_with_search(seed):
    F = frames.random_parseval(2, 5 + seed % 2, seed)
    p, cert = partitioners.independent_spanning_partition(F, 2)
    assert cert.claims_hold
    assert partitioners.exhaustive_independent_spanning(F, 2) is not None
