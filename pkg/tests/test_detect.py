import pytest

from superspan import field
from superspan.detect import (
    enumerate_exceptional,
    filter_primes,
    intersection_count,
)
from superspan.errors import Unsupported, ZeroCoordinate
from superspan.linalg import span_canonical
from superspan.orbit import ProjPoint, iterate


def test_filter_primes_deterministic():
    a = filter_primes(3, seed=0)
    b = filter_primes(3, seed=0)
    assert a == b
    assert len(set(a)) == 3
    assert all(field.is_prime(p) and p.bit_length() == 30 for p in a)
    assert filter_primes(3, seed=1) != a


def test_one_exceptional_line():
    P = ProjPoint.rational([1, 2, -3])
    report = enumerate_exceptional(P, 2, 2, 3)
    assert report.tuples == ((0, 1, 2),)
    assert len(report.subspaces) == 1
    rec = report.subspaces[0]
    assert rec.preimage == ((0, 1, 2),)
    assert rec.intersection_count == 3
    assert rec.subspace.dim_projective == 1


def test_generic_point_no_subspaces():
    P = ProjPoint.rational([1, 2, 3])
    report = enumerate_exceptional(P, 2, 2, 5)
    assert report.tuples == ()
    assert report.subspaces == ()


def test_monotone_in_bound():
    P = ProjPoint.rational([1, 2, -3])
    small = enumerate_exceptional(P, 2, 2, 3)
    large = enumerate_exceptional(P, 2, 2, 6)
    small_keys = {rec.subspace.key() for rec in small.subspaces}
    large_keys = {rec.subspace.key() for rec in large.subspaces}
    assert small_keys <= large_keys
    counts_small = {rec.subspace.key(): rec.intersection_count for rec in small.subspaces}
    counts_large = {rec.subspace.key(): rec.intersection_count for rec in large.subspaces}
    for key, count in counts_small.items():
        assert counts_large[key] >= count


def test_subspace_count_stabilizes():
    # observed (not proved): with a trivial relation lattice the number
    # of reported subspaces stops growing as the bound increases
    for coords, expected in [([1, 2, -3], 1), ([1, 2, 3], 0)]:
        P = ProjPoint.rational(coords)
        counts = [len(enumerate_exceptional(P, 2, 2, M).subspaces)
                  for M in range(3, 8)]
        assert counts == [expected] * 5


def test_diagnostics_fields():
    P = ProjPoint.rational([1, 2, -3])
    report = enumerate_exceptional(P, 2, 2, 3)
    diag = report.diagnostics
    assert diag["generic_expectation"] == 2  # n=2, r=2: floor(2/1)
    analyses = diag["partition_analyses"]
    assert len(analyses) == 1
    entry = analyses[0]["per_p"]["0,1,2"]
    assert entry["exceptional_for"] == []
    assert entry["bullet_vanishing_t"] == []
    assert entry["non_unique"] is False


def test_filtered_equals_unfiltered():
    for coords, r, M in [([1, 2, -3], 2, 4), ([1, 2, 3], 2, 5), ([1, 2, 3, 6], 2, 4)]:
        P = ProjPoint.rational(coords)
        fast = enumerate_exceptional(P, 2, r, M, use_filter=True)
        slow = enumerate_exceptional(P, 2, r, M, use_filter=False)
        assert fast.semantic_content() == slow.semantic_content()
        assert fast.diagnostics["filtered"] + fast.diagnostics["exact_checked"] == \
            fast.diagnostics["tuples_total"]
        assert slow.diagnostics["filtered"] == 0


def test_r0_unsupported():
    with pytest.raises(Unsupported):
        enumerate_exceptional(ProjPoint.rational([1, 2, 3]), 2, 0, 3)


def test_r_out_of_range():
    with pytest.raises(Unsupported):
        enumerate_exceptional(ProjPoint.rational([1, 2, 3]), 2, 3, 5)


def test_zero_coordinate_rejected():
    with pytest.raises(ZeroCoordinate):
        enumerate_exceptional(ProjPoint.rational([1, 0, 3]), 2, 2, 3)


def test_budget_skips_are_reported():
    P = ProjPoint.rational([1, 2, -3])
    report = enumerate_exceptional(P, 2, 2, 14, use_filter=True, budget=2 ** 12)
    assert report.diagnostics["skipped"], "big tuples should blow the tiny budget"
    for entry in report.diagnostics["skipped"]:
        assert "reason" in entry


def test_preperiodicity_witness_r1():
    C5 = field.cyclotomic_field(5)
    z = C5.gen()
    P = ProjPoint(C5, [C5.one(), z])
    report = enumerate_exceptional(P, 2, 1, 5)
    # 2^m mod 5 cycles with period 4: iterates 0 and 4, 1 and 5 coincide
    assert ((0, 4) in report.tuples) and ((1, 5) in report.tuples)
    assert report.diagnostics.get("preperiodicity_witness") is True
    for rec in report.subspaces:
        assert rec.subspace.dim_projective == 0


def test_intersection_count_direct():
    P = ProjPoint.rational([1, 2, -3])
    L = span_canonical([iterate(P, 2, 0), iterate(P, 2, 1)])
    assert intersection_count(P, 2, L, 3) == 3
    far = span_canonical([ProjPoint.rational([0, 1, 0]), ProjPoint.rational([0, 0, 1])])
    assert intersection_count(P, 2, far, 3) == 0


def test_quadric_point_detection():
    # [1,6,2,3] sits on x0 x1 = x2 x3; hyperplane detection at r = 3
    P = ProjPoint.rational([1, 6, 2, 3])
    report = enumerate_exceptional(P, 2, 3, 5)
    slow = enumerate_exceptional(P, 2, 3, 5, use_filter=False)
    assert report.semantic_content() == slow.semantic_content()
