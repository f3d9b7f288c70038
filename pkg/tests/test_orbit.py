import random
from fractions import Fraction

import pytest

from superspan import field, linalg
from superspan.errors import (
    DimensionMismatch,
    ExponentBudgetExceeded,
    TupleTooLong,
    ZeroCoordinate,
)
from superspan.orbit import (
    ProjPoint,
    iterate,
    iterate_matrix,
    subspace_membership,
    validate_exp_tuple,
)


def test_iterate_identity():
    P = ProjPoint.rational([1, 2, 3])
    assert iterate(P, 2, 0) == P


def test_iterate_squares_twice():
    P = ProjPoint.rational([1, 2, 3])
    assert iterate(P, 2, 2) == ProjPoint.rational([1, 16, 81])


def test_iterate_cyclotomic_reduction():
    C5 = field.cyclotomic_field(5)
    z = C5.gen()
    P = ProjPoint(C5, [C5.one(), z])
    Q = iterate(P, 2, 3)  # exponent 8 = 3 mod 5
    assert Q == ProjPoint(C5, [C5.one(), z ** 3])


def test_iterate_composition():
    rng = random.Random(23)
    P = ProjPoint.rational([1, 2, -3])
    for _ in range(10):
        a, b = rng.randint(0, 3), rng.randint(0, 3)
        assert iterate(P, 2, a + b) == iterate(iterate(P, 2, a), 2, b)


def test_canonical_scaling():
    assert ProjPoint.rational([2, 4, -6]) == ProjPoint.rational([1, 2, -3])
    assert ProjPoint.rational([0, 5, 10]) == ProjPoint.rational([0, 1, 2])
    with pytest.raises(ZeroCoordinate):
        ProjPoint.rational([0, 0, 0])


def test_iterate_scale_invariance():
    a = iterate(ProjPoint.rational([2, 4, 6]), 2, 2)
    b = iterate(ProjPoint.rational([1, 2, 3]), 2, 2)
    assert a == b


def test_iterate_matrix_entries():
    P = ProjPoint.rational([1, 2, -3])
    A = iterate_matrix(P, 2, (0, 1, 2))
    expect = [[1, 2, -3], [1, 4, 9], [1, 16, 81]]
    got = [[v.as_rational() for v in row] for row in A.rows()]
    assert got == [[Fraction(x) for x in row] for row in expect]


def test_iterate_matrix_small():
    P = ProjPoint.rational([1, 2])
    A = iterate_matrix(P, 3, (0, 1))
    got = [[v.as_rational() for v in row] for row in A.rows()]
    assert got == [[1, 2], [1, 8]]


def test_iterate_matrix_rejects_zero_coordinate():
    with pytest.raises(ZeroCoordinate):
        iterate_matrix(ProjPoint.rational([1, 0, 2]), 2, (0, 1))


def test_iterate_matrix_rejects_long_tuple():
    with pytest.raises(TupleTooLong):
        iterate_matrix(ProjPoint.rational([1, 2]), 2, (0, 1, 2))


def test_exp_tuple_validation():
    assert validate_exp_tuple([0, 3, 5]) == (0, 3, 5)
    with pytest.raises(ValueError):
        validate_exp_tuple([3, 3])
    with pytest.raises(ValueError):
        validate_exp_tuple([-1, 2])


def test_budget_guard():
    P = ProjPoint.rational([1, 2, 3])
    with pytest.raises(ExponentBudgetExceeded):
        iterate(P, 2, 50, budget=2 ** 20)
    with pytest.raises(ExponentBudgetExceeded):
        iterate_matrix(P, 2, (0, 30), budget=2 ** 10).rows()
    # huge m refused without computing d**m
    with pytest.raises(ExponentBudgetExceeded):
        iterate(P, 2, 10 ** 9)


def test_rows_match_iterates():
    P = ProjPoint.rational([1, 2, -3])
    A = iterate_matrix(P, 2, (0, 2, 3))
    for i in range(3):
        assert A.row_point(i) == iterate(P, 2, A.tuple[i])


def test_membership_on_line():
    L = linalg.span_canonical([ProjPoint.rational([1, 2, -3]),
                               ProjPoint.rational([1, 4, 9])])
    assert subspace_membership(ProjPoint.rational([1, 16, 81]), L)
    assert not subspace_membership(ProjPoint.rational([1, 256, 6561]), L)
    assert subspace_membership(ProjPoint.rational([1, 4, 9]), L)


def test_membership_dimension_check():
    L = linalg.span_canonical([ProjPoint.rational([1, 2, -3])])
    with pytest.raises(DimensionMismatch):
        subspace_membership(ProjPoint.rational([1, 2]), L)
