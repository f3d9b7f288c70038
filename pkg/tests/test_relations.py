from fractions import Fraction
from itertools import product

import pytest

from superspan import field
from superspan.errors import DimensionMismatch, Unsupported, ZeroCoordinate
from superspan.orbit import ProjPoint, iterate
from superspan.relations import (
    RelLattice,
    coordinate_slice,
    exponent_matrix,
    hermite_normal_form,
    integer_kernel,
    lattice_contains,
    relation_lattice,
)


def brute_force_relations(coords, bound=3):
    """Independent oracle: all relation vectors with sup-norm <= bound."""
    coords = [Fraction(c) for c in coords]
    found = []
    for e in product(range(-bound, bound + 1), repeat=len(coords)):
        if sum(e) != 0:
            continue
        prod = Fraction(1)
        for c, k in zip(coords, e):
            prod *= c ** k
        if prod == 1:
            found.append(e)
    return found


def test_hnf_canonical():
    assert hermite_normal_form([[2, 4], [1, 3]]) == [[1, 1], [0, 2]]
    assert hermite_normal_form([[0, 0], [0, 0]]) == []
    # canonical regardless of generator presentation
    a = hermite_normal_form([[1, -1, -1, 1], [2, -2, -2, 2]])
    b = hermite_normal_form([[-1, 1, 1, -1]])
    assert a == b == [[1, -1, -1, 1]]


def test_integer_kernel():
    # kernel of [[1, 1, 1]] is rank 2
    k = integer_kernel([[1, 1, 1]])
    assert len(k) == 2
    for v in k:
        assert sum(v) == 0
    assert integer_kernel([[1, 0], [0, 1]]) == []


def test_exponent_matrix_basic():
    primes, E, signs = exponent_matrix([1, 2, 3, 6])
    assert primes == [2, 3]
    assert E == [[0, 0], [1, 0], [0, 1], [1, 1]]
    assert signs == [1, 1, 1, 1]


def test_exponent_matrix_signs():
    primes, E, signs = exponent_matrix([1, 2, -3])
    assert primes == [2, 3]
    assert E == [[0, 0], [1, 0], [0, 1]]
    assert signs == [1, 1, -1]


def test_exponent_matrix_units():
    primes, E, signs = exponent_matrix([1, 1])
    assert primes == []
    assert E == [[], []]
    assert signs == [1, 1]


def test_exponent_matrix_zero():
    with pytest.raises(ZeroCoordinate):
        exponent_matrix([1, 0, 2])


def test_trivial_lattice():
    L = relation_lattice(ProjPoint.rational([1, 2, 3, 5]))
    assert L.rank == 0


def test_rank_one_lattice():
    L = relation_lattice(ProjPoint.rational([1, 2, 3, 6]))
    assert L.rank == 1
    assert L.basis == ((1, -1, -1, 1),)


def test_quadric_lattice():
    L = relation_lattice(ProjPoint.rational([1, 6, 2, 3]))
    assert L.rank == 1
    assert lattice_contains(L, (1, 1, -1, -1))


def test_sign_parity():
    # (-1)^e1 = 1 forces e1 even; lattice is generated by (2, -2)
    L = relation_lattice(ProjPoint.rational([1, -1]))
    assert L.basis == ((2, -2),)
    assert not lattice_contains(L, (1, -1))
    assert lattice_contains(L, (4, -4))


def test_lattice_contains_examples():
    L = RelLattice(4, ((1, 1, -1, -1),))
    assert lattice_contains(L, (0, 0, 0, 0))
    assert lattice_contains(L, (2, 2, -2, -2))
    assert not lattice_contains(L, (1, 0, -1, 0))
    with pytest.raises(DimensionMismatch):
        lattice_contains(L, (1, 1, -1))


@pytest.mark.parametrize("coords", [
    [1, 2, 3, 5],
    [1, 2, 3, 6],
    [1, 6, 2, 3],
    [1, 2, -3],
    [1, -1],
    [2, 4, 8],
    [Fraction(1, 2), 3, 6],
])
def test_completeness_small_exponents(coords):
    L = relation_lattice(ProjPoint.rational(coords))
    for e in brute_force_relations(coords, bound=3):
        assert lattice_contains(L, e), f"missed relation {e}"


def test_soundness_basis_vectors():
    for coords in ([1, 2, 3, 6], [1, 6, 2, 3], [4, 2, 8, 1], [1, -2, 4, -8]):
        L = relation_lattice(ProjPoint.rational(coords))
        for e in L.basis:
            prod = Fraction(1)
            for c, k in zip(coords, e):
                prod *= Fraction(c) ** k
            assert prod == 1 and sum(e) == 0


def test_trivial_lattice_implies_not_preperiodic():
    P = ProjPoint.rational([1, 2, 3])
    assert relation_lattice(P).rank == 0
    iterates = [iterate(P, 2, k) for k in range(11)]
    for a in range(11):
        for b in range(a + 1, 11):
            assert iterates[a] != iterates[b]


def test_cyclotomic_monomial_lattice():
    C5 = field.cyclotomic_field(5)
    z = C5.gen()
    P = ProjPoint(C5, [C5.one(), z, C5.from_rational(2), C5.from_rational(3)])
    L = relation_lattice(P)
    # zeta^e1 = 1 needs e1 = 0 mod 5; tail 2,3 independent
    assert L.basis == ((5, -5, 0, 0),)
    assert not lattice_contains(L, (1, -1, 0, 0))


def test_cyclotomic_general_element_rejected():
    C5 = field.cyclotomic_field(5)
    z = C5.gen()
    P = ProjPoint(C5, [C5.one(), z + C5.one(), C5.from_rational(2), C5.from_rational(3)])
    with pytest.raises(Unsupported):
        relation_lattice(P)


def test_number_field_rejected():
    K = field.number_field([1, 3, Fraction(5, 2), 0, Fraction(5, 2), 3, 1])
    P = ProjPoint(K, [K.one(), K.gen(), K.one()])
    with pytest.raises(Unsupported):
        relation_lattice(P)


def test_coordinate_slice():
    # quadric lattice meets every coordinate hyperplane trivially
    Lq = relation_lattice(ProjPoint.rational([1, 6, 2, 3]))
    for i in range(4):
        assert coordinate_slice(Lq, [i]).rank == 0
    # rank-2 lattice of [1,2,4,8] keeps a rank-1 slice at coordinate 3
    L = relation_lattice(ProjPoint.rational([1, 2, 4, 8]))
    assert L.rank == 2
    sliced = coordinate_slice(L, [3])
    assert sliced.rank == 1
    assert sliced.basis == ((1, -2, 1, 0),)
    assert coordinate_slice(L, []) == L
    with pytest.raises(DimensionMismatch):
        coordinate_slice(L, [7])


def test_hnf_unimodular_invariance():
    import random
    rng = random.Random(83)
    for _ in range(15):
        k, n = rng.randint(1, 3), rng.randint(2, 5)
        basis = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(k)]
        reference = hermite_normal_form(basis)
        # random invertible integer row operations preserve the lattice
        mixed = [row[:] for row in basis]
        for _ in range(10):
            i, j = rng.randrange(k), rng.randrange(k)
            if i != j:
                c = rng.randint(-3, 3)
                mixed[i] = [a + c * b for a, b in zip(mixed[i], mixed[j])]
            elif rng.random() < 0.5:
                mixed[i] = [-a for a in mixed[i]]
        rng.shuffle(mixed)
        assert hermite_normal_form(mixed) == reference
