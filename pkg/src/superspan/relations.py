"""The multiplicative relation lattice of a projective point.

For a point with nonzero rational coordinates, a relation is an integer
vector e with sum zero such that the product of the coordinates raised
to the e_i equals exactly 1.  Relations form a sublattice of Z^(n+1),
computed here as the integer kernel of the prime-exponent map together
with a sign-parity constraint (the product must be +1, not -1).

Points of the shape [1, zeta_ell * q1, q2, ...] over a cyclotomic field
are also supported: each coordinate must be a rational multiple of a
power of zeta, and the root-of-unity exponents contribute a congruence
condition modulo ell.  Anything more general is rejected rather than
answered heuristically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import DimensionMismatch, Unsupported, ZeroCoordinate
from .field import CYCLOTOMIC, RATIONAL, FieldValue


# ----------------------------------------------------------------------
# integer matrix utilities
# ----------------------------------------------------------------------

def hermite_normal_form(rows: Sequence[Sequence[int]]) -> List[List[int]]:
    """Row-style Hermite normal form: positive pivots that strictly
    decrease in column as the row index grows, entries above each pivot
    reduced into [0, pivot).  Canonical for the row lattice."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    pivot_row = 0
    for col in range(ncols):
        if pivot_row >= len(rows):
            break
        block = [i for i in range(pivot_row, len(rows)) if rows[i][col]]
        if not block:
            continue
        while len(block) > 1:
            block.sort(key=lambda i: abs(rows[i][col]))
            i0 = block[0]
            for i in block[1:]:
                q = rows[i][col] // rows[i0][col]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[i0])]
            block = [i for i in block if rows[i][col]]
        i0 = block[0]
        rows[pivot_row], rows[i0] = rows[i0], rows[pivot_row]
        if rows[pivot_row][col] < 0:
            rows[pivot_row] = [-a for a in rows[pivot_row]]
        piv = rows[pivot_row][col]
        for i in range(pivot_row):
            q = rows[i][col] // piv
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[pivot_row])]
        pivot_row += 1
    return rows[:pivot_row]


def integer_kernel(mat: Sequence[Sequence[int]]) -> List[List[int]]:
    """Basis (in HNF) of {e in Z^ncols : mat @ e = 0}."""
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    if ncols == 0:
        return []
    # rows of [mat^T | I]: HNF rows whose left part vanishes carry the kernel
    stacked = [[mat[r][i] for r in range(nrows)] + [1 if j == i else 0 for j in range(ncols)]
               for i in range(ncols)]
    reduced = hermite_normal_form(stacked)
    kernel = [row[nrows:] for row in reduced if not any(row[:nrows])]
    return hermite_normal_form(kernel)


# ----------------------------------------------------------------------
# coordinate factorization
# ----------------------------------------------------------------------

def _factorize(n: int) -> dict:
    """Trial-division factorization of a positive integer."""
    factors = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _as_fraction_list(P) -> List[Fraction]:
    coords = getattr(P, "coords", P)
    out = []
    for c in coords:
        if isinstance(c, FieldValue):
            out.append(c.as_rational())
        else:
            out.append(Fraction(c))
    return out


def exponent_matrix(P) -> Tuple[List[int], List[List[int]], List[int]]:
    """Prime support of the coordinates of P.

    Returns (primes, E, signs) where E[i][j] is the exponent of
    primes[j] in coordinate i and signs[i] is +-1.
    """
    coords = _as_fraction_list(P)
    if any(c == 0 for c in coords):
        raise ZeroCoordinate("exponent matrix needs nonzero coordinates")
    factored = []
    support = set()
    for c in coords:
        num = _factorize(abs(c.numerator))
        den = _factorize(c.denominator)
        exps = {p: e for p, e in num.items()}
        for p, e in den.items():
            exps[p] = exps.get(p, 0) - e
        factored.append(exps)
        support.update(exps)
    primes = sorted(support)
    E = [[exps.get(p, 0) for p in primes] for exps in factored]
    signs = [1 if c > 0 else -1 for c in coords]
    return primes, E, signs


# ----------------------------------------------------------------------
# the relation lattice
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class RelLattice:
    """Sublattice of Z^(n+1) of multiplicative relations, basis in HNF."""

    dimension: int
    basis: tuple  # tuple of integer tuples

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        return lattice_contains(self, v)


def _cyclotomic_parts(P) -> Tuple[List[Fraction], List[int], int]:
    """Split coordinates q * zeta^a into (rationals q, torsion exponents a).

    Requires every coordinate to be a monomial in zeta; raises
    Unsupported otherwise.
    """
    ell = P.ambient.cyclotomic_order
    rationals = []
    torsion = []
    for c in P.coords:
        nonzero = [(i, coeff) for i, coeff in enumerate(c.coeffs) if coeff]
        if len(nonzero) != 1:
            raise Unsupported(
                "relation lattice supports cyclotomic coordinates of the form "
                "q * zeta^a only")
        a, q = nonzero[0]
        rationals.append(q)
        torsion.append(a)
    return rationals, torsion, ell


def relation_lattice(P) -> RelLattice:
    """R(P): integer vectors e with sum 0 and product of coordinate
    powers exactly 1, as a canonical HNF lattice."""
    if hasattr(P, "ambient") and P.ambient.kind == CYCLOTOMIC:
        rationals, torsion, ell = _cyclotomic_parts(P)
    elif hasattr(P, "ambient") and P.ambient.kind not in (RATIONAL, CYCLOTOMIC):
        raise Unsupported("relation lattice is computed exactly only for "
                          "rational or cyclotomic-monomial coordinates")
    else:
        rationals = _as_fraction_list(P)
        torsion, ell = None, None
    if any(q == 0 for q in rationals):
        raise ZeroCoordinate("relation lattice needs nonzero coordinates")

    n_plus_1 = len(rationals)
    primes, E, signs = exponent_matrix(rationals)

    # constraint rows over (e_0..e_n, aux...): prime exponents, the sum,
    # sign parity (aux 2), and for cyclotomic points the torsion
    # congruence (aux ell)
    aux = []
    rows = []
    for j in range(len(primes)):
        rows.append([E[i][j] for i in range(n_plus_1)])
    rows.append([1] * n_plus_1)
    if any(s < 0 for s in signs):
        aux.append(2)
        rows.append([1 if s < 0 else 0 for s in signs])
    if torsion is not None and any(torsion):
        aux.append(ell)
        rows.append(list(torsion))
    # widen rows with auxiliary columns carrying the moduli
    n_aux = len(aux)
    wide = []
    aux_seen = 0
    for row in rows:
        extra = [0] * n_aux
        wide.append(row + extra)
    aux_row_start = len(primes) + 1
    k = 0
    for idx in range(aux_row_start, len(wide)):
        wide[idx][n_plus_1 + k] = aux[k]
        k += 1

    kernel = integer_kernel(wide)
    projected = hermite_normal_form([row[:n_plus_1] for row in kernel])
    lattice = RelLattice(n_plus_1, tuple(tuple(r) for r in projected))

    # soundness: every basis vector is a genuine relation
    for e in lattice.basis:
        assert sum(e) == 0
        prod = Fraction(1)
        for q, exp in zip(rationals, e):
            prod *= Fraction(q) ** exp
        assert prod == 1, f"unsound relation basis vector {e}"
        if torsion is not None:
            assert sum(a * x for a, x in zip(torsion, e)) % ell == 0
    return lattice


def lattice_contains(L: RelLattice, v: Sequence[int]) -> bool:
    """Exact membership of an integer vector in the lattice."""
    v = [int(x) for x in v]
    if len(v) != L.dimension:
        raise DimensionMismatch(
            f"vector of length {len(v)} against a lattice in Z^{L.dimension}")
    for row in L.basis:
        pivot_col = next(i for i, x in enumerate(row) if x)
        q, r = divmod(v[pivot_col], row[pivot_col])
        if r:
            return False
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def coordinate_slice(L: RelLattice, indices: Sequence[int]) -> RelLattice:
    """The sublattice of vectors vanishing at the given coordinates.

    Lets a caller test intersection conditions of the form
    R(P) cap {e_i = 0 : i in indices} = {0}.
    """
    indices = sorted(set(int(i) for i in indices))
    if any(i < 0 or i >= L.dimension for i in indices):
        raise DimensionMismatch(f"coordinate indices {indices} outside the lattice")
    if not indices or not L.basis:
        return L
    constraints = [[row[i] for row in L.basis] for i in indices]
    vectors = []
    for c in integer_kernel(constraints):
        v = [0] * L.dimension
        for coeff, row in zip(c, L.basis):
            if coeff:
                for idx in range(L.dimension):
                    v[idx] += coeff * row[idx]
        vectors.append(v)
    basis = hermite_normal_form(vectors)
    return RelLattice(L.dimension, tuple(tuple(r) for r in basis))
