"""Exact linear algebra over the ambient field.

Rank over the rationals runs fraction-free (Bareiss) on integer-scaled
rows; over number fields it falls back to ordinary elimination with
exact division.  Subspaces are kept in reduced row echelon form, which
is the canonical representation used to deduplicate the map from
iterate tuples to their spans.

The modular rank filter certifies full rank of an iterate matrix from a
single prime: every minor maps homomorphically to the quotient
F_p[x]/(f mod p), so a unit pivot elimination succeeding mod p proves a
nonzero minor exactly.  Exponents of matrix entries reduce through the
unit-group exponent of the quotient, which keeps the filter cost
independent of the size of d^m.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence

from .errors import (
    AllPrimesBad,
    BadPrime,
    DivisionByZero,
    NonInvertible,
    ShapeMismatch,
)
from .field import FieldDesc, FieldValue, ModularResidue, RATIONAL, reduce_mod_prime


def _coerce_rows(rows) -> List[List[FieldValue]]:
    """Accept sequences of FieldValue rows, ProjPoint-likes (via .coords),
    or IterMatrix-likes (via .rows())."""
    if hasattr(rows, "rows"):
        rows = rows.rows()
    out = []
    for row in rows:
        row = getattr(row, "coords", row)
        out.append(list(row))
    return out


def _ambient_of(rows: Sequence[Sequence[FieldValue]]) -> FieldDesc:
    return rows[0][0].ambient


# ----------------------------------------------------------------------
# rank and determinant
# ----------------------------------------------------------------------

def _integer_rows(rows) -> List[List[int]]:
    out = []
    for row in rows:
        fracs = [v.coeffs[0] for v in row]
        scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
        out.append([int(f * scale) for f in fracs])
    return out


def _bareiss(mat: List[List[int]]):
    """Fraction-free elimination; returns (rank, det_of_leading_pivots,
    swap_sign).  The last pivot equals the determinant of the pivot
    submatrix, so for square full-rank input it is the determinant."""
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    prev = 1
    pivot_row = 0
    sign = 1
    last_pivot = 1
    for col in range(ncols):
        if pivot_row >= nrows:
            break
        pr = None
        for r in range(pivot_row, nrows):
            if mat[r][col]:
                pr = r
                break
        if pr is None:
            continue
        if pr != pivot_row:
            mat[pivot_row], mat[pr] = mat[pr], mat[pivot_row]
            sign = -sign
        piv = mat[pivot_row][col]
        for r in range(pivot_row + 1, nrows):
            for c in range(col + 1, ncols):
                mat[r][c] = (mat[r][c] * piv - mat[r][col] * mat[pivot_row][c]) // prev
            mat[r][col] = 0
        prev = piv
        last_pivot = piv
        pivot_row += 1
    return pivot_row, last_pivot, sign


def _field_eliminate(rows: List[List[FieldValue]]):
    """Ordinary elimination with exact division; returns (rank, pivot
    product, swap sign)."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    ambient = _ambient_of(rows)
    pivot_row = 0
    sign = 1
    det = ambient.one()
    for col in range(ncols):
        if pivot_row >= nrows:
            break
        pr = None
        for r in range(pivot_row, nrows):
            if not rows[r][col].is_zero():
                pr = r
                break
        if pr is None:
            continue
        if pr != pivot_row:
            rows[pivot_row], rows[pr] = rows[pr], rows[pivot_row]
            sign = -sign
        piv = rows[pivot_row][col]
        det = det * piv
        inv = piv.inverse()
        rows[pivot_row] = [v * inv for v in rows[pivot_row]]
        for r in range(pivot_row + 1, nrows):
            f = rows[r][col]
            if not f.is_zero():
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
    return pivot_row, det, sign


def rank(rows) -> int:
    """Exact rank of a matrix of field values."""
    rows = _coerce_rows(rows)
    if not rows or not rows[0]:
        return 0
    if _ambient_of(rows).kind == RATIONAL:
        r, _, _ = _bareiss(_integer_rows(rows))
        return r
    r, _, _ = _field_eliminate(rows)
    return r


def det(rows) -> FieldValue:
    """Exact determinant of a square matrix of field values."""
    rows = _coerce_rows(rows)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ShapeMismatch("determinant needs a square matrix")
    ambient = _ambient_of(rows)
    if ambient.kind == RATIONAL:
        mat = rows  # keep exact rational scaling
        scale = Fraction(1)
        int_rows = []
        for row in mat:
            fracs = [v.coeffs[0] for v in row]
            s = lcm(*(f.denominator for f in fracs))
            scale *= s
            int_rows.append([int(f * s) for f in fracs])
        r, last_pivot, sign = _bareiss(int_rows)
        if r < n:
            return ambient.zero()
        return ambient.from_rational(Fraction(sign * last_pivot) / scale)
    r, pivot_product, sign = _field_eliminate(rows)
    if r < n:
        return ambient.zero()
    return pivot_product * ambient.from_rational(sign)


def rref(rows) -> List[List[FieldValue]]:
    """Reduced row echelon form with leading ones; zero rows dropped."""
    rows = _coerce_rows(rows)
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        if pivot_row >= nrows:
            break
        pr = None
        for r in range(pivot_row, nrows):
            if not rows[r][col].is_zero():
                pr = r
                break
        if pr is None:
            continue
        rows[pivot_row], rows[pr] = rows[pr], rows[pivot_row]
        inv = rows[pivot_row][col].inverse()
        rows[pivot_row] = [v * inv for v in rows[pivot_row]]
        for r in range(nrows):
            if r != pivot_row and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    return rows[:pivot_row]


# ----------------------------------------------------------------------
# subspaces
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A linear subspace of P^n given by its canonical RREF basis."""

    ambient_dim: int  # n
    basis: tuple      # tuple of coordinate-row tuples, in RREF

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def dim_projective(self) -> int:
        return len(self.basis) - 1

    def key(self):
        """Hashable canonical key (used to deduplicate spans)."""
        return tuple(tuple(v.coeffs for v in row) for row in self.basis)


def span_canonical(points) -> Subspace:
    """Canonical subspace spanned by the given points (or raw rows)."""
    rows = _coerce_rows(points)
    if not rows:
        raise ShapeMismatch("span of an empty point set")
    basis = rref(rows)
    n = len(rows[0]) - 1
    return Subspace(n, tuple(tuple(row) for row in basis))


def super_rank(rows, expected_r: Optional[int] = None) -> bool:
    """True iff the (r+1)-row matrix has rank r and every r-row submatrix
    also has rank r (the matrix analogue of super-spanning)."""
    rows = _coerce_rows(rows)
    r = len(rows) - 1
    if expected_r is not None and expected_r != r:
        raise ShapeMismatch(f"matrix has {r + 1} rows; expected r = {expected_r}")
    if r < 0 or len(rows[0]) < len(rows):
        raise ShapeMismatch("need r+1 rows and at least r+1 columns")
    if rank(rows) != r:
        return False
    for t in range(r + 1):
        sub = rows[:t] + rows[t + 1:]
        if rank(sub) != r:
            return False
    return True


# ----------------------------------------------------------------------
# modular rank filter
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FilterVerdict:
    """Outcome of the modular rank filter.

    certified is True only when some prime exhibited full rank r+1, in
    which case the exact matrix provably has rank r+1 and the tuple
    cannot be exceptional.  Otherwise the tuple is a candidate that
    still needs exact confirmation.
    """

    certified: bool
    prime: Optional[int] = None
    diagnostics: dict = dc_field(default_factory=dict)


def _modular_rank(rows: List[List[ModularResidue]]) -> Optional[int]:
    """Elimination over F_p[x]/(f mod p) using unit pivots.  Returns None
    when a column has nonzero entries but no invertible pivot, in which
    case this prime cannot certify anything."""
    nrows = len(rows)
    ncols = len(rows[0])
    pivot_row = 0
    for col in range(ncols):
        if pivot_row >= nrows:
            break
        pr = None
        inv = None
        stuck = False
        for r in range(pivot_row, nrows):
            if not rows[r][col].is_zero():
                try:
                    inv = rows[r][col].inverse()
                    pr = r
                    break
                except (NonInvertible, DivisionByZero):
                    stuck = True
        if pr is None:
            if stuck:
                return None
            continue
        rows[pivot_row], rows[pr] = rows[pr], rows[pivot_row]
        rows[pivot_row] = [v * inv for v in rows[pivot_row]]
        for r in range(pivot_row + 1, nrows):
            f = rows[r][col]
            if not f.is_zero():
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
    return pivot_row


def modular_rank_filter(point, d: int, m: Sequence[int], r: int,
                        primes: Sequence[int]) -> FilterVerdict:
    """Try to certify rank r+1 of the iterate matrix A_m modulo a prime.

    Entry (i, j) is computed as residue_j ** (d ** m_i) with the exponent
    reduced through the modular unit group, so no large integers are
    ever formed.  A full-rank verdict is exact; anything else is only
    'candidate' and must be confirmed by exact arithmetic.
    """
    m = tuple(m)
    if len(m) != r + 1:
        raise ShapeMismatch(f"tuple length {len(m)} does not match r = {r}")
    coords = point.coords
    bad = []
    ranks = {}
    for p in primes:
        try:
            residues = [reduce_mod_prime(c, p) for c in coords]
        except BadPrime as exc:
            bad.append((p, str(exc)))
            continue
        rows = [[res.pow_tower(d, mi) for res in residues] for mi in m]
        mod_rank = _modular_rank(rows)
        if mod_rank is None:
            bad.append((p, "no invertible pivot"))
            continue
        ranks[p] = mod_rank
        if mod_rank == r + 1:
            return FilterVerdict(True, p, {"ranks": ranks, "bad_primes": bad})
    if not ranks:
        raise AllPrimesBad(f"no usable filter prime among {list(primes)}")
    return FilterVerdict(False, None, {"ranks": ranks, "bad_primes": bad})
