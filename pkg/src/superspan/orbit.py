"""Power-map orbits on projective space.

A ProjPoint stores homogeneous coordinates over an ambient field and is
canonically scaled so its first nonzero coordinate is 1.  Iterating the
degree-d power map raises every coordinate to the d^m-th power; when the
field has roots of unity the cost is tiny, but over the rationals the
bit size of entries doubles with every iterate, so exact materialization
is guarded by a configurable budget on the exponent d^m.  IterMatrix is
therefore a lazy handle: rank queries should prefer the modular filter
and only materialize entries when a tuple survives it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .errors import (
    DimensionMismatch,
    ExponentBudgetExceeded,
    TupleTooLong,
    ZeroCoordinate,
)
from .field import FieldDesc, FieldValue, rational_field

DEFAULT_EXPONENT_BUDGET = 2 ** 40


def checked_power(d: int, m: int, budget: Optional[int] = None) -> int:
    """d**m, refusing exponents beyond the materialization budget."""
    if budget is None:
        budget = DEFAULT_EXPONENT_BUDGET
    if d < 2:
        raise ValueError("power map degree must be >= 2")
    if m < 0:
        raise ValueError("iterate index must be >= 0")
    if m > budget.bit_length():
        raise ExponentBudgetExceeded(f"d^m with m = {m} exceeds the exponent budget")
    e = d ** m
    if e > budget:
        raise ExponentBudgetExceeded(f"d^m = {e} exceeds the exponent budget {budget}")
    return e


class ProjPoint:
    """A point of P^n with canonically scaled homogeneous coordinates."""

    __slots__ = ("ambient", "coords")

    def __init__(self, ambient: FieldDesc, coords):
        values = tuple(ambient.element(c) for c in coords)
        if not values:
            raise DimensionMismatch("point needs at least one coordinate")
        lead = next((v for v in values if not v.is_zero()), None)
        if lead is None:
            raise ZeroCoordinate("all homogeneous coordinates are zero")
        if lead != ambient.one():
            inv = lead.inverse()
            values = tuple(v * inv for v in values)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "coords", values)

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    @classmethod
    def rational(cls, coords) -> "ProjPoint":
        return cls(rational_field(), [Fraction(c) for c in coords])

    @property
    def dim(self) -> int:
        """Dimension n of the ambient projective space."""
        return len(self.coords) - 1

    def has_zero_coordinate(self) -> bool:
        return any(v.is_zero() for v in self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.ambient == other.ambient and self.coords == other.coords

    def __hash__(self):
        return hash((self.ambient, self.coords))

    def __repr__(self) -> str:
        return f"ProjPoint({[list(v.coeffs) for v in self.coords]})"


def validate_exp_tuple(m: Sequence[int]) -> tuple:
    m = tuple(int(x) for x in m)
    if not m:
        raise DimensionMismatch("empty iterate tuple")
    if m[0] < 0:
        raise ValueError(f"iterate indices must be non-negative: {m}")
    if any(a >= b for a, b in zip(m, m[1:])):
        raise ValueError(f"iterate tuple must be strictly increasing: {m}")
    return m


def iterate(P: ProjPoint, d: int, m: int,
            budget: Optional[int] = None) -> ProjPoint:
    """The m-th forward iterate of P under the degree-d power map."""
    e = checked_power(d, m, budget)
    return ProjPoint(P.ambient, [c ** e for c in P.coords])


class IterMatrix:
    """Lazy handle for the (r+1)x(n+1) matrix of iterates A_m.

    Row i, read as a projective point, is the m_i-th iterate of the base
    point; entry (i, j) is coordinate j raised to the d^{m_i}-th power.
    Materialization respects the exponent budget.
    """

    __slots__ = ("point", "degree", "tuple", "_budget", "_rows")

    def __init__(self, point: ProjPoint, degree: int, m: Sequence[int],
                 budget: Optional[int] = None):
        if degree < 2:
            raise ValueError("power map degree must be >= 2")
        object.__setattr__(self, "point", point)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "tuple", validate_exp_tuple(m))
        object.__setattr__(self, "_budget", budget)
        object.__setattr__(self, "_rows", None)

    def __setattr__(self, name, value):
        raise AttributeError("IterMatrix is immutable")

    @property
    def shape(self):
        return (len(self.tuple), len(self.point.coords))

    def entry(self, i: int, j: int) -> FieldValue:
        e = checked_power(self.degree, self.tuple[i], self._budget)
        return self.point.coords[j] ** e

    def rows(self):
        if self._rows is None:
            rows = []
            for mi in self.tuple:
                e = checked_power(self.degree, mi, self._budget)
                rows.append([c ** e for c in self.point.coords])
            object.__setattr__(self, "_rows", rows)
        return [list(row) for row in self._rows]

    def row_point(self, i: int) -> ProjPoint:
        return iterate(self.point, self.degree, self.tuple[i], self._budget)


def iterate_matrix(P: ProjPoint, d: int, m: Sequence[int],
                   budget: Optional[int] = None) -> IterMatrix:
    """The iterate matrix A_m for a point off the coordinate hyperplanes."""
    if P.has_zero_coordinate():
        raise ZeroCoordinate("iterate matrices need all coordinates nonzero")
    m = validate_exp_tuple(m)
    if len(m) > len(P.coords):
        raise TupleTooLong(f"tuple of length {len(m)} in P^{P.dim}")
    return IterMatrix(P, d, m, budget)


def subspace_membership(Q: ProjPoint, L: linalg.Subspace) -> bool:
    """True iff Q lies in the span of L's basis rows."""
    if Q.dim != L.ambient_dim:
        raise DimensionMismatch(
            f"point in P^{Q.dim} tested against a subspace of P^{L.ambient_dim}")
    rows = [list(row) for row in L.basis]
    rows.append(list(Q.coords))
    return linalg.rank(rows) == L.rank
