"""Exact arithmetic in the ambient coefficient field.

Three kinds of ambient are supported: the rationals, number fields
Q[x]/(f) with f monic over Q, and cyclotomic fields Q(zeta_ell) for an
odd prime ell.  Elements are represented by their unique reduced
polynomial of degree < deg(f), stored as a coefficient vector of
arbitrary-precision rationals (constant term first).  All operations are
pure and every value is immutable, so values may be shared freely.

Reduction modulo a machine-word prime is provided as the basis of the
fast rank filter: a ModularResidue lives in F_p[x]/(f mod p) and its
power operation reduces exponents using the unit-group exponent of that
quotient, so raising to astronomically large powers stays cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

from .errors import (
    BadPrime,
    DivisionByZero,
    MixedAmbients,
    NonInvertible,
    NonMonicPolynomial,
    NonPrimeCyclotomicOrder,
    ZeroDegree,
    ZeroToZeroPower,
)

RATIONAL = "rational"
NUMBER_FIELD = "number_field"
CYCLOTOMIC = "cyclotomic"

Rat = Union[int, Fraction]


# ----------------------------------------------------------------------
# polynomial helpers over Q: coefficient lists, constant term first,
# trailing zeros trimmed ([] is the zero polynomial)
# ----------------------------------------------------------------------

def _ptrim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _ptrim(out)


def _pneg(a):
    return [-c for c in a]


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return _ptrim(out)


def _pmod(a, f):
    # f monic; remainder of a modulo f
    a = list(a)
    while len(a) >= len(f):
        c = a[-1]
        if c:
            shift = len(a) - len(f)
            for i in range(len(f) - 1):
                a[shift + i] -= c * f[i]
        a.pop()
    return _ptrim(a)


def _pdivmod(a, b):
    # b nonzero, arbitrary leading coefficient
    q: list = []
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b) and r:
        c = r[-1] / lead
        shift = len(r) - len(b)
        while len(q) <= shift:
            q.append(Fraction(0))
        q[shift] += c
        for i in range(len(b)):
            r[shift + i] -= c * b[i]
        _ptrim(r)
    return _ptrim(q), r


def _pxgcd(a, b):
    # returns (g, s, t) with s*a + t*b = g over Q[x]
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _padd(s0, _pneg(_pmul(q, s1)))
        t0, t1 = t1, _padd(t0, _pneg(_pmul(q, t1)))
    return r0, s0, t0


# ----------------------------------------------------------------------
# polynomial helpers over F_p (int coefficient lists, constant first)
# ----------------------------------------------------------------------

def _mp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] = (out[i + j] + c * d) % p
    return _mp_trim(out)


def _mp_mod(a, f, p):
    # f monic mod p
    a = list(a)
    while len(a) >= len(f):
        c = a[-1]
        if c:
            shift = len(a) - len(f)
            for i in range(len(f) - 1):
                a[shift + i] = (a[shift + i] - c * f[i]) % p
        a.pop()
    return _mp_trim(a)


def _mp_divmod(a, b, p):
    q: list = []
    r = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    while len(r) >= len(b) and r:
        c = (r[-1] * inv_lead) % p
        shift = len(r) - len(b)
        while len(q) <= shift:
            q.append(0)
        q[shift] = (q[shift] + c) % p
        for i in range(len(b)):
            r[shift + i] = (r[shift + i] - c * b[i]) % p
        _mp_trim(r)
    return _mp_trim(q), r


def _mp_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _mp_trim(out)


def _mp_xgcd(a, b, p):
    # returns (g, s) with s*a = g (mod b); g is the gcd up to a unit
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    while r1:
        q, r = _mp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _mp_sub(s0, _mp_mul(q, s1, p), p)
    return r0, s0


def _mp_deriv(a, p):
    return _mp_trim([(i * c) % p for i, c in enumerate(a)][1:])


# ----------------------------------------------------------------------
# primality (deterministic Miller-Rabin, valid for 64-bit inputs)
# ----------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ----------------------------------------------------------------------
# ambient field descriptions
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FieldDesc:
    """Description of an ambient field.

    min_poly is the monic minimal polynomial (constant term first) for
    number fields and cyclotomics, None for the rationals.
    """

    kind: str
    min_poly: Optional[tuple]
    degree: int
    cyclotomic_order: Optional[int] = None

    def zero(self) -> "FieldValue":
        return FieldValue(self, ())

    def one(self) -> "FieldValue":
        return FieldValue(self, (Fraction(1),))

    def from_rational(self, q: Rat) -> "FieldValue":
        return FieldValue(self, (Fraction(q),))

    def gen(self) -> "FieldValue":
        """The class of x (the root of min_poly; zeta for cyclotomics)."""
        if self.degree < 2:
            raise ZeroDegree("the rational field has no generator")
        return FieldValue(self, (Fraction(0), Fraction(1)))

    def element(self, coeffs) -> "FieldValue":
        if isinstance(coeffs, FieldValue):
            if coeffs.ambient != self:
                raise MixedAmbients("value belongs to a different field")
            return coeffs
        if isinstance(coeffs, (int, Fraction)):
            return self.from_rational(coeffs)
        return FieldValue(self, tuple(Fraction(c) for c in coeffs))


def rational_field() -> FieldDesc:
    return FieldDesc(RATIONAL, None, 1)


def cyclotomic_field(ell: int) -> FieldDesc:
    """The field Q(zeta_ell) for an odd prime ell."""
    if ell < 3 or ell % 2 == 0 or not is_prime(ell):
        raise NonPrimeCyclotomicOrder(f"cyclotomic order must be an odd prime, got {ell}")
    phi = tuple(Fraction(1) for _ in range(ell))  # x^(ell-1) + ... + x + 1
    return FieldDesc(CYCLOTOMIC, phi, ell - 1, cyclotomic_order=ell)


def number_field(min_poly: Sequence[Rat]) -> FieldDesc:
    """Q[x]/(f) for a monic f given constant-term-first."""
    coeffs = [Fraction(c) for c in min_poly]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise ZeroDegree("minimal polynomial must have degree >= 1")
    if coeffs[-1] != 1:
        raise NonMonicPolynomial("minimal polynomial must be monic")
    return FieldDesc(NUMBER_FIELD, tuple(coeffs), len(coeffs) - 1)


def make_field(kind: str, *, min_poly: Optional[Sequence[Rat]] = None,
               ell: Optional[int] = None) -> FieldDesc:
    """Validated field construction from a structured description."""
    if kind == RATIONAL:
        return rational_field()
    if kind == CYCLOTOMIC:
        if ell is None:
            raise NonPrimeCyclotomicOrder("cyclotomic field needs an order")
        return cyclotomic_field(ell)
    if kind == NUMBER_FIELD:
        if min_poly is None:
            raise ZeroDegree("number field needs a minimal polynomial")
        return number_field(min_poly)
    raise ValueError(f"unknown field kind {kind!r}")


def monicize(coeffs: Sequence[Rat]) -> list:
    """Divide a polynomial by its leading coefficient (rational output)."""
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    if not c:
        raise ZeroDegree("zero polynomial")
    lead = c[-1]
    return [x / lead for x in c]


# ----------------------------------------------------------------------
# field elements
# ----------------------------------------------------------------------

class FieldValue:
    """An element of an ambient field, canonically reduced.

    The coefficient vector always has length ambient.degree so that
    equality and hashing are plain tuple comparisons.
    """

    __slots__ = ("ambient", "coeffs")

    def __init__(self, ambient: FieldDesc, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > ambient.degree:
            if ambient.min_poly is None:
                raise ValueError("too many coefficients for the rational field")
            coeffs = _pmod(coeffs, list(ambient.min_poly))
        coeffs += [Fraction(0)] * (ambient.degree - len(coeffs))
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("FieldValue is immutable")

    # -- basic protocol --

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldValue):
            return self.ambient == other.ambient and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ((Fraction(other),) + (Fraction(0),) * (self.ambient.degree - 1))
        return NotImplemented

    def __hash__(self):
        return hash((self.ambient, self.coeffs))

    def __repr__(self) -> str:
        return f"FieldValue({list(self.coeffs)})"

    def as_rational(self) -> Fraction:
        """The value as a rational; raises if it has a nonzero x-part."""
        if any(self.coeffs[1:]):
            raise ValueError("value is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def _coerce(self, other):
        if isinstance(other, FieldValue):
            if other.ambient != self.ambient:
                raise MixedAmbients("operands belong to different ambient fields")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldValue(self.ambient, (Fraction(other),))
        return NotImplemented

    # -- arithmetic --

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldValue(self.ambient,
                          tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldValue(self.ambient, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldValue(self.ambient,
                          tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.ambient.degree == 1:
            return FieldValue(self.ambient, (self.coeffs[0] * other.coeffs[0],))
        prod = _pmul(_ptrim(list(self.coeffs)), _ptrim(list(other.coeffs)))
        return FieldValue(self.ambient, _pmod(prod, list(self.ambient.min_poly)))

    __rmul__ = __mul__

    def inverse(self) -> "FieldValue":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.ambient.degree == 1:
            return FieldValue(self.ambient, (1 / self.coeffs[0],))
        g, s, _ = _pxgcd(_ptrim(list(self.coeffs)), list(self.ambient.min_poly))
        if len(g) != 1:
            # gcd has positive degree: min_poly is reducible and self is a
            # zero divisor; report rather than return a wrong value
            raise NonInvertible("element is a zero divisor (reducible minimal polynomial)")
        inv = [c / g[0] for c in s]
        return FieldValue(self.ambient, _pmod(inv, list(self.ambient.min_poly)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int) -> "FieldValue":
        if e == 0:
            if self.is_zero():
                raise ZeroToZeroPower("0**0 is undefined")
            return self.ambient.one()
        if e < 0:
            return self.inverse() ** (-e)
        if self.ambient.degree == 1:
            return FieldValue(self.ambient, (self.coeffs[0] ** e,))
        result = self.ambient.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result


# ----------------------------------------------------------------------
# reduction modulo a prime
# ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def _unit_group_exponent(p: int, degree: int) -> int:
    """A multiple of every unit order in F_p[x]/(f), f squarefree of the
    given degree: lcm(p^j - 1) over j = 1..degree."""
    e = 1
    for j in range(1, degree + 1):
        e = math.lcm(e, p ** j - 1)
    return e


@dataclass(frozen=True)
class ModularResidue:
    """Image of a field element in F_p[x]/(f mod p).

    modulus is the monic reduction of the ambient minimal polynomial
    (None when the ambient is the rationals, so the quotient is F_p).
    Exponentiation reduces the exponent modulo the unit-group exponent,
    shifted so that zero divisors are still handled correctly.
    """

    prime: int
    coeffs: tuple
    modulus: Optional[tuple]

    def _check(self, other: "ModularResidue"):
        if self.prime != other.prime or self.modulus != other.modulus:
            raise MixedAmbients("residues from different modular quotients")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def one(self) -> "ModularResidue":
        c = (1,) + (0,) * (len(self.coeffs) - 1)
        return ModularResidue(self.prime, c, self.modulus)

    def __add__(self, other):
        self._check(other)
        return ModularResidue(self.prime,
                              tuple((a + b) % self.prime
                                    for a, b in zip(self.coeffs, other.coeffs)),
                              self.modulus)

    def __sub__(self, other):
        self._check(other)
        return ModularResidue(self.prime,
                              tuple((a - b) % self.prime
                                    for a, b in zip(self.coeffs, other.coeffs)),
                              self.modulus)

    def __mul__(self, other):
        self._check(other)
        p = self.prime
        if self.modulus is None:
            return ModularResidue(p, ((self.coeffs[0] * other.coeffs[0]) % p,), None)
        prod = _mp_mul(_mp_trim(list(self.coeffs)), _mp_trim(list(other.coeffs)), p)
        red = _mp_mod(prod, list(self.modulus), p)
        red += [0] * (len(self.coeffs) - len(red))
        return ModularResidue(p, tuple(red), self.modulus)

    def inverse(self) -> "ModularResidue":
        p = self.prime
        if self.is_zero():
            raise DivisionByZero("inverse of zero residue")
        if self.modulus is None:
            return ModularResidue(p, (pow(self.coeffs[0], p - 2, p),), None)
        g, s = _mp_xgcd(_mp_trim(list(self.coeffs)), list(self.modulus), p)
        if len(g) != 1:
            raise NonInvertible("residue is a zero divisor mod p")
        ginv = pow(g[0], p - 2, p)
        inv = _mp_mod([(c * ginv) % p for c in s], list(self.modulus), p)
        inv += [0] * (len(self.coeffs) - len(inv))
        return ModularResidue(p, tuple(inv), self.modulus)

    def _pow_raw(self, e: int) -> "ModularResidue":
        result = self.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __pow__(self, e: int) -> "ModularResidue":
        if e == 0:
            return self.one()
        if e < 0:
            return self.inverse() ** (-e)
        deg = 1 if self.modulus is None else len(self.modulus) - 1
        exponent_bound = _unit_group_exponent(self.prime, deg)
        # shift by one so zero-divisor components (which need e >= 1) are safe
        e_red = (e - 1) % exponent_bound + 1
        return self._pow_raw(e_red)

    def pow_tower(self, d: int, m: int) -> "ModularResidue":
        """self ** (d**m) without materializing d**m."""
        if d < 1 or m < 0:
            raise ValueError("tower exponent needs d >= 1, m >= 0")
        deg = 1 if self.modulus is None else len(self.modulus) - 1
        exponent_bound = _unit_group_exponent(self.prime, deg)
        e_red = (pow(d, m, exponent_bound) - 1) % exponent_bound + 1
        return self._pow_raw(e_red)


def reduce_mod_prime(a: FieldValue, p: int) -> ModularResidue:
    """Image of a in F_p[x]/(f mod p).

    Raises BadPrime when p divides a denominator of a or of the minimal
    polynomial, or when f mod p fails to be squarefree; the caller is
    expected to retry with another prime.
    """
    if p < 2 or not is_prime(p):
        raise BadPrime(f"{p} is not prime")
    for c in a.coeffs:
        if c.denominator % p == 0:
            raise BadPrime(f"denominator of coefficient collides with {p}")
    if a.ambient.min_poly is None:
        c = a.coeffs[0]
        num = c.numerator % p
        den_inv = pow(c.denominator % p, p - 2, p)
        return ModularResidue(p, ((num * den_inv) % p,), None)
    fmodp = []
    for c in a.ambient.min_poly:
        if c.denominator % p == 0:
            raise BadPrime(f"denominator of minimal polynomial collides with {p}")
        fmodp.append((c.numerator * pow(c.denominator % p, p - 2, p)) % p)
    g, _ = _mp_xgcd(_mp_trim(list(fmodp)), _mp_deriv(fmodp, p), p)
    if len(g) != 1:
        raise BadPrime(f"minimal polynomial is not squarefree mod {p}")
    coeffs = []
    for c in a.coeffs:
        coeffs.append((c.numerator * pow(c.denominator % p, p - 2, p)) % p)
    return ModularResidue(p, tuple(coeffs), tuple(fmodp))
