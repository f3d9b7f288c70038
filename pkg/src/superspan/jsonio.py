"""JSON encoding of the package's data types.

Rationals serialize as canonical strings "p/q" (reduced, positive
denominator, bare "p" for integers); field elements as arrays of such
strings with the constant term first.  Encoders produce plain dict/list
structures ready for json.dumps with sorted keys, so identical inputs
give byte-identical documents.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .detect import ExceptionalReport
from .field import CYCLOTOMIC, NUMBER_FIELD, RATIONAL, FieldDesc, FieldValue, make_field
from .linalg import Subspace
from .mpoly import MPoly
from .orbit import ProjPoint
from .relations import RelLattice
from .subsum import TermPartition, TermVector


def encode_rational(q: Fraction) -> str:
    return str(Fraction(q))


def decode_rational(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s))


def encode_value(v: FieldValue) -> list:
    return [encode_rational(c) for c in v.coeffs]


def encode_field(desc: FieldDesc) -> dict:
    if desc.kind == RATIONAL:
        return {"kind": "rational"}
    if desc.kind == CYCLOTOMIC:
        return {"kind": "cyclotomic", "ell": desc.cyclotomic_order}
    return {"kind": "number_field",
            "min_poly": [encode_rational(c) for c in desc.min_poly]}


def decode_field(obj: dict) -> FieldDesc:
    kind = obj["kind"]
    if kind == "rational":
        return make_field(RATIONAL)
    if kind == "cyclotomic":
        return make_field(CYCLOTOMIC, ell=int(obj["ell"]))
    return make_field(NUMBER_FIELD,
                      min_poly=[decode_rational(c) for c in obj["min_poly"]])


def parse_field_spec(spec: str) -> FieldDesc:
    """CLI shorthand: rational | cyclotomic:ELL | numberfield:c0,c1,..."""
    if spec == "rational":
        return make_field(RATIONAL)
    if spec.startswith("cyclotomic:"):
        return make_field(CYCLOTOMIC, ell=int(spec.split(":", 1)[1]))
    if spec.startswith("numberfield:"):
        coeffs = [decode_rational(c) for c in spec.split(":", 1)[1].split(",")]
        return make_field(NUMBER_FIELD, min_poly=coeffs)
    raise ValueError(f"unknown field spec {spec!r}")


def encode_point(P: ProjPoint) -> dict:
    return {"field": encode_field(P.ambient),
            "coords": [encode_value(c) for c in P.coords]}


def decode_point(obj, ambient: Optional[FieldDesc] = None) -> ProjPoint:
    """Accepts the full point document or a bare coordinate array whose
    entries are rational strings/ints or coefficient arrays."""
    if isinstance(obj, dict):
        ambient = decode_field(obj["field"])
        coords = obj["coords"]
    else:
        coords = obj
    if ambient is None:
        ambient = make_field(RATIONAL)
    values = []
    for c in coords:
        if isinstance(c, list):
            values.append(ambient.element([decode_rational(x) for x in c]))
        else:
            values.append(ambient.element(decode_rational(c)))
    return ProjPoint(ambient, values)


def encode_subspace(L: Subspace) -> dict:
    return {"n": L.ambient_dim,
            "basis": [[encode_value(v) for v in row] for row in L.basis]}


def encode_lattice(L: RelLattice) -> dict:
    return {"rank": L.rank, "basis": [list(v) for v in L.basis]}


def encode_mpoly(poly: MPoly) -> dict:
    terms = [{"exponents": list(e), "coeff": encode_rational(c)}
             for e, c in sorted(poly.terms.items())]
    return {"variables": list(poly.variables), "terms": terms}


def decode_mpoly(obj: dict) -> MPoly:
    terms = {tuple(t["exponents"]): decode_rational(t["coeff"])
             for t in obj["terms"]}
    return MPoly(obj["variables"], terms)


def encode_partition(part: TermPartition) -> dict:
    return {"r": part.r,
            "blocks": [[list(sigma) for sigma in block] for block in part.blocks]}


def encode_term_vector(tv: TermVector) -> list:
    return [{"sigma": list(perm), "sign": sign, "value": encode_value(value)}
            for perm, sign, value in tv.entries]


def encode_report(report: ExceptionalReport) -> dict:
    return {
        "input": {
            "point": encode_point(report.point),
            "d": report.d,
            "r": report.r,
            "max_iter": report.max_iter,
        },
        "tuples": [list(m) for m in report.tuples],
        "subspaces": [
            {
                "basis": [[encode_value(v) for v in row] for row in rec.subspace.basis],
                "preimage": [list(m) for m in rec.preimage],
                "intersection_count": rec.intersection_count,
            }
            for rec in report.subspaces
        ],
        "diagnostics": report.diagnostics,
    }
