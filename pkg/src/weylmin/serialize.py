"""Canonical JSON serialization.

Every document carries ``"schema": "weylmin/1"``.  Element records are
emitted in the canonical storage order (bidegrees by (k+l, k), h-degrees
ascending), and rationals as separate numerator/denominator integers, so
serialization is deterministic down to the byte and golden files can be
compared exactly.  ``dumps_canonical`` fixes the textual JSON layout.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .scalars import GaussRational, HbarPoly
from .holomorphic import PolyLambda, RatLambda
from .surfaces import Provenance, Surface, VerificationReport
from .weyl import WeylElement

SCHEMA = "weylmin/1"


class DeserializeError(ValueError):
    """Malformed or wrong-schema input document."""


def dumps_canonical(obj: dict) -> str:
    """The one true JSON layout for files and stdout."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- scalars -----------------------------------------------------------------


def _coeff_to_obj(p: HbarPoly) -> list[dict]:
    out = []
    for d, c in p.coeffs:
        out.append(
            {
                "hbar_deg": d,
                "re_num": c.re.numerator,
                "re_den": c.re.denominator,
                "im_num": c.im.numerator,
                "im_den": c.im.denominator,
            }
        )
    return out


def _coeff_from_obj(obj: object) -> HbarPoly:
    if not isinstance(obj, list):
        raise DeserializeError("coefficient must be a list of records")
    items = []
    for rec in obj:
        try:
            d = int(rec["hbar_deg"])
            re = Fraction(int(rec["re_num"]), int(rec["re_den"]))
            im = Fraction(int(rec["im_num"]), int(rec["im_den"]))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise DeserializeError(f"bad coefficient record: {exc}") from exc
        items.append((d, GaussRational(re, im)))
    return HbarPoly(items)


def _fraction_to_obj(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def _fraction_from_obj(obj: object) -> Fraction:
    try:
        return Fraction(int(obj["num"]), int(obj["den"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise DeserializeError(f"bad rational record: {exc}") from exc


# -- algebra elements --------------------------------------------------------


def weyl_to_obj(a: WeylElement) -> list[dict]:
    return [
        {"k": k, "l": l, "coeff": _coeff_to_obj(c)} for (k, l), c in a.terms
    ]


def weyl_from_obj(obj: object) -> WeylElement:
    if not isinstance(obj, list):
        raise DeserializeError("element must be a list of term records")
    items = []
    for rec in obj:
        try:
            k, l = int(rec["k"]), int(rec["l"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DeserializeError(f"bad term record: {exc}") from exc
        items.append(((k, l), _coeff_from_obj(rec["coeff"])))
    return WeylElement(items)


def poly_to_obj(p: PolyLambda) -> list[dict]:
    return [{"deg": d, "coeff": _coeff_to_obj(c)} for d, c in p.coeffs]


def poly_from_obj(obj: object) -> PolyLambda:
    if not isinstance(obj, list):
        raise DeserializeError("polynomial must be a list of records")
    items = []
    for rec in obj:
        try:
            d = int(rec["deg"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DeserializeError(f"bad polynomial record: {exc}") from exc
        items.append((d, _coeff_from_obj(rec["coeff"])))
    return PolyLambda(items)


def rat_to_obj(r: RatLambda) -> dict:
    return {"num": poly_to_obj(r.num), "den": poly_to_obj(r.den)}


def rat_from_obj(obj: object) -> RatLambda:
    try:
        num, den = obj["num"], obj["den"]
    except (KeyError, TypeError) as exc:
        raise DeserializeError(f"bad rational-function record: {exc}") from exc
    return RatLambda(poly_from_obj(num), poly_from_obj(den))


# -- surfaces ----------------------------------------------------------------


def _param_to_obj(name: str, value) -> dict:
    if isinstance(value, RatLambda):
        return {"name": name, "type": "rat", "value": rat_to_obj(value)}
    if isinstance(value, PolyLambda):
        return {"name": name, "type": "poly", "value": poly_to_obj(value)}
    raise TypeError(f"unsupported provenance parameter {type(value).__name__}")


def _param_from_obj(obj: object) -> tuple[str, object]:
    try:
        name, typ, value = obj["name"], obj["type"], obj["value"]
    except (KeyError, TypeError) as exc:
        raise DeserializeError(f"bad provenance parameter: {exc}") from exc
    if typ == "rat":
        return name, rat_from_obj(value)
    if typ == "poly":
        return name, poly_from_obj(value)
    raise DeserializeError(f"unknown parameter type {typ!r}")


def surface_to_obj(s: Surface) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "surface",
        "n": s.n,
        "offsets": [_fraction_to_obj(x) for x in s.offsets],
        "components": [weyl_to_obj(c) for c in s.components],
        "provenance": {
            "kind": s.provenance.kind,
            "params": [_param_to_obj(n, v) for n, v in s.provenance.params],
            "primitives": [poly_to_obj(p) for p in s.provenance.primitives],
        },
    }


def surface_from_obj(obj: object) -> Surface:
    if not isinstance(obj, dict):
        raise DeserializeError("surface document must be an object")
    if obj.get("schema") != SCHEMA:
        raise DeserializeError(
            f"unsupported schema {obj.get('schema')!r}; expected {SCHEMA!r}"
        )
    if obj.get("kind") != "surface":
        raise DeserializeError("document is not a surface")
    try:
        comps = tuple(weyl_from_obj(c) for c in obj["components"])
        offsets = tuple(_fraction_from_obj(x) for x in obj["offsets"])
        prov_obj = obj["provenance"]
        prov = Provenance(
            kind=str(prov_obj["kind"]),
            params=tuple(_param_from_obj(p) for p in prov_obj["params"]),
            primitives=tuple(poly_from_obj(p) for p in prov_obj["primitives"]),
        )
    except (KeyError, TypeError) as exc:
        raise DeserializeError(f"bad surface document: {exc}") from exc
    if len(comps) != int(obj.get("n", len(comps))):
        raise DeserializeError("component count does not match n")
    return Surface(comps, offsets, prov)


def report_to_obj(rep: VerificationReport) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "verification",
        "passes": rep.passes,
        "hermitian": list(rep.hermitian),
        "harmonic": list(rep.harmonic),
        "conformal": rep.conformal,
        "witnesses": {name: weyl_to_obj(w) for name, w in rep.witnesses},
    }


def fock_report_to_obj(report: dict) -> dict:
    out = {"schema": SCHEMA, "kind": "fock-residuals"}
    out.update(report)
    return out
