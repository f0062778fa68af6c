"""JSON encoding of the library's objects.

Ring elements are written as decimal strings (``"a/b"`` over Q) so that
arbitrarily large integers survive any JSON reader.  Output is
deterministic: keys are sorted and polynomial terms are listed by degree.
"""

from __future__ import annotations

import json

from .blanchfield import BlanchfieldPresentation, seifertize
from .errors import ValidationError
from .forms import BlanchfieldForm, SeifertForm, make_seifert_form
from .invariants import InvariantReport
from .laurent import LaurentMatrix, LaurentPoly
from .linalg import Matrix
from .rings import ZZ, BaseRing
from .seifert import SeifertModule


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from None


def _ring_of(obj, ring):
    if isinstance(obj, dict) and "ring" in obj:
        return BaseRing.parse(str(obj["ring"]))
    return ring


def _need(obj, key, kind=dict):
    if not isinstance(obj, dict):
        raise ValidationError(f"expected a JSON object, got {type(obj).__name__}")
    if key not in obj:
        raise ValidationError(f"missing key {key!r}")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        raise ValidationError(f"key {key!r} should be {kind.__name__}")
    return val


def _element(text, ring: BaseRing):
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ValidationError(f"ring element must be a decimal string, got {text!r}")
    try:
        return ring.parse_element(text)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"cannot read {text!r} as an element of {ring}") from None


def _int(value, name):
    if isinstance(value, bool):
        raise ValidationError(f"{name} must be an integer")
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{name} must be an integer, got {value!r}") from None


# -- Laurent polynomials ----------------------------------------------------

def poly_to_json(p: LaurentPoly):
    return {"coeffs": [[d, str(c)] for d, c in p.terms]}


def poly_from_json(obj, ring: BaseRing = ZZ) -> LaurentPoly:
    ring = _ring_of(obj, ring)
    terms = _need(obj, "coeffs", list)
    out = {}
    for t in terms:
        if not isinstance(t, list) or len(t) != 2:
            raise ValidationError(f"polynomial term must be [degree, coefficient], got {t!r}")
        d = _int(t[0], "degree")
        c = _element(t[1], ring)
        out[d] = ring.add(out[d], c) if d in out else c
    return LaurentPoly(out, ring)


# -- matrices ---------------------------------------------------------------

def _shape(obj):
    rows = _int(_need(obj, "rows", None), "rows")
    cols = _int(_need(obj, "cols", None), "cols")
    entries = _need(obj, "entries", list)
    if rows < 0 or cols < 0:
        raise ValidationError("negative matrix dimensions")
    if len(entries) != rows or any(not isinstance(r, list) or len(r) != cols for r in entries):
        raise ValidationError(f"entries do not form a {rows}x{cols} array")
    return rows, cols, entries


def matrix_to_json(m: Matrix):
    return {"rows": m.rows, "cols": m.cols,
            "entries": [[str(x) for x in row] for row in m.tolist()]}


def matrix_from_json(obj, ring: BaseRing = ZZ) -> Matrix:
    ring = _ring_of(obj, ring)
    if isinstance(obj, list):
        # bare nested lists are accepted for convenience
        rows = obj
        cols = len(rows[0]) if rows else 0
        obj = {"rows": len(rows), "cols": cols, "entries": rows}
    rows, cols, entries = _shape(obj)
    return Matrix(ring, rows, cols, [_element(x, ring) for r in entries for x in r])


def laurent_matrix_to_json(m: LaurentMatrix):
    return {"rows": m.rows, "cols": m.cols,
            "entries": [[poly_to_json(x) for x in row] for row in m.tolist()]}


def laurent_matrix_from_json(obj, ring: BaseRing = ZZ) -> LaurentMatrix:
    ring = _ring_of(obj, ring)
    rows, cols, entries = _shape(obj)
    return LaurentMatrix(ring, rows, cols, [poly_from_json(x, ring) for r in entries for x in r])


# -- modules, presentations, forms ------------------------------------------

def module_to_json(m: SeifertModule):
    return {"rank": m.rank, "e": matrix_to_json(m.e)}


def module_from_json(obj, ring: BaseRing = ZZ) -> SeifertModule:
    ring = _ring_of(obj, ring)
    return SeifertModule(matrix_from_json(_need(obj, "e", None), ring))


def presentation_to_json(b: BlanchfieldPresentation):
    return {"d": laurent_matrix_to_json(b.d)}


def presentation_from_json(obj, ring: BaseRing = ZZ) -> BlanchfieldPresentation:
    ring = _ring_of(obj, ring)
    return BlanchfieldPresentation(laurent_matrix_from_json(_need(obj, "d"), ring))


def _eta(obj, default=1):
    eta = obj.get("eta", default) if isinstance(obj, dict) else default
    eta = _int(eta, "eta")
    if eta not in (1, -1):
        raise ValidationError(f"eta must be +1 or -1, got {eta}")
    return eta


def form_to_json(f: SeifertForm):
    return {"eta": f.eta, "theta": matrix_to_json(f.theta), "e": matrix_to_json(f.e)}


def form_from_json(obj, ring: BaseRing = ZZ, eta=1) -> SeifertForm:
    ring = _ring_of(obj, ring)
    eta = _eta(obj, eta)
    theta = matrix_from_json(_need(obj, "theta", None), ring)
    if "e" in obj and obj["e"] is not None:
        return SeifertForm(SeifertModule(matrix_from_json(obj["e"], ring)), theta, eta)
    return make_seifert_form(theta, eta)


def blanchfield_form_to_json(b: BlanchfieldForm):
    return {"e": matrix_to_json(b.module.e), "g_phi": matrix_to_json(b.g_phi),
            "k": b.k, "eta": b.eta}


def blanchfield_form_from_json(obj, ring: BaseRing = ZZ, eta=1) -> BlanchfieldForm:
    """Either ``{"e", "g_phi", "k", "eta"}`` or ``{"d", "g_phi", ...}``.

    A raw presentation ``d`` is seifertized first and ``g_phi`` is read in
    the basis of the resulting module.
    """
    ring = _ring_of(obj, ring)
    eta = _eta(obj, eta)
    if "e" in obj:
        module = SeifertModule(matrix_from_json(obj["e"], ring))
    elif "d" in obj:
        module = seifertize(presentation_from_json(obj, ring))
    else:
        raise ValidationError("a Blanchfield form needs either 'e' or 'd'")
    g = matrix_from_json(_need(obj, "g_phi", None), ring)
    k = _int(obj.get("k", 1), "k")
    return BlanchfieldForm(module, g, k, eta)


def report_to_json(r: InvariantReport):
    return {
        "alexander": poly_to_json(r.alexander),
        "alexander_text": str(r.alexander),
        "alexander_at_one": str(r.alexander(1)),
        "signature": None if r.signature is None else str(r.signature),
        "determinant": str(r.determinant),
        "rank": r.rank,
        "eta": r.eta,
    }


def report_from_json(obj, ring: BaseRing = ZZ) -> InvariantReport:
    sig = obj.get("signature")
    return InvariantReport(
        alexander=poly_from_json(_need(obj, "alexander"), ring),
        signature=None if sig is None else _int(sig, "signature"),
        determinant=_int(_need(obj, "determinant", None), "determinant"),
        rank=_int(_need(obj, "rank", None), "rank"),
        eta=_eta(obj),
    )
