import json

import pytest

from seifert_blanchfield import ValidationError, cover_form, knot, z_power
from seifert_blanchfield import serialize as ser
from seifert_blanchfield.cli import main
from seifert_blanchfield.invariants import invariant_report
from seifert_blanchfield.random_objects import make_rng, random_nonsingular_form

z = z_power(1)


def test_roundtrip_forms():
    rng = make_rng(4)
    for i in range(20):
        f = random_nonsingular_form(rng, 1 if i % 2 else -1)
        assert ser.form_from_json(ser.loads(ser.dumps(ser.form_to_json(f)))) == f
        b = cover_form(f)
        assert ser.blanchfield_form_from_json(
            ser.loads(ser.dumps(ser.blanchfield_form_to_json(b)))) == b


def test_roundtrip_poly_and_report():
    p = z ** -2 - 3 * z + 7
    assert ser.poly_from_json(ser.poly_to_json(p)) == p
    r = invariant_report(knot("trefoil").form())
    back = ser.report_from_json(ser.loads(ser.dumps(ser.report_to_json(r))))
    assert (back.alexander, back.signature, back.determinant) == (r.alexander, r.signature,
                                                                  r.determinant)


def test_dumps_is_deterministic():
    obj = ser.form_to_json(knot("figure-eight").form())
    assert ser.dumps(obj) == ser.dumps(json.loads(ser.dumps(obj)))


def test_bad_json():
    with pytest.raises(ValidationError):
        ser.loads("{not json")
    with pytest.raises(ValidationError):
        ser.form_from_json({"theta": "oops"})


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_cli_invariants_trefoil(capsys):
    code, out = run(capsys, ["invariants", "--knot", "trefoil"])
    assert code == 0
    obj = json.loads(out)
    assert obj["signature"] == "-2" and obj["determinant"] == "3"


def _pres(coeffs):
    return {"d": {"rows": 1, "cols": 1, "entries": [[{"coeffs": coeffs}]]}}


def test_cli_seifertize(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(json.dumps(_pres([[0, "2"], [1, "-1"]])))
    code, out = run(capsys, ["seifertize", "--in", str(path)])
    assert code == 0, out
    assert json.loads(out)["e"]["entries"] == [["-1"]]


def test_cli_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    code, out = run(capsys, ["seifertize", "--in", str(bad)])
    assert code == 2 and json.loads(out)["error"]["kind"] == "validation"
    singular = tmp_path / "s.json"
    singular.write_text(json.dumps(_pres([[0, "2"]])))
    code, out = run(capsys, ["seifertize", "--in", str(singular)])
    assert code == 1 and json.loads(out)["error"]["kind"] == "mathematical"
    code, out = run(capsys, ["invariants", "--knot", "no-such-knot"])
    assert code == 2


def test_cli_uncover_and_roundtrip(tmp_path, capsys):
    path = tmp_path / "b.json"
    path.write_text(ser.dumps(ser.blanchfield_form_to_json(cover_form(knot("trefoil").form()))))
    code, out = run(capsys, ["uncover", "--in", str(path)])
    assert code == 0
    assert json.loads(out)["trace"]["shortcut"] is True
    code, out = run(capsys, ["roundtrip", "--seed", "1", "--count", "6", "--max-rank", "2"])
    assert code == 0 and json.loads(out)["matches"] == 6


def test_cli_text_format(capsys):
    code, out = run(capsys, ["invariants", "--knot", "figure-eight", "--format", "text"])
    assert code == 0 and "determinant: 5" in out
