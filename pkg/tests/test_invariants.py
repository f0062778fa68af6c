import pytest
import sympy

from seifert_blanchfield import (Matrix, WrongEta, alexander, determinant_invariant, knot,
                                 make_seifert_form, normalize_unit, signature, z_power)
from seifert_blanchfield.invariants import seifert_oracle_alexander
from seifert_blanchfield.laurent import LaurentPoly
from seifert_blanchfield.linalg import block_diag
from seifert_blanchfield.random_objects import make_rng, random_nonsingular_form
from seifert_blanchfield.seifert import direct_sum
from seifert_blanchfield.forms import SeifertForm

z = z_power(1)
Z = sympy.Symbol("z")


def sympy_alexander(theta: Matrix):
    """det(theta^T - z theta), shifted to start in degree 0 and signed so p(1) = 1."""
    m = sympy.Matrix(theta.tolist()) if theta.rows else sympy.zeros(0, 0)
    p = sympy.Poly(sympy.expand((m.T - Z * m).det()) if theta.rows else 1, Z)
    coeffs = {k[0]: int(v) for k, v in p.as_dict().items()}
    low = min(coeffs)
    poly = LaurentPoly({d - low: c for d, c in coeffs.items()})
    return poly if poly(1) == 1 else -poly


def sympy_signature(theta: Matrix):
    if not theta.rows:
        return 0
    m = sympy.Matrix(theta.tolist())
    vals = (m + m.T).evalf().eigenvals()
    return int(sum(mult * sympy.sign(v) for v, mult in vals.items()))


@pytest.mark.parametrize("name,alex,sig,det", [
    ("unknot", LaurentPoly({0: 1}), 0, 1),
    ("trefoil", z * z - z + 1, -2, 3),
    ("figure-eight", -z * z + 3 * z - 1, 0, 5),
])
def test_knot_table(name, alex, sig, det):
    f = knot(name).form()
    assert alexander(f) == alex
    assert alexander(f) == seifert_oracle_alexander(f.theta) == sympy_alexander(f.theta)
    assert signature(f) == sig == sympy_signature(f.theta)
    assert abs(determinant_invariant(f)) == det


def test_alexander_normalisation():
    f = knot("trefoil").form()
    p = alexander(f)
    assert p(1) == 1 and p.low_degree == 0
    assert normalize_unit(z ** 3 * p) == p


def test_random_forms_against_oracles():
    rng = make_rng(21)
    for _ in range(40):
        f = random_nonsingular_form(rng, 1)
        assert alexander(f) == sympy_alexander(f.theta)
        assert signature(f) == sympy_signature(f.theta)


def test_multiplicativity():
    rng = make_rng(22)
    for i in range(100):
        eta = 1 if i % 2 == 0 else -1
        a = random_nonsingular_form(rng, eta, max_rank=2)
        b = random_nonsingular_form(rng, eta, max_rank=2)
        s = SeifertForm(direct_sum(a.module, b.module),
                        block_diag(a.theta, b.theta), eta)
        assert alexander(s) == alexander(a) * alexander(b)
        assert determinant_invariant(s) == determinant_invariant(a) * determinant_invariant(b)
        if eta == 1:
            assert signature(s) == signature(a) + signature(b)


def test_signature_needs_eta_plus():
    f = make_seifert_form(Matrix.from_rows([[0, 1], [0, 0]]), eta=-1)
    with pytest.raises(WrongEta):
        signature(f)
