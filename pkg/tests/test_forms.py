import pytest

from seifert_blanchfield import (BlanchfieldForm, LocalizedElement, Matrix, NotNonsingularForm,
                                 NotSymmetric, SeifertModule, SingularForm, alexander,
                                 check_form_morphism, cover_form, determinant_invariant,
                                 localize_form, make_seifert_form, rank_certificate, signature,
                                 symmetrize, uncover, z_power)
from seifert_blanchfield.forms import splitting_polys
from seifert_blanchfield.laurent import LaurentPoly
from seifert_blanchfield.random_objects import (make_rng, pad_form, random_nonsingular_form,
                                                random_pad)
from seifert_blanchfield.seifert import eval_poly

z = z_power(1)
TREFOIL = Matrix.from_rows([[-1, 1], [0, -1]])
FIG8 = Matrix.from_rows([[1, 1], [0, -1]])


def test_make_seifert_form_examples():
    f = make_seifert_form(TREFOIL)
    assert f.e == Matrix.from_rows([[0, 1], [-1, 1]])
    assert f.lam @ f.e == f.theta
    g = make_seifert_form(FIG8)
    assert g.e == Matrix.from_rows([[0, 1], [1, 1]])
    h = make_seifert_form(Matrix.from_rows([[0, 1], [0, 0]]), eta=-1)
    assert h.e == Matrix.from_rows([[0, 0], [0, 1]])
    with pytest.raises(SingularForm):
        make_seifert_form(Matrix.from_rows([[1]]))


def test_symmetrize_idempotent():
    f = make_seifert_form(TREFOIL)
    once = symmetrize(f.theta, f.module, 1)
    assert once.theta == f.theta
    assert symmetrize(once.theta, once.module, 1) == once


def test_cover_form_is_symmetric():
    rng = make_rng(3)
    for i in range(40):
        f = random_nonsingular_form(rng, 1 if i % 2 else -1)
        assert cover_form(f).is_symmetric()


def test_not_symmetric_is_rejected():
    m = SeifertModule(Matrix.from_rows([[0, 1], [-1, 1]]))
    # identity intertwines (P, e) with (P*, 1 - e*) only when e + e* = 1
    b = BlanchfieldForm(m, Matrix.from_rows([[0, 1], [-1, 0]]), 1, 1)
    with pytest.raises(NotSymmetric):
        uncover(b)


def test_check_form_morphism():
    f = make_seifert_form(TREFOIL)
    assert check_form_morphism(f.module.one(), 0, f, f)
    assert not check_form_morphism(f.module.one().scale(2), 0, f, f)
    assert check_form_morphism(f.module.one().scale(-1), 0, f, f)


def test_splitting_polys():
    for k in range(1, 6):
        p, c = splitting_polys(k)
        x = LaurentPoly({1: 1})
        one = LaurentPoly({0: 1})
        pp = sum((x ** i * a for i, a in enumerate(p)), LaurentPoly({}))
        cc = sum((x ** i * a for i, a in enumerate(c)), LaurentPoly({}))
        flip = sum(((one - x) ** i * a for i, a in enumerate(p)), LaurentPoly({}))
        assert pp + flip == one
        assert pp * flip == (x * (one - x)) ** k * cc
        assert all(pp.coeff(d) == 0 for d in range(k))
    assert splitting_polys(1) == ([0, 1], [1])


def test_uncover_shortcut_trefoil():
    f = make_seifert_form(TREFOIL)
    out, trace = uncover(cover_form(f))
    assert trace.shortcut and out == f
    assert rank_certificate(trace).skipped


def _padded_trefoil():
    f = make_seifert_form(TREFOIL)
    return f, pad_form(f, SeifertModule(Matrix.from_rows([[0]])))


def test_uncover_full_path_trefoil():
    f, b = _padded_trefoil()
    out, trace = uncover(b)
    assert not trace.shortcut and trace.k == 1
    assert out.nonsingular
    assert alexander(out) == z * z - z + 1
    assert signature(out) == -2 and determinant_invariant(out) == 3
    assert trace.candidate_ok
    cert = rank_certificate(trace, module=b.module)
    assert cert.doubled_identity


def test_uncover_random_padded():
    rng = make_rng(12)
    for i in range(12):
        eta = 1 if i % 2 == 0 else -1
        f = random_nonsingular_form(rng, eta)
        out, trace = uncover(pad_form(f, random_pad(rng)))
        assert out.nonsingular
        assert alexander(out) == alexander(f)
        assert determinant_invariant(out) == determinant_invariant(f)
        if eta == 1:
            assert signature(out) == signature(f)


def test_uncover_rank_zero_and_zero_form():
    empty = make_seifert_form(Matrix.zeros(0, 0))
    out, trace = uncover(cover_form(empty))
    assert out.rank == 0 and trace.shortcut
    # the zero form on a nilpotent module is a form on the zero Blanchfield module
    nil = SeifertModule(Matrix.from_rows([[0, 1], [0, 0]]))
    out, trace = uncover(BlanchfieldForm(nil, Matrix.zeros(2, 2), 1, 1))
    assert out.nonsingular and alexander(out) == LaurentPoly({0: 1})


def test_uncover_rejects_degenerate_form():
    m = SeifertModule(Matrix.from_rows([[-1]]))
    # zero on a nonzero Blanchfield module is not an isomorphism
    with pytest.raises(NotNonsingularForm):
        uncover(BlanchfieldForm(m, Matrix.zeros(1, 1), 1, -1))


def test_localize_trefoil():
    f = make_seifert_form(TREFOIL)
    loc = localize_form(f)
    for i in range(2):
        for j in range(2):
            expected = LocalizedElement((1 - z) * f.theta[i, j])
            assert loc.entry(i, j) == expected
            assert loc.entry(i, j).cross_equal(expected)
    with pytest.raises(SingularForm):
        localize_form(symmetrize(Matrix.zeros(1, 1), SeifertModule(Matrix.from_rows([[0]]))))


def test_eval_poly_matches_polynomial():
    e = Matrix.from_rows([[0, 1], [-1, 1]])
    p, _c = splitting_polys(2)
    direct = Matrix.zeros(2, 2)
    for i, a in enumerate(p):
        direct = direct + (e ** i).scale(a)
    assert eval_poly(p, e) == direct
