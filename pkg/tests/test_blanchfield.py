import pytest

from seifert_blanchfield import (BlanchfieldMorphism, BlanchfieldPresentation, InvalidPresentation,
                                 LaurentMatrix, Matrix, SeifertModule, SourceTargetMismatch,
                                 associated, compose, covering, dual_module, dual_of_morphism,
                                 identity, invert, invert_with_certificate, laurent_det,
                                 is_near_projection, make_blanchfield_morphism, morphism_equal,
                                 reduce_morphism, seifertize, z_power)
from seifert_blanchfield.random_objects import (make_rng, random_invertible_morphism,
                                                random_module, random_presentation)

z = z_power(1)
TREFOIL = SeifertModule.from_rows([[0, 1], [-1, 1]])
LAM = Matrix.from_rows([[0, 1], [-1, 0]])


def pres(rows):
    return BlanchfieldPresentation(LaurentMatrix.from_rows(rows))


def test_covering_examples():
    assert covering(SeifertModule.from_rows([[0]])).d == LaurentMatrix.from_rows([[1]])
    assert covering(SeifertModule.from_rows([[-1]])).d == LaurentMatrix.from_rows([[2 - z]])
    assert covering(TREFOIL).d == LaurentMatrix.from_rows([[1, z - 1], [1 - z, z]])


def test_seifertize_examples():
    assert seifertize(pres([[2 - z]])).e == Matrix.from_rows([[-1]])
    assert seifertize(pres([[z]])).e == Matrix.from_rows([[1]])
    assert seifertize(pres([[z]]), minimal=True).rank == 0
    assert seifertize(covering(TREFOIL)) == TREFOIL
    assert seifertize(pres([[z ** -1 * (2 - z)]])).e == Matrix.from_rows([[-1]])
    with pytest.raises(InvalidPresentation):
        pres([[2]])


def test_seifertize_roundtrip_random():
    rng = make_rng(1)
    for _ in range(150):
        b = random_presentation(rng)
        m = seifertize(b)
        assert associated(laurent_det(covering(m).d), laurent_det(b.d))


def test_zero_covering_iff_near_projection():
    rng = make_rng(9)
    for _ in range(200):
        m = random_module(rng, 3)
        unit = laurent_det(covering(m).d).is_unit()
        assert unit == (is_near_projection(m) is not None)


def test_morphism_equal_examples():
    m = TREFOIL
    f = BlanchfieldMorphism(m, m, m.t_matrix(), 1)
    assert morphism_equal(f, f)
    assert morphism_equal(f, identity(m))
    assert not morphism_equal(BlanchfieldMorphism(m, m, Matrix.zeros(2, 2)), identity(m))
    with pytest.raises(SourceTargetMismatch):
        morphism_equal(identity(m), identity(SeifertModule.zero()))


def test_morphism_equal_sees_nilpotent_part():
    # on a nilpotent module every morphism is zero
    m = SeifertModule.from_rows([[0, 1], [0, 0]])
    assert morphism_equal(identity(m), BlanchfieldMorphism(m, m, Matrix.zeros(2, 2)))


def test_compose_examples():
    m = SeifertModule.from_rows([[2, 1], [0, -1]])
    f = compose(BlanchfieldMorphism(m, m, m.e), BlanchfieldMorphism(m, m, m.one() - m.e))
    assert f.g == m.t_matrix() and f.k == 0
    assert morphism_equal(compose(f, identity(m)), f)
    dual = dual_module(TREFOIL)
    a = make_blanchfield_morphism(TREFOIL, dual, LAM)
    b = make_blanchfield_morphism(dual, TREFOIL, LAM.dual())
    assert morphism_equal(compose(b, a), identity(TREFOIL))


def test_invert_examples():
    assert invert(identity(TREFOIL)) == identity(TREFOIL)
    dual = dual_module(TREFOIL)
    inv = invert(make_blanchfield_morphism(TREFOIL, dual, LAM))
    assert inv.g == Matrix.from_rows([[0, -1], [1, 0]]) and inv.k == 0
    nil = SeifertModule.from_rows([[0, 1], [0, 0]])
    cert = invert_with_certificate(BlanchfieldMorphism(nil, nil, Matrix.zeros(2, 2)))
    assert cert is not None and cert.h.is_zero()


def test_invert_beyond_rank_bound():
    # 4 = (e(1-e))^2 on (Z, e = -1): the exponent exceeds the rank
    m = SeifertModule.from_rows([[-1]])
    f = BlanchfieldMorphism(m, m, Matrix.from_rows([[4]]), 1)
    cert = invert_with_certificate(f)
    assert cert.j == 2
    assert morphism_equal(compose(f, cert.inverse), identity(m))
    assert invert(f, max_power=1) is None


def test_non_invertible():
    m = SeifertModule.from_rows([[-1]])
    assert invert(BlanchfieldMorphism(m, m, Matrix.from_rows([[3]]))) is None


def test_random_invertible_morphisms():
    rng = make_rng(5)
    for _ in range(80):
        f, a = random_invertible_morphism(rng)
        cert = invert_with_certificate(f)
        assert cert is not None and cert.j <= a
        assert morphism_equal(compose(f, cert.inverse), identity(f.target))
        assert morphism_equal(compose(cert.inverse, f), identity(f.source))


def test_dual_of_morphism():
    rng = make_rng(6)
    for _ in range(50):
        f, _a = random_invertible_morphism(rng)
        assert morphism_equal(dual_of_morphism(dual_of_morphism(f)), f)
    assert dual_of_morphism(identity(TREFOIL)) == identity(dual_module(TREFOIL))


def test_reduce_morphism():
    m = SeifertModule.from_rows([[-1]])
    f = BlanchfieldMorphism(m, m, Matrix.from_rows([[4]]), 2)
    r = reduce_morphism(f)
    assert r.k == 0 and r.g == Matrix.from_rows([[1]])
    assert morphism_equal(r, f)
