import pytest

from seifert_blanchfield import (Matrix, NotIntertwining, NotNearProjection, RingMismatch, QQ,
                                 SeifertModule, covering, direct_sum, dual_module, dual_morphism,
                                 is_near_projection, laurent_det, make_morphism,
                                 split_near_projection)
from seifert_blanchfield.random_objects import make_rng, random_module
from seifert_blanchfield.seifert import compose_seifert, eval_poly, pi_poly

TREFOIL_E = [[0, 1], [-1, 1]]


def mod(rows):
    return SeifertModule.from_rows(rows)


def test_make_morphism():
    m = mod(TREFOIL_E)
    make_morphism(m, m, m.e)
    make_morphism(m, m, m.one() - m.e)
    with pytest.raises(NotIntertwining):
        make_morphism(mod([[1, 0], [0, 0]]), mod([[0, 0], [0, 1]]), Matrix.identity(2))


def test_dual_module():
    assert dual_module(SeifertModule(Matrix.zeros(2, 2))).e == Matrix.identity(2)
    assert dual_module(mod(TREFOIL_E)).e == Matrix.from_rows([[1, 1], [-1, 0]])
    m = mod([[2, -1], [0, 3]])
    assert dual_module(dual_module(m)) == m


def test_dual_morphism_reverses_composition():
    rng = make_rng(2)
    for _ in range(30):
        m = random_module(rng, 3)
        f = make_morphism(m, m, m.e @ m.e - m.e)
        g = make_morphism(m, m, m.one() - m.e.scale(2))
        fg = compose_seifert(f, g)
        assert dual_morphism(fg).g == compose_seifert(dual_morphism(g), dual_morphism(f)).g
    ident = make_morphism(m, m, m.one())
    assert dual_morphism(ident).g == m.one()


def test_is_near_projection_examples():
    assert is_near_projection(mod([[0, 1], [0, 0]])) == 2
    assert is_near_projection(mod([[1, 0], [0, 0]])) == 1
    assert is_near_projection(mod(TREFOIL_E)) is None
    assert is_near_projection(SeifertModule.zero()) == 1


def test_pi_identity():
    x = mod([[2, 1, 0], [0, -1, 3], [1, 0, 1]]).e
    one = Matrix.identity(3)
    for k in range(1, 6):
        lhs = x ** k + (one - x) ** k
        assert lhs == one + x @ (one - x) @ eval_poly(pi_poly(k), x)


def test_split_examples():
    s = split_near_projection(SeifertModule(Matrix.zeros(2, 2)))
    assert (s.plus.rank, s.minus.rank) == (0, 2)
    s = split_near_projection(SeifertModule(Matrix.identity(2)))
    assert (s.plus.rank, s.minus.rank) == (2, 0)
    s = split_near_projection(mod([[1, 0], [0, 0]]))
    assert (s.plus.rank, s.minus.rank) == (1, 1)
    with pytest.raises(NotNearProjection):
        split_near_projection(mod(TREFOIL_E))


def test_split_random_corpus():
    rng = make_rng(7)
    seen = 0
    for _ in range(300):
        m = random_module(rng)
        k = is_near_projection(m)
        assert (k is not None) == laurent_det(covering(m).d).is_unit()
        if k is None:
            continue
        seen += 1
        s = split_near_projection(m)
        p = s.projector
        assert p @ p == p and p @ m.e == m.e @ p
        assert s.plus.rank + s.minus.rank == m.rank
        assert ((s.plus.one() - s.plus.e) ** k).is_zero()
        assert (s.minus.e ** k).is_zero()
    assert seen > 10


def test_direct_sum():
    a = mod(TREFOIL_E)
    assert direct_sum(a, SeifertModule.zero()) == a
    assert direct_sum(mod([[0]]), mod([[1]])).e == Matrix.from_rows([[0, 0], [0, 1]])
    assert direct_sum(a, a).rank == 4
    with pytest.raises(RingMismatch):
        direct_sum(a, SeifertModule(Matrix.identity(1, QQ)))
